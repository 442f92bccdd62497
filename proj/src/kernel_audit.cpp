// Copyright 2026 The bpword Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Out-of-line instances of the word kernels, compiled on their own so the
// acceptance suite can disassemble them and look for conditional branches.

#include "bpword/word_parens.hpp"

using bpword::SubwordWidth;
using bpword::Word;

extern "C" {

Word bpword_audit_sub_parallel(Word x, Word y) { return bpword::sub_parallel(x, y, SubwordWidth::k8); }

Word bpword_audit_sub_parallel_positive(Word x, Word y) {
	return bpword::sub_parallel_positive(x, y, SubwordWidth::k8);
}

Word bpword_audit_nonzero_blocks(Word x) { return bpword::nonzero_blocks(x, SubwordWidth::k16); }

Word bpword_audit_truncated_diff(Word x, Word y) { return bpword::truncated_diff(x, y, SubwordWidth::k32); }

int bpword_audit_lsb(Word x) { return bpword::lsb(x); }

int bpword_audit_find_close_in_word(Word x) { return bpword::find_close_in_word(x); }

void bpword_audit_far_count_pyramid(Word x, bpword::FarCountPyramid* out) { *out = bpword::far_count_pyramid(x); }

unsigned bpword_audit_count_far_open(Word x) { return bpword::count_far_open(x); }

unsigned bpword_audit_count_far_closed(Word x) { return bpword::count_far_closed(x); }

unsigned bpword_audit_select_far_closed(Word x, unsigned p) { return bpword::select_far_closed(x, p); }

} // extern "C"
