// Copyright 2026 The CiteScope Authors.
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

#ifndef CITESCOPE_UTF8_H_
#define CITESCOPE_UTF8_H_

#include <cstddef>
#include <string_view>
#include <vector>

namespace citescope::utf8 {

// Number of Unicode scalar values in `text`. Invalid bytes count as one
// scalar each so that offsets stay well defined on malformed input.
std::size_t ScalarCount(std::string_view text);

// Byte offset of every scalar value boundary in `text`: element i is the
// byte offset of scalar i, and the last element equals text.size().
std::vector<std::size_t> ScalarBoundaries(std::string_view text);

// Substring by scalar-value indices [begin, end).
std::string_view ScalarSubstr(std::string_view text, std::size_t begin,
                              std::size_t end);

}  // namespace citescope::utf8

#endif  // CITESCOPE_UTF8_H_
