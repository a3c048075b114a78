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

#include "citescope/utf8.h"

#include <algorithm>

namespace citescope::utf8 {
namespace {

// Length of the UTF-8 sequence starting at text[i]; 1 for invalid bytes.
std::size_t SequenceLength(std::string_view text, std::size_t i) {
  const auto lead = static_cast<unsigned char>(text[i]);
  std::size_t len = 1;
  if (lead >= 0xF0 && lead <= 0xF4) {
    len = 4;
  } else if (lead >= 0xE0) {
    len = 3;
  } else if (lead >= 0xC2 && lead <= 0xDF) {
    len = 2;
  }
  if (lead >= 0xF5 || (lead >= 0x80 && lead < 0xC2)) return 1;
  if (i + len > text.size()) return 1;
  for (std::size_t k = 1; k < len; ++k) {
    const auto cont = static_cast<unsigned char>(text[i + k]);
    if ((cont & 0xC0) != 0x80) return 1;
  }
  return len;
}

}  // namespace

std::size_t ScalarCount(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < text.size(); i += SequenceLength(text, i)) {
    ++count;
  }
  return count;
}

std::vector<std::size_t> ScalarBoundaries(std::string_view text) {
  std::vector<std::size_t> boundaries;
  boundaries.reserve(text.size() + 1);
  for (std::size_t i = 0; i < text.size(); i += SequenceLength(text, i)) {
    boundaries.push_back(i);
  }
  boundaries.push_back(text.size());
  return boundaries;
}

std::string_view ScalarSubstr(std::string_view text, std::size_t begin,
                              std::size_t end) {
  const auto bounds = ScalarBoundaries(text);
  const std::size_t last = bounds.size() - 1;
  begin = std::min(begin, last);
  end = std::clamp(end, begin, last);
  return text.substr(bounds[begin], bounds[end] - bounds[begin]);
}

}  // namespace citescope::utf8
