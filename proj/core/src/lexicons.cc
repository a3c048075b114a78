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

#include <string_view>

#include "citescope/context.h"
#include "citescope/textproc.h"

namespace citescope {
namespace embedded {
extern const std::string_view kStopwords;
extern const std::string_view kAbbreviations;
extern const std::string_view kVerbs;
extern const std::string_view kSynonyms;
}  // namespace embedded

const Lexicons& Lexicons::Default() {
  static const Lexicons* const kDefault = [] {
    auto* lexicons = new Lexicons;
    lexicons->stopwords = ParseWordList(embedded::kStopwords);
    lexicons->abbreviations = ParseWordList(embedded::kAbbreviations);
    lexicons->verbs = ParseWordList(embedded::kVerbs);
    return lexicons;
  }();
  return *kDefault;
}

const SynonymDictionary& SynonymDictionary::Default() {
  static const SynonymDictionary* const kDefault =
      new SynonymDictionary(SynonymDictionary::Parse(embedded::kSynonyms));
  return *kDefault;
}

}  // namespace citescope
