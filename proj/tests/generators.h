// Copyright 2026 The Semdoc Authors.
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

// Random instance generators shared by the property suites.

#ifndef SEMDOC_TESTS_GENERATORS_H_
#define SEMDOC_TESTS_GENERATORS_H_

#include <random>
#include <string>
#include <vector>

#include "semdoc/doc_model.h"
#include "semdoc/errors.h"

namespace semdoc::testing {

inline size_t uniform(std::mt19937 &rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

inline std::string random_text(std::mt19937 &rng, size_t max_chars) {
  static const std::vector<std::string> kPieces = {
      "a", "b", "x", " ", "5", "<", ">", "&", "\"", "'", "\xC3\xA4",
      "\xC3\x9F", "\xE2\x80\xA2", "\n"};
  std::string text;
  size_t n = uniform(rng, 0, max_chars);
  for (size_t i = 0; i < n; ++i) text += kPieces[uniform(rng, 0, kPieces.size() - 1)];
  return text;
}

// A document with up to `attempts` random annotations; partially overlapping
// attempts are rejected by annotate and simply skipped.
inline AnnotatedDocument random_document(std::mt19937 &rng,
                                         size_t max_chars = 16,
                                         size_t attempts = 8) {
  static const std::vector<std::string> kTags = {"N", "NR", "ABBR",
                                                 "MS-ENTRY", "3D-X", "p"};
  static const std::vector<std::string> kValues = {"MEAS1", "a<b", "\"q\"",
                                                   "x & y", ""};
  AnnotatedDocument doc(random_text(rng, max_chars));
  for (size_t i = 0; i < attempts; ++i) {
    size_t a = uniform(rng, 0, doc.length());
    size_t b = uniform(rng, 0, doc.length());
    if (a > b) std::swap(a, b);
    Attributes attributes;
    if (uniform(rng, 0, 2) == 0) {
      attributes.emplace_back("RULE", kValues[uniform(rng, 0, kValues.size() - 1)]);
    }
    if (uniform(rng, 0, 4) == 0) attributes.emplace_back("K", "v");
    try {
      doc = doc.annotate({a, b}, kTags[uniform(rng, 0, kTags.size() - 1)],
                         attributes);
    } catch (const OverlapError &) {
    }
  }
  return doc;
}

}  // namespace semdoc::testing

#endif  // SEMDOC_TESTS_GENERATORS_H_
