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

#ifndef SEMDOC_POS_TAGGER_H_
#define SEMDOC_POS_TAGGER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semdoc/doc_model.h"
#include "semdoc/number.h"
#include "semdoc/resources.h"

namespace semdoc {

struct TaggedToken {
  std::string surface;
  Span span;  // code points into the block text
  PosTag tag = PosTag::kUNKNOWN;
  std::optional<Rational> number;  // set iff tag is NR
  std::optional<AbbreviationKind> abbreviation_kind;  // set for ABBR
  // Surface as written, for tokens rewritten by truncation expansion.
  std::optional<std::string> expanded_from;

  bool operator==(const TaggedToken &) const = default;
};

// Whitespace split, then punctuation from ".,;:!?()" separated except
// inside digit runs ("14.000", "2,68") and points between letters ("z.B").
// A number with a unit glued to it ("2,68m") becomes two tokens.
std::vector<TaggedToken> tokenize(std::string_view text);

std::vector<TaggedToken> tag_tokens(std::vector<TaggedToken> tokens,
                                    const ResourceBundle &bundle);

// Rewrites "Klein- und Mittelserien" so that the first token reads
// "Kleinserien" (tag N, original surface kept in expanded_from). The
// token sequence keeps its length and spans.
std::vector<TaggedToken> expand_truncated_coordination(
    std::vector<TaggedToken> tokens, const ResourceBundle &bundle);

// tokenize, tag_tokens and expand_truncated_coordination in one call.
std::vector<TaggedToken> tag_text(std::string_view text,
                                  const ResourceBundle &bundle);

// Adds one leaf annotation per token, named after its tag, with token
// spans shifted by offset. Expanded tokens get an EXPANDED attribute.
AnnotatedDocument annotate_tokens(const AnnotatedDocument &doc, size_t offset,
                                  const std::vector<TaggedToken> &tokens);

}  // namespace semdoc

#endif  // SEMDOC_POS_TAGGER_H_
