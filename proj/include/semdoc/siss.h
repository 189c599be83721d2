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

// Semantic interpretation of parse trees through positional assignments.

#ifndef SEMDOC_SISS_H_
#define SEMDOC_SISS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semdoc/chart_parser.h"
#include "semdoc/doc_model.h"
#include "semdoc/number.h"
#include "semdoc/resources.h"

namespace semdoc {

struct SenseBinding {
  std::string sense;
  Rational value;
  std::optional<std::string> unit;
  Span source_span;  // code points, same base as the token spans
  // The interpreted tree's root, e.g. 3D-MS-ENTRY-C over the whole phrase.
  std::string origin_label;
  Span origin_span;

  bool operator==(const SenseBinding &) const = default;
};

using SissLexicon = std::map<std::string, SissAssignment, std::less<>>;

// Looks up the assignment for a node: by rule name first, then by label.
const SissAssignment *find_assignment(const SissLexicon &lexicon, const ParseNode &node);

// Components align with the node's children. NIL children are skipped.
// EXPAND recurses when the child has an assignment of its own; otherwise
// the EXPAND label is the child's sense. A sense-labelled child yields its
// first number, with the first measuring unit at or after the child
// anywhere in the tree (so "1000 x 800 x 350 / 350 mm" is all in mm).
// Throws NoAssignmentError for the root and ShapeMismatchError when the
// component count differs from the child count or a sensed child holds no
// number.
std::vector<SenseBinding> interpret(const ParseNode &tree,
                                    const std::vector<TaggedToken> &tokens,
                                    const SissLexicon &lexicon);

}  // namespace semdoc

#endif  // SEMDOC_SISS_H_
