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

// Concept detection with case-frame filling, and phrasal patterns that turn
// availability sentences into product facts.

#ifndef SEMDOC_CASE_FRAMES_H_
#define SEMDOC_CASE_FRAMES_H_

#include <optional>
#include <string>
#include <vector>

#include "semdoc/doc_model.h"
#include "semdoc/html.h"
#include "semdoc/number.h"
#include "semdoc/pos_tagger.h"
#include "semdoc/resources.h"

namespace semdoc {

struct FilledRelation {
  std::string name;
  std::string assign_to;
  FormConstraint form;
  std::string content;      // e.g. "fuer Grauguss"
  Span content_span;        // code points, same base as the tokens
  size_t filler = 0;        // index of the filler concept
};

struct ConceptInstance {
  std::string concept_type;
  std::string word;  // surface as found, e.g. "Formanlagen"
  std::string description;
  size_t token = 0;
  Span span;
  std::vector<FilledRelation> relations;
};

struct CaseFrameResult {
  std::vector<ConceptInstance> concepts;
  std::vector<std::string> diagnostics;
};

// The lexicon entry for a surface: exact, or with a plural ending n, en or
// e removed. Returns nullptr when none applies.
const SemLexEntry *lookup_concept(const ResourceBundle &bundle, std::string_view surface);

// Relations are searched to the right of the head, up to the next
// punctuation token or verb. A prepositional constraint needs its
// preposition followed by a nominal group; the group's last noun is the
// filler and its concept must belong to the assign-to category.
CaseFrameResult match_case_frames(const std::vector<TaggedToken> &tokens,
                                  const ResourceBundle &bundle);

// The CONCEPTS/CONCEPT/SLOTS/RELATION tree; emit it with synthetic_root
// disabled.
AnnotatedDocument concepts_document(const std::vector<ConceptInstance> &concepts);

// Inline CONCEPT and RELATION annotations over the block text.
AnnotatedDocument annotate_concepts(const AnnotatedDocument &doc, size_t offset,
                                    const std::vector<ConceptInstance> &concepts);

enum class FactRelation { kAvailableAs, kHasFeature };

struct ProductFact {
  std::string product;
  FactRelation relation = FactRelation::kAvailableAs;
  std::optional<std::string> type_id;
  std::optional<std::string> feature;
  std::optional<std::string> value;   // number as written, e.g. "2,68"
  std::optional<Rational> number;
  std::optional<std::string> unit;
  bool contextual = false;
  std::string pattern;

  bool operator==(const ProductFact &) const = default;
};

// Matches whole sentences (final punctuation ignored). Literals compare
// case-insensitively; slots take maximal runs of at least one token. An
// enumeration slot is split on "," and "und" into entries shaped like
// "[als] Typ S mit einer Breite von 2,68 m" or "Typ N (Breite 2,85 m)".
std::vector<ProductFact> match_phrasal_patterns(const std::vector<TaggedToken> &tokens,
                                                const std::vector<PhrasalPattern> &patterns);

// A feature value tied to a product type, the common ground of text facts
// and table rows. Features are canonical names from features.tsv.
struct TypedFeature {
  std::string type_id;
  std::string feature;
  Rational value;

  bool operator==(const TypedFeature &) const = default;
  bool operator<(const TypedFeature &other) const;
};

// The canonical name of a feature word ("Breite" -> "width"); canonical
// names map to themselves. Case-insensitive.
std::optional<std::string> canonical_feature(const ResourceBundle &bundle, std::string_view word);

// Has-feature facts with a type and a number. A contextual fact without a
// type applies to every type the same facts announce as available, which
// is the contextually restricted reading of "Alle Garagen haben ...".
std::vector<TypedFeature> typed_features(const std::vector<ProductFact> &facts, const ResourceBundle &bundle);

// Table triples whose value is a number and whose feature is known.
std::vector<TypedFeature> typed_features(const std::vector<FactTriple> &triples, const ResourceBundle &bundle);

// Splits a block's tokens into sentences at ".", "!" and "?" tokens.
std::vector<std::vector<TaggedToken>> split_sentences(const std::vector<TaggedToken> &tokens);

}  // namespace semdoc

#endif  // SEMDOC_CASE_FRAMES_H_
