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

#include "semdoc/case_frames.h"

#include <functional>
#include <map>
#include <set>

namespace semdoc {

namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string uppercase(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

bool iequals(std::string_view a, std::string_view b) { return lowercase(a) == lowercase(b); }

const std::string &written(const TaggedToken &token) {
  return token.expanded_from ? *token.expanded_from : token.surface;
}

std::string join(const std::vector<TaggedToken> &tokens, size_t begin, size_t end) {
  std::string out;
  for (size_t i = begin; i < end; ++i) {
    if (i > begin) out += " ";
    out += written(tokens[i]);
  }
  return out;
}

bool is_nominal(PosTag tag) {
  return tag == PosTag::kART || tag == PosTag::kADJ || tag == PosTag::kN ||
         tag == PosTag::kNR || tag == PosTag::kABBR;
}

// The filler candidate for one relation: [first, last] token range of the
// phrase and the index of its head noun.
struct Candidate {
  size_t first = 0;
  size_t head = 0;
};

std::optional<Candidate> find_candidate(const std::vector<TaggedToken> &tokens, size_t head,
                                        const FormConstraint &form) {
  size_t window_end = head + 1;
  while (window_end < tokens.size() && tokens[window_end].tag != PosTag::kPUNCT &&
         tokens[window_end].tag != PosTag::kV) {
    ++window_end;
  }
  size_t start = head + 1;
  if (form.phrase_kind == PhraseKind::kPrepositional) {
    while (start < window_end && !(tokens[start].tag == PosTag::kPREP &&
                                   iequals(tokens[start].surface, *form.preposition))) {
      ++start;
    }
    if (start == window_end) return std::nullopt;
  }
  size_t group = form.phrase_kind == PhraseKind::kPrepositional ? start + 1 : start;
  std::optional<size_t> noun;
  for (size_t k = group; k < window_end && is_nominal(tokens[k].tag); ++k) {
    if (tokens[k].tag == PosTag::kN) noun = k;
  }
  if (!noun) return std::nullopt;
  return Candidate{start, *noun};
}

void add_text(DocumentBuilder &builder, const char *tag, std::string_view text) {
  builder.element(tag, text);
}

}  // namespace

const SemLexEntry *lookup_concept(const ResourceBundle &bundle, std::string_view surface) {
  if (const auto *entry = bundle.semantic_entry(surface)) return entry;
  for (std::string_view suffix : {"n", "en", "e"}) {
    if (surface.size() > suffix.size() + 1 && surface.ends_with(suffix)) {
      if (const auto *entry = bundle.semantic_entry(surface.substr(0, surface.size() - suffix.size()))) {
        return entry;
      }
    }
  }
  return nullptr;
}

CaseFrameResult match_case_frames(const std::vector<TaggedToken> &tokens,
                                  const ResourceBundle &bundle) {
  CaseFrameResult result;
  std::map<size_t, size_t> concept_at;
  std::vector<const SemLexEntry *> entries;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const SemLexEntry *entry = lookup_concept(bundle, tokens[i].surface);
    if (!entry) continue;
    concept_at[i] = result.concepts.size();
    entries.push_back(entry);
    result.concepts.push_back(
        {entry->concept_type, tokens[i].surface, entry->description, i, tokens[i].span, {}});
  }

  for (size_t c = 0; c < result.concepts.size(); ++c) {
    if (!entries[c]->frame) continue;
    ConceptInstance &instance = result.concepts[c];
    for (const RelationSpec &relation : entries[c]->frame->relations) {
      auto unfilled = [&](const std::string &why) {
        result.diagnostics.push_back(instance.word + ": " + relation.name + " (" +
                                     relation.form.to_string() + ") unfilled: " + why);
      };
      auto candidate = find_candidate(tokens, instance.token, relation.form);
      if (!candidate) {
        if (!relation.form.facultative) unfilled("no matching phrase");
        continue;
      }
      auto filler = concept_at.find(candidate->head);
      if (filler == concept_at.end()) {
        unfilled("'" + tokens[candidate->head].surface + "' has no concept");
        continue;
      }
      const ConceptInstance &filler_concept = result.concepts[filler->second];
      if (!bundle.is_a(filler_concept.concept_type, relation.assign_to)) {
        unfilled("'" + filler_concept.word + "' is " + filler_concept.concept_type + ", not " +
                 relation.assign_to);
        continue;
      }
      FilledRelation filled;
      filled.name = relation.name;
      filled.assign_to = relation.assign_to;
      filled.form = relation.form;
      filled.content = join(tokens, candidate->first, candidate->head + 1);
      filled.content_span = {tokens[candidate->first].span.begin, tokens[candidate->head].span.end};
      filled.filler = filler->second;
      instance.relations.push_back(std::move(filled));
    }
  }
  return result;
}

AnnotatedDocument concepts_document(const std::vector<ConceptInstance> &concepts) {
  DocumentBuilder builder;
  builder.open("CONCEPTS");
  for (const auto &instance : concepts) {
    builder.open("CONCEPT", {{"TYPE", instance.concept_type}});
    add_text(builder, "WORD", instance.word);
    add_text(builder, "DESC", instance.description);
    if (!instance.relations.empty()) {
      builder.open("SLOTS");
      for (const auto &relation : instance.relations) {
        builder.open("RELATION", {{"TYPE", relation.name}});
        add_text(builder, "ASSIGN-TO", uppercase(relation.assign_to));
        add_text(builder, "FORM", relation.form.to_string());
        add_text(builder, "CONTENT", relation.content);
        builder.close();
      }
      builder.close();
    }
    builder.close();
  }
  builder.close();
  return std::move(builder).build();
}

AnnotatedDocument annotate_concepts(const AnnotatedDocument &doc, size_t offset,
                                    const std::vector<ConceptInstance> &concepts) {
  AnnotatedDocument out = doc;
  auto shift = [&](Span span) { return Span{span.begin + offset, span.end + offset}; };
  for (const auto &instance : concepts) {
    for (const auto &relation : instance.relations) {
      out = out.annotate(shift(relation.content_span), "RELATION",
                         {{"TYPE", relation.name}, {"FORM", relation.form.to_string()}});
    }
  }
  for (const auto &instance : concepts) {
    out = out.annotate(shift(instance.span), "CONCEPT",
                       {{"TYPE", instance.concept_type}, {"DESC", instance.description}});
  }
  return out;
}

std::vector<std::vector<TaggedToken>> split_sentences(const std::vector<TaggedToken> &tokens) {
  std::vector<std::vector<TaggedToken>> sentences;
  std::vector<TaggedToken> current;
  for (const auto &token : tokens) {
    current.push_back(token);
    if (token.tag == PosTag::kPUNCT &&
        (token.surface == "." || token.surface == "!" || token.surface == "?")) {
      sentences.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

namespace {

using Range = std::pair<size_t, size_t>;

bool match_elements(const std::vector<TaggedToken> &tokens, const PhrasalPattern &pattern,
                    size_t element, size_t at, std::map<std::string, Range> &captures) {
  if (element == pattern.elements.size()) return at == tokens.size();
  const PatternElement &e = pattern.elements[element];
  if (!e.is_slot) {
    return at < tokens.size() && iequals(tokens[at].surface, e.literal) &&
           match_elements(tokens, pattern, element + 1, at + 1, captures);
  }
  for (size_t end = tokens.size(); end > at; --end) {
    captures[e.slot_name] = {at, end};
    if (match_elements(tokens, pattern, element + 1, end, captures)) return true;
  }
  captures.erase(e.slot_name);
  return false;
}

// Number and unit from the first NR token in a range.
void read_value(const std::vector<TaggedToken> &tokens, size_t begin, size_t end,
                ProductFact &fact) {
  for (size_t k = begin; k < end; ++k) {
    if (tokens[k].tag != PosTag::kNR) continue;
    fact.value = tokens[k].surface;
    fact.number = tokens[k].number;
    if (k + 1 < end && tokens[k + 1].tag == PosTag::kABBR) fact.unit = tokens[k + 1].surface;
    return;
  }
}

// "[als] Typ S mit einer Breite von 2,68 m" or "[als] Typ N ( Breite 2,85 m )".
void parse_type_entry(const std::vector<TaggedToken> &tokens, size_t begin, size_t end,
                      const ProductFact &base, std::vector<ProductFact> &out) {
  while (begin < end && iequals(tokens[begin].surface, "als")) ++begin;
  size_t split = begin;
  while (split < end && !iequals(tokens[split].surface, "mit") && tokens[split].surface != "(") {
    ++split;
  }
  if (split == begin) return;
  ProductFact available = base;
  available.relation = FactRelation::kAvailableAs;
  available.type_id = tokens[split - 1].surface;
  out.push_back(available);
  if (split == end) return;

  size_t k = split + 1;
  if (tokens[split].surface != "(") {
    while (k < end && tokens[k].tag == PosTag::kART) ++k;
  }
  if (k >= end || tokens[k].tag != PosTag::kN) return;
  ProductFact feature = available;
  feature.relation = FactRelation::kHasFeature;
  feature.feature = tokens[k].surface;
  read_value(tokens, k + 1, end, feature);
  if (feature.value) out.push_back(feature);
}

}  // namespace

std::vector<ProductFact> match_phrasal_patterns(const std::vector<TaggedToken> &sentence,
                                                const std::vector<PhrasalPattern> &patterns) {
  std::vector<TaggedToken> tokens = sentence;
  while (!tokens.empty() && tokens.back().tag == PosTag::kPUNCT &&
         (tokens.back().surface == "." || tokens.back().surface == "!" ||
          tokens.back().surface == "?")) {
    tokens.pop_back();
  }
  std::vector<ProductFact> facts;
  for (const auto &pattern : patterns) {
    std::map<std::string, Range> captures;
    if (!match_elements(tokens, pattern, 0, 0, captures)) continue;
    ProductFact base;
    base.contextual = pattern.contextual;
    base.pattern = pattern.name;
    std::optional<Range> enumeration, type_id, feature, value;
    for (const auto &e : pattern.elements) {
      if (!e.is_slot) continue;
      Range range = captures.at(e.slot_name);
      switch (e.slot_kind) {
        case SlotKind::kProduct: base.product = join(tokens, range.first, range.second); break;
        case SlotKind::kEnumeration: enumeration = range; break;
        case SlotKind::kTypeId: type_id = range; break;
        case SlotKind::kFeature: feature = range; break;
        case SlotKind::kValue: value = range; break;
      }
    }
    if (type_id) base.type_id = tokens[type_id->second - 1].surface;
    if (enumeration) {
      size_t depth = 0, start = enumeration->first;
      for (size_t k = enumeration->first; k <= enumeration->second; ++k) {
        bool at_end = k == enumeration->second;
        if (!at_end) {
          const auto &s = tokens[k].surface;
          if (s == "(") ++depth;
          if (s == ")" && depth > 0) --depth;
          if (depth > 0 || (s != "," && !iequals(s, "und"))) continue;
        }
        parse_type_entry(tokens, start, k, base, facts);
        start = k + 1;
      }
    } else if (type_id && !(feature && value)) {
      ProductFact available = base;
      available.relation = FactRelation::kAvailableAs;
      facts.push_back(available);
    }
    if (feature && value) {
      ProductFact fact = base;
      fact.relation = FactRelation::kHasFeature;
      fact.feature = join(tokens, feature->first, feature->second);
      read_value(tokens, value->first, value->second, fact);
      if (fact.value) facts.push_back(fact);
    }
  }
  return facts;
}

bool TypedFeature::operator<(const TypedFeature &other) const {
  if (type_id != other.type_id) return type_id < other.type_id;
  if (feature != other.feature) return feature < other.feature;
  return value < other.value;
}

std::optional<std::string> canonical_feature(const ResourceBundle &bundle, std::string_view word) {
  std::string key = lowercase(word);
  for (const auto &[surface, canonical] : bundle.features)
    if (lowercase(surface) == key || lowercase(canonical) == key) return canonical;
  return std::nullopt;
}

std::vector<TypedFeature> typed_features(const std::vector<ProductFact> &facts, const ResourceBundle &bundle) {
  std::set<std::string> announced;
  for (const auto &fact : facts)
    if (fact.relation == FactRelation::kAvailableAs && fact.type_id) announced.insert(*fact.type_id);
  std::set<TypedFeature> out;
  for (const auto &fact : facts) {
    if (fact.relation != FactRelation::kHasFeature || !fact.feature || !fact.number) continue;
    auto feature = canonical_feature(bundle, *fact.feature);
    if (!feature) continue;
    if (fact.type_id) {
      out.insert({*fact.type_id, *feature, *fact.number});
    } else if (fact.contextual) {
      for (const auto &type : announced) out.insert({type, *feature, *fact.number});
    }
  }
  return {out.begin(), out.end()};
}

std::vector<TypedFeature> typed_features(const std::vector<FactTriple> &triples, const ResourceBundle &bundle) {
  std::set<TypedFeature> out;
  for (const auto &triple : triples) {
    auto feature = canonical_feature(bundle, triple.feature);
    auto value = parse_german_number(triple.value);
    if (feature && value) out.insert({triple.entity, *feature, *value});
  }
  return {out.begin(), out.end()};
}

}  // namespace semdoc
