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

// Declarative resources of the pipeline and their file formats.

#ifndef SEMDOC_RESOURCES_H_
#define SEMDOC_RESOURCES_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace semdoc {

enum class PosTag { kN, kNR, kABBR, kV, kADJ, kPREP, kART, kCONJ, kPUNCT, kUNKNOWN };

std::string_view pos_tag_name(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

enum class AbbreviationKind { kMeasuringUnit, kOperatorSymbol, kGeneral };

std::string_view abbreviation_kind_name(AbbreviationKind kind);

struct AbbreviationEntry {
  std::string surface;
  AbbreviationKind kind = AbbreviationKind::kGeneral;
};

enum class PhraseKind { kPrepositional, kNoun };

// "P(akk, fak, fuer)" or "N(akk)"; the optionality defaults to obligatory.
struct FormConstraint {
  PhraseKind phrase_kind = PhraseKind::kNoun;
  std::string case_marker;  // nom, gen, dat or akk
  bool facultative = false;
  std::optional<std::string> preposition;

  std::string to_string() const;
  bool operator==(const FormConstraint &) const = default;
};

// Throws Error on anything that is not a well-formed constraint.
FormConstraint parse_form_constraint(std::string_view text);

struct RelationSpec {
  std::string name;
  std::string assign_to;
  FormConstraint form;
};

struct CaseFrame {
  std::vector<RelationSpec> relations;
};

struct SemLexEntry {
  std::string word;
  std::string concept_type;
  std::string description;
  std::optional<CaseFrame> frame;
};

struct GrammarSymbol {
  std::string name;
  // Required token surface, e.g. ABBR"x".
  std::optional<std::string> surface;
  // Required abbreviation class, e.g. ABBR[unit].
  std::optional<AbbreviationKind> abbreviation_kind;
  bool optional = false;

  bool is_terminal() const { return parse_pos_tag(name).has_value(); }
  std::string to_string() const;
  bool operator==(const GrammarSymbol &) const = default;
};

struct GrammarRule {
  std::string name;
  std::string lhs;
  std::vector<GrammarSymbol> rhs;
  // Position of the declaration; ties in parse selection go to the lower.
  size_t order = 0;
  size_t line = 0;
};

// A validated context-free grammar. Rules with optional symbols are
// compiled into one production per combination of present symbols, all
// keeping the rule's name and order.
class Grammar {
 public:
  Grammar() = default;

  // Throws ResourceFormatError (file "<grammar>" unless given) for empty
  // right-hand sides, duplicate rule names, nonterminals named like a POS
  // tag, undefined nonterminals and cycles of unary productions.
  static Grammar from_rules(std::vector<GrammarRule> rules,
                            const std::string &file = "<grammar>");

  const std::vector<GrammarRule> &rules() const { return rules_; }
  const std::vector<GrammarRule> &productions() const { return productions_; }
  const GrammarRule *find_rule(std::string_view name) const;
  bool is_nonterminal(std::string_view name) const;

 private:
  std::vector<GrammarRule> rules_;
  std::vector<GrammarRule> productions_;
  std::set<std::string, std::less<>> nonterminals_;
};

// One "NAME : LHS -> symbols" rule per line; '#' starts a comment.
Grammar parse_grammar(std::string_view text, const std::string &file);

struct SissInterpretation {
  enum class Kind { kSense, kNil, kExpand };
  Kind kind = Kind::kNil;
  std::string label;  // empty for NIL
  bool operator==(const SissInterpretation &) const = default;
};

struct SissComponent {
  std::string name;
  SissInterpretation interpretation;
  bool operator==(const SissComponent &) const = default;
};

// The RULE attribute may name a grammar rule or a nonterminal; a rule
// name is more specific and wins at lookup.
struct SissAssignment {
  std::string rule;
  std::vector<SissComponent> components;
  size_t line = 0;
  bool operator==(const SissAssignment &) const = default;
};

// Parses a sequence of ASSIGNMENTS elements.
std::vector<SissAssignment> parse_siss(std::string_view xml,
                                       const std::string &file);

// Throws ArityMismatchError when no production of the referenced rule or
// nonterminal has as many symbols as the assignment has components, and
// ResourceFormatError for unknown rules or EXPAND on a terminal component.
void check_siss(const std::vector<SissAssignment> &assignments,
                const Grammar &grammar, const std::string &file);

enum class SlotKind { kProduct, kEnumeration, kFeature, kValue, kTypeId };

std::string_view slot_kind_name(SlotKind kind);

struct PatternElement {
  bool is_slot = false;
  std::string literal;    // for literal tokens
  std::string slot_name;  // for slots
  SlotKind slot_kind = SlotKind::kProduct;
};

struct PhrasalPattern {
  std::string name;
  std::vector<PatternElement> elements;
  // Facts from this pattern need contextual interpretation.
  bool contextual = false;
};

// "name: literal {slot:kind} ..." per line, optionally "name [contextual]:".
std::vector<PhrasalPattern> parse_patterns(std::string_view text,
                                           const std::string &file);

struct ResourceBundle {
  std::map<std::string, AbbreviationEntry, std::less<>> abbreviations;
  // Tags per surface in file order; the first one is used.
  std::map<std::string, std::vector<PosTag>, std::less<>> pos_lexicon;
  std::set<std::string, std::less<>> verb_stems;
  // Concept type to parent type (empty for roots).
  std::map<std::string, std::string, std::less<>> taxonomy;
  std::map<std::string, SemLexEntry, std::less<>> semantic_lexicon;
  Grammar grammar;
  std::map<std::string, SissAssignment, std::less<>> siss;
  std::vector<PhrasalPattern> patterns;
  // Surface feature name to canonical name, e.g. Breite -> width.
  std::map<std::string, std::string, std::less<>> features;

  const AbbreviationEntry *abbreviation(std::string_view surface) const;
  const SemLexEntry *semantic_entry(std::string_view word) const;
  // True when type equals category or descends from it; case-insensitive.
  bool is_a(std::string_view type, std::string_view category) const;
};

// Individual line-oriented formats, exposed for tests and tools.
void parse_abbreviations(std::string_view text, const std::string &file,
                         ResourceBundle &bundle);
void parse_pos_lexicon(std::string_view text, const std::string &file,
                       ResourceBundle &bundle);
void parse_taxonomy(std::string_view text, const std::string &file,
                    ResourceBundle &bundle);
void parse_semantic_lexicon(std::string_view text, const std::string &file,
                            ResourceBundle &bundle);
void parse_features(std::string_view text, const std::string &file,
                    ResourceBundle &bundle);

// Loads abbreviations.tsv, pos.tsv, taxonomy.tsv, semlex.tsv, features.tsv,
// measure.grm, siss.xml and patterns.pat from a directory. Throws
// ResourceFormatError with file and line.
ResourceBundle load_resources(const std::filesystem::path &directory);

// The resources directory of the source tree, for tests and defaults.
std::filesystem::path default_resource_directory();

}  // namespace semdoc

#endif  // SEMDOC_RESOURCES_H_
