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

#include "semdoc/resources.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <sstream>

#include "semdoc/doc_model.h"
#include "semdoc/errors.h"

namespace semdoc {

namespace {

constexpr std::array<std::string_view, 10> kTagNames = {
    "N", "NR", "ABBR", "V", "ADJ", "PREP", "ART", "CONJ", "PUNCT", "UNKNOWN"};

std::string_view trim(std::string_view text) {
  const char *space = " \t\r\n";
  size_t begin = text.find_first_not_of(space);
  if (begin == std::string_view::npos) return {};
  size_t end = text.find_last_not_of(space);
  return text.substr(begin, end - begin + 1);
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  return lowercase(a) == lowercase(b);
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(separator, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos
                                           ? std::string_view::npos
                                           : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Calls fn(line_number, content) for every non-blank, non-comment line.
void for_each_line(std::string_view text,
                   const std::function<void(size_t, std::string_view)> &fn) {
  size_t number = 0;
  for (std::string_view line : split(text, '\n')) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    fn(number, line);
  }
}

std::vector<std::string> tab_fields(std::string_view line) {
  std::vector<std::string> fields;
  for (auto field : split(line, '\t')) fields.emplace_back(trim(field));
  return fields;
}

std::optional<AbbreviationKind> parse_abbreviation_kind(std::string_view name) {
  if (name == "unit") return AbbreviationKind::kMeasuringUnit;
  if (name == "operator") return AbbreviationKind::kOperatorSymbol;
  if (name == "general") return AbbreviationKind::kGeneral;
  return std::nullopt;
}

std::optional<SlotKind> parse_slot_kind(std::string_view name) {
  if (name == "product") return SlotKind::kProduct;
  if (name == "enumeration") return SlotKind::kEnumeration;
  if (name == "feature") return SlotKind::kFeature;
  if (name == "value") return SlotKind::kValue;
  if (name == "type-id") return SlotKind::kTypeId;
  return std::nullopt;
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ResourceFormatError(path.filename().string(), 0, "cannot read file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GrammarSymbol parse_symbol(std::string_view text, const std::string &file,
                           size_t line) {
  GrammarSymbol symbol;
  size_t pos = 0;
  while (pos < text.size() && text[pos] != '"' && text[pos] != '[' &&
         text[pos] != '?') {
    ++pos;
  }
  symbol.name = std::string(text.substr(0, pos));
  if (symbol.name.empty() || !is_xml_name(symbol.name)) {
    throw ResourceFormatError(file, line,
                              "bad symbol '" + std::string(text) + "'");
  }
  if (pos < text.size() && text[pos] == '"') {
    size_t close = text.find('"', pos + 1);
    if (close == std::string_view::npos || close == pos + 1) {
      throw ResourceFormatError(file, line, "bad surface constraint");
    }
    symbol.surface = std::string(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
  }
  if (pos < text.size() && text[pos] == '[') {
    size_t close = text.find(']', pos);
    auto kind = close == std::string_view::npos
                    ? std::nullopt
                    : parse_abbreviation_kind(text.substr(pos + 1, close - pos - 1));
    if (!kind) throw ResourceFormatError(file, line, "bad class constraint");
    symbol.abbreviation_kind = kind;
    pos = close + 1;
  }
  if (pos < text.size() && text[pos] == '?') {
    symbol.optional = true;
    ++pos;
  }
  if (pos != text.size()) {
    throw ResourceFormatError(file, line,
                              "bad symbol '" + std::string(text) + "'");
  }
  if ((symbol.surface || symbol.abbreviation_kind) && !symbol.is_terminal()) {
    throw ResourceFormatError(file, line,
                              "constraint on nonterminal " + symbol.name);
  }
  return symbol;
}

}  // namespace

std::string_view pos_tag_name(PosTag tag) {
  return kTagNames[static_cast<size_t>(tag)];
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  for (size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<PosTag>(i);
  }
  return std::nullopt;
}

std::string_view abbreviation_kind_name(AbbreviationKind kind) {
  switch (kind) {
    case AbbreviationKind::kMeasuringUnit: return "unit";
    case AbbreviationKind::kOperatorSymbol: return "operator";
    case AbbreviationKind::kGeneral: return "general";
  }
  return "general";
}

std::string_view slot_kind_name(SlotKind kind) {
  switch (kind) {
    case SlotKind::kProduct: return "product";
    case SlotKind::kEnumeration: return "enumeration";
    case SlotKind::kFeature: return "feature";
    case SlotKind::kValue: return "value";
    case SlotKind::kTypeId: return "type-id";
  }
  return "product";
}

std::string FormConstraint::to_string() const {
  std::string out = phrase_kind == PhraseKind::kPrepositional ? "P(" : "N(";
  out += case_marker;
  out += facultative ? ", fak" : ", obl";
  if (preposition) out += ", " + *preposition;
  out += ")";
  return out;
}

FormConstraint parse_form_constraint(std::string_view text) {
  text = trim(text);
  auto fail = [&](const std::string &why) -> FormConstraint {
    throw Error("bad form constraint '" + std::string(text) + "': " + why);
  };
  if (text.size() < 4 || text[1] != '(' || text.back() != ')') {
    return fail("expected P(...) or N(...)");
  }
  FormConstraint form;
  if (text[0] == 'P') {
    form.phrase_kind = PhraseKind::kPrepositional;
  } else if (text[0] == 'N') {
    form.phrase_kind = PhraseKind::kNoun;
  } else {
    return fail("unknown phrase kind");
  }
  std::vector<std::string> args;
  for (auto arg : split(text.substr(2, text.size() - 3), ',')) {
    args.emplace_back(trim(arg));
  }
  static const std::array<std::string_view, 4> kCases = {"nom", "gen", "dat", "akk"};
  if (std::find(kCases.begin(), kCases.end(), args[0]) == kCases.end()) {
    return fail("unknown case");
  }
  form.case_marker = args[0];
  size_t next = 1;
  if (next < args.size() && (args[next] == "fak" || args[next] == "obl")) {
    form.facultative = args[next] == "fak";
    ++next;
  }
  if (form.phrase_kind == PhraseKind::kPrepositional) {
    if (next + 1 != args.size() || args[next].empty()) {
      return fail("prepositional phrase needs exactly one preposition");
    }
    form.preposition = args[next];
  } else if (next != args.size()) {
    return fail("noun phrase takes no preposition");
  }
  return form;
}

std::string GrammarSymbol::to_string() const {
  std::string out = name;
  if (surface) out += "\"" + *surface + "\"";
  if (abbreviation_kind) {
    out += "[" + std::string(abbreviation_kind_name(*abbreviation_kind)) + "]";
  }
  if (optional) out += "?";
  return out;
}

Grammar Grammar::from_rules(std::vector<GrammarRule> rules,
                            const std::string &file) {
  Grammar grammar;
  std::set<std::string, std::less<>> names;
  for (size_t i = 0; i < rules.size(); ++i) {
    auto &rule = rules[i];
    rule.order = i;
    if (!names.insert(rule.name).second) {
      throw ResourceFormatError(file, rule.line, "duplicate rule " + rule.name);
    }
    if (parse_pos_tag(rule.lhs)) {
      throw ResourceFormatError(file, rule.line,
                                "left-hand side " + rule.lhs + " is a POS tag");
    }
    if (rule.rhs.empty()) {
      throw ResourceFormatError(file, rule.line, "empty right-hand side");
    }
    grammar.nonterminals_.insert(rule.lhs);
  }
  for (const auto &rule : rules) {
    for (const auto &symbol : rule.rhs) {
      if (!symbol.is_terminal() && !grammar.nonterminals_.count(symbol.name)) {
        throw ResourceFormatError(file, rule.line,
                                  "undefined nonterminal " + symbol.name);
      }
    }
    std::vector<size_t> optional_positions;
    for (size_t k = 0; k < rule.rhs.size(); ++k) {
      if (rule.rhs[k].optional) optional_positions.push_back(k);
    }
    if (optional_positions.size() > 10) {
      throw ResourceFormatError(file, rule.line, "too many optional symbols");
    }
    // Mask bit set = optional symbol present; the full variant comes first.
    size_t variants = size_t{1} << optional_positions.size();
    for (size_t mask = variants; mask-- > 0;) {
      GrammarRule production = rule;
      production.rhs.clear();
      for (size_t k = 0, opt = 0; k < rule.rhs.size(); ++k) {
        bool keep = true;
        if (rule.rhs[k].optional) keep = (mask >> opt++) & 1;
        if (!keep) continue;
        production.rhs.push_back(rule.rhs[k]);
        production.rhs.back().optional = false;
      }
      if (production.rhs.empty()) {
        throw ResourceFormatError(file, rule.line,
                                  "rule " + rule.name + " can derive nothing");
      }
      grammar.productions_.push_back(std::move(production));
    }
  }

  // Unary productions between nonterminals must not form a cycle.
  std::map<std::string, std::set<std::string>, std::less<>> unary;
  for (const auto &p : grammar.productions_) {
    if (p.rhs.size() == 1 && !p.rhs[0].is_terminal()) {
      unary[p.lhs].insert(p.rhs[0].name);
    }
  }
  std::map<std::string, int, std::less<>> state;  // 1 visiting, 2 done
  std::function<bool(const std::string &)> cyclic = [&](const std::string &n) {
    int &s = state[n];
    if (s == 1) return true;
    if (s == 2) return false;
    s = 1;
    for (const auto &next : unary[n]) {
      if (cyclic(next)) return true;
    }
    state[n] = 2;
    return false;
  };
  for (const auto &rule : rules) {
    if (cyclic(rule.lhs)) {
      throw ResourceFormatError(file, rule.line,
                                "cycle of unary rules through " + rule.lhs);
    }
  }
  grammar.rules_ = std::move(rules);
  return grammar;
}

const GrammarRule *Grammar::find_rule(std::string_view name) const {
  for (const auto &rule : rules_) {
    if (rule.name == name) return &rule;
  }
  return nullptr;
}

bool Grammar::is_nonterminal(std::string_view name) const {
  return nonterminals_.find(name) != nonterminals_.end();
}

Grammar parse_grammar(std::string_view text, const std::string &file) {
  std::vector<GrammarRule> rules;
  for_each_line(text, [&](size_t line, std::string_view content) {
    size_t colon = content.find(':');
    size_t arrow = content.find("->");
    if (colon == std::string_view::npos || arrow == std::string_view::npos ||
        arrow < colon) {
      throw ResourceFormatError(file, line, "expected NAME : LHS -> symbols");
    }
    GrammarRule rule;
    rule.line = line;
    rule.name = std::string(trim(content.substr(0, colon)));
    rule.lhs = std::string(trim(content.substr(colon + 1, arrow - colon - 1)));
    if (rule.name.empty() || !is_xml_name(rule.lhs)) {
      throw ResourceFormatError(file, line, "bad rule head");
    }
    std::istringstream symbols(std::string(content.substr(arrow + 2)));
    std::string word;
    while (symbols >> word) rule.rhs.push_back(parse_symbol(word, file, line));
    rules.push_back(std::move(rule));
  });
  return Grammar::from_rules(std::move(rules), file);
}

std::vector<SissAssignment> parse_siss(std::string_view xml,
                                       const std::string &file) {
  std::string_view body = trim(xml);
  if (body.starts_with("<?xml")) {
    size_t end = body.find("?>");
    if (end == std::string_view::npos) {
      throw ResourceFormatError(file, 1, "unterminated XML declaration");
    }
    body = body.substr(end + 2);
  }
  size_t skipped = xml.size() - body.size();  // approximate for line lookup
  auto line_at = [&](size_t byte) {
    return 1 + static_cast<size_t>(
                   std::count(xml.begin(), xml.begin() + std::min(byte, xml.size()), '\n'));
  };

  AnnotatedDocument doc;
  try {
    doc = parse_xml("<DOC>" + std::string(body) + "</DOC>");
  } catch (const MalformedXmlError &e) {
    size_t pos = e.position() >= 5 ? e.position() - 5 + skipped : skipped;
    throw ResourceFormatError(file, line_at(pos), e.what());
  }

  // Annotation spans are text offsets, so source lines are recovered from
  // the order of the ASSIGNMENTS start tags.
  std::vector<size_t> element_lines;
  for (size_t pos = xml.find("<ASSIGNMENTS"); pos != std::string_view::npos;
       pos = xml.find("<ASSIGNMENTS", pos + 1)) {
    element_lines.push_back(line_at(pos));
  }

  std::vector<SissAssignment> out;
  for (size_t i = 0; i < doc.annotations().size(); ++i) {
    const Annotation &element = doc.annotations()[i];
    size_t line = i < element_lines.size() ? element_lines[i] : 0;
    if (element.tag != "ASSIGNMENTS") {
      throw ResourceFormatError(file, line, "unexpected element " + element.tag);
    }
    const std::string *rule = element.attribute("RULE");
    if (!rule || rule->empty()) {
      throw ResourceFormatError(file, line, "ASSIGNMENTS without RULE");
    }
    SissAssignment assignment;
    assignment.rule = *rule;
    assignment.line = line;
    for (const Annotation &child : element.children) {
      const std::string *name = child.attribute("NAME");
      if (child.tag != "COMPONENT" || !name || name->empty()) {
        throw ResourceFormatError(file, line,
                                  "expected COMPONENT with NAME in " + *rule);
      }
      SissComponent component;
      component.name = *name;
      if (!child.children.empty()) {
        const Annotation &expand = child.children.front();
        std::string label(trim(doc.slice(expand.span)));
        if (child.children.size() != 1 || expand.tag != "EXPAND" || label.empty()) {
          throw ResourceFormatError(file, line, "bad COMPONENT content in " + *rule);
        }
        component.interpretation = {SissInterpretation::Kind::kExpand, label};
      } else {
        std::string label(trim(doc.slice(child.span)));
        if (label.empty()) {
          throw ResourceFormatError(file, line, "empty COMPONENT in " + *rule);
        }
        if (label == "NIL") {
          component.interpretation = {SissInterpretation::Kind::kNil, ""};
        } else {
          component.interpretation = {SissInterpretation::Kind::kSense, label};
        }
      }
      assignment.components.push_back(std::move(component));
    }
    if (assignment.components.empty()) {
      throw ResourceFormatError(file, line, "ASSIGNMENTS without components");
    }
    out.push_back(std::move(assignment));
  }
  return out;
}

void check_siss(const std::vector<SissAssignment> &assignments,
                const Grammar &grammar, const std::string &file) {
  std::set<std::string> seen;
  for (const auto &assignment : assignments) {
    if (!seen.insert(assignment.rule).second) {
      throw ResourceFormatError(file, assignment.line,
                                "duplicate assignments for " + assignment.rule);
    }
    bool by_name = grammar.find_rule(assignment.rule) != nullptr;
    if (!by_name && !grammar.is_nonterminal(assignment.rule)) {
      throw ResourceFormatError(file, assignment.line,
                                "unknown rule " + assignment.rule);
    }
    bool arity_ok = false;
    bool names_ok = false;
    for (const auto &p : grammar.productions()) {
      if ((by_name ? p.name : p.lhs) != assignment.rule) continue;
      if (p.rhs.size() != assignment.components.size()) continue;
      arity_ok = true;
      bool same = true;
      for (size_t k = 0; k < p.rhs.size(); ++k) {
        same = same && p.rhs[k].name == assignment.components[k].name;
      }
      names_ok = names_ok || same;
    }
    if (!arity_ok) {
      throw ArityMismatchError(
          file, assignment.line,
          "assignments for " + assignment.rule + " list " +
              std::to_string(assignment.components.size()) +
              " components, which matches no production");
    }
    if (!names_ok) {
      throw ResourceFormatError(file, assignment.line,
                                "component names of " + assignment.rule +
                                    " do not match the rule");
    }
    for (const auto &component : assignment.components) {
      if (component.interpretation.kind == SissInterpretation::Kind::kExpand &&
          !grammar.is_nonterminal(component.name)) {
        throw ResourceFormatError(file, assignment.line,
                                  "EXPAND on terminal component " + component.name);
      }
    }
  }
}

std::vector<PhrasalPattern> parse_patterns(std::string_view text,
                                           const std::string &file) {
  std::vector<PhrasalPattern> patterns;
  std::set<std::string> names;
  for_each_line(text, [&](size_t line, std::string_view content) {
    size_t brace = content.find('{');
    size_t colon = content.substr(0, brace).find(':');
    if (colon == std::string_view::npos) {
      throw ResourceFormatError(file, line, "expected name: pattern");
    }
    PhrasalPattern pattern;
    std::string_view head = trim(content.substr(0, colon));
    if (head.ends_with("[contextual]")) {
      pattern.contextual = true;
      head = trim(head.substr(0, head.size() - 12));
    }
    pattern.name = std::string(head);
    if (pattern.name.empty() || !names.insert(pattern.name).second) {
      throw ResourceFormatError(file, line, "missing or duplicate pattern name");
    }
    std::istringstream words(std::string(content.substr(colon + 1)));
    std::string word;
    bool has_literal = false;
    while (words >> word) {
      PatternElement element;
      if (word.front() == '{') {
        size_t sep = word.find(':');
        if (word.back() != '}' || sep == std::string::npos) {
          throw ResourceFormatError(file, line, "bad slot " + word);
        }
        auto kind = parse_slot_kind(word.substr(sep + 1, word.size() - sep - 2));
        element.is_slot = true;
        element.slot_name = word.substr(1, sep - 1);
        if (!kind || element.slot_name.empty()) {
          throw ResourceFormatError(file, line, "bad slot " + word);
        }
        element.slot_kind = *kind;
        if (!pattern.elements.empty() && pattern.elements.back().is_slot) {
          throw ResourceFormatError(file, line,
                                    "adjacent slots need a literal between them");
        }
      } else {
        element.literal = word;
        has_literal = true;
      }
      pattern.elements.push_back(std::move(element));
    }
    if (!has_literal) {
      throw ResourceFormatError(file, line, "pattern without literal anchor");
    }
    patterns.push_back(std::move(pattern));
  });
  return patterns;
}

const AbbreviationEntry *ResourceBundle::abbreviation(std::string_view surface) const {
  auto it = abbreviations.find(surface);
  return it == abbreviations.end() ? nullptr : &it->second;
}

const SemLexEntry *ResourceBundle::semantic_entry(std::string_view word) const {
  auto it = semantic_lexicon.find(word);
  return it == semantic_lexicon.end() ? nullptr : &it->second;
}

bool ResourceBundle::is_a(std::string_view type, std::string_view category) const {
  std::string current = lowercase(type);
  const std::string wanted = lowercase(category);
  for (size_t guard = 0; guard <= taxonomy.size(); ++guard) {
    if (current == wanted) return true;
    auto it = std::find_if(taxonomy.begin(), taxonomy.end(), [&](const auto &entry) {
      return lowercase(entry.first) == current;
    });
    if (it == taxonomy.end() || it->second.empty()) return false;
    current = lowercase(it->second);
  }
  return false;
}

void parse_abbreviations(std::string_view text, const std::string &file,
                         ResourceBundle &bundle) {
  for_each_line(text, [&](size_t line, std::string_view content) {
    auto fields = tab_fields(content);
    auto kind = fields.size() == 2 ? parse_abbreviation_kind(fields[1]) : std::nullopt;
    if (!kind || fields[0].empty()) {
      throw ResourceFormatError(file, line, "expected surface<TAB>unit|operator|general");
    }
    AbbreviationEntry entry{fields[0], *kind};
    if (!bundle.abbreviations.emplace(fields[0], entry).second) {
      throw ResourceFormatError(file, line, "duplicate abbreviation " + fields[0]);
    }
  });
}

void parse_pos_lexicon(std::string_view text, const std::string &file,
                       ResourceBundle &bundle) {
  for_each_line(text, [&](size_t line, std::string_view content) {
    auto fields = tab_fields(content);
    if (fields.size() != 2 || fields[0].empty()) {
      throw ResourceFormatError(file, line, "expected surface<TAB>tag");
    }
    if (fields[1] == "VSTEM") {
      bundle.verb_stems.insert(fields[0]);
      return;
    }
    auto tag = parse_pos_tag(fields[1]);
    if (!tag) throw ResourceFormatError(file, line, "unknown tag " + fields[1]);
    auto &tags = bundle.pos_lexicon[fields[0]];
    if (std::find(tags.begin(), tags.end(), *tag) != tags.end()) {
      throw ResourceFormatError(file, line, "duplicate entry " + fields[0]);
    }
    tags.push_back(*tag);
  });
}

void parse_taxonomy(std::string_view text, const std::string &file,
                    ResourceBundle &bundle) {
  std::vector<std::pair<size_t, std::string>> parents;
  for_each_line(text, [&](size_t line, std::string_view content) {
    auto fields = tab_fields(content);
    if (fields.empty() || fields.size() > 2 || fields[0].empty()) {
      throw ResourceFormatError(file, line, "expected type[<TAB>parent]");
    }
    std::string parent = fields.size() == 2 ? fields[1] : "";
    if (!bundle.taxonomy.emplace(fields[0], parent).second) {
      throw ResourceFormatError(file, line, "duplicate type " + fields[0]);
    }
    if (!parent.empty()) parents.emplace_back(line, parent);
  });
  for (const auto &[line, parent] : parents) {
    if (!bundle.taxonomy.count(parent)) {
      throw ResourceFormatError(file, line, "undeclared parent type " + parent);
    }
  }
}

void parse_semantic_lexicon(std::string_view text, const std::string &file,
                            ResourceBundle &bundle) {
  auto declared = [&](std::string_view type) {
    return std::any_of(bundle.taxonomy.begin(), bundle.taxonomy.end(),
                       [&](const auto &entry) { return iequals(entry.first, type); });
  };
  for_each_line(text, [&](size_t line, std::string_view content) {
    auto fields = tab_fields(content);
    if (fields.size() < 3 || fields.size() > 4 || fields[0].empty()) {
      throw ResourceFormatError(file, line,
                                "expected word<TAB>type<TAB>description[<TAB>frame]");
    }
    SemLexEntry entry{fields[0], fields[1], fields[2], std::nullopt};
    if (!declared(entry.concept_type)) {
      throw ResourceFormatError(file, line, "undeclared type " + entry.concept_type);
    }
    if (fields.size() == 4 && !fields[3].empty()) {
      CaseFrame frame;
      for (auto spec : split(fields[3], ';')) {
        spec = trim(spec);
        size_t eq = spec.find('=');
        size_t colon = spec.find(':');
        if (eq == std::string_view::npos || colon == std::string_view::npos ||
            colon < eq) {
          throw ResourceFormatError(file, line, "expected NAME=category:FORM");
        }
        RelationSpec relation;
        relation.name = std::string(trim(spec.substr(0, eq)));
        relation.assign_to = std::string(trim(spec.substr(eq + 1, colon - eq - 1)));
        try {
          relation.form = parse_form_constraint(spec.substr(colon + 1));
        } catch (const Error &e) {
          throw ResourceFormatError(file, line, e.what());
        }
        if (!declared(relation.assign_to)) {
          throw ResourceFormatError(file, line, "undeclared type " + relation.assign_to);
        }
        for (const auto &other : frame.relations) {
          if (other.name == relation.name) {
            throw ResourceFormatError(file, line, "duplicate relation " + relation.name);
          }
        }
        frame.relations.push_back(std::move(relation));
      }
      entry.frame = std::move(frame);
    }
    if (!bundle.semantic_lexicon.emplace(entry.word, entry).second) {
      throw ResourceFormatError(file, line, "duplicate word " + entry.word);
    }
  });
}

void parse_features(std::string_view text, const std::string &file,
                    ResourceBundle &bundle) {
  for_each_line(text, [&](size_t line, std::string_view content) {
    auto fields = tab_fields(content);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ResourceFormatError(file, line, "expected surface<TAB>feature");
    }
    if (!bundle.features.emplace(fields[0], fields[1]).second) {
      throw ResourceFormatError(file, line, "duplicate feature " + fields[0]);
    }
  });
}

ResourceBundle load_resources(const std::filesystem::path &directory) {
  auto read = [&](const char *name) { return read_file(directory / name); };
  ResourceBundle bundle;
  parse_abbreviations(read("abbreviations.tsv"), "abbreviations.tsv", bundle);
  parse_pos_lexicon(read("pos.tsv"), "pos.tsv", bundle);
  parse_taxonomy(read("taxonomy.tsv"), "taxonomy.tsv", bundle);
  parse_semantic_lexicon(read("semlex.tsv"), "semlex.tsv", bundle);
  parse_features(read("features.tsv"), "features.tsv", bundle);
  bundle.grammar = parse_grammar(read("measure.grm"), "measure.grm");
  auto assignments = parse_siss(read("siss.xml"), "siss.xml");
  check_siss(assignments, bundle.grammar, "siss.xml");
  for (auto &assignment : assignments) {
    std::string key = assignment.rule;
    bundle.siss.emplace(std::move(key), std::move(assignment));
  }
  bundle.patterns = parse_patterns(read("patterns.pat"), "patterns.pat");
  return bundle;
}

std::filesystem::path default_resource_directory() {
  return SEMDOC_RESOURCE_DIR;
}

}  // namespace semdoc
