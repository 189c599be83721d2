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

#include "semdoc/chart_parser.h"

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "doctest.h"
#include "parser_oracle.h"

namespace semdoc {
namespace {

const ResourceBundle &shipped() {
  static const ResourceBundle bundle = load_resources(default_resource_directory());
  return bundle;
}

std::string read_golden(const char *name) {
  std::ifstream in(std::string(SEMDOC_SOURCE_DIR) + "/tests/golden/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  std::string text = out.str();
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

// Bracketed rendering: label[rule](children) or the leaf label.
std::string shape(const ParseNode &node) {
  std::string out = node.label;
  if (node.rule) out += "[" + *node.rule + "]";
  if (!node.children.empty()) {
    out += "(";
    for (size_t i = 0; i < node.children.size(); ++i) {
      if (i) out += " ";
      out += shape(node.children[i]);
    }
    out += ")";
  }
  return out;
}

TEST_CASE("parse: the MEAS4 measurement tree") {
  const std::string text = "1000 x 800 x 350 / 350 mm";
  auto tokens = tag_text(text, shipped());
  auto forest = parse(tokens, shipped().grammar);
  CHECK(forest.find("3D-MS-ENTRY-C", 0, 8).has_value());
  CHECK(forest.find("3D-MS-ENTRY", 0, 5).has_value());
  auto tree = best_parse(forest);
  REQUIRE(tree.has_value());
  CHECK(shape(*tree) ==
        "3D-MS-ENTRY-C[MEAS4](3D-MS-ENTRY[MEAS3](MS-ENTRY[MEAS2](NR) ABBR "
        "MS-ENTRY[MEAS2](NR) ABBR MS-ENTRY[MEAS2](NR)) ABBR MS-ENTRY[MEAS1](NR ABBR))");
  CHECK(tree->begin == 0);
  CHECK(tree->end == 8);

  auto doc = emit_parse_xml(make_document(text), *tree, tokens);
  CHECK(emit_xml(doc, {EmitMode::kCanonical, false}) == read_golden("parse_meas4.xml"));
  CHECK(emit_xml(doc) == "<DOC>" + read_golden("parse_meas4.xml") + "</DOC>");
}

TEST_CASE("parse: small cases") {
  auto single = parse(tag_text("500", shipped()), shipped().grammar);
  auto tree = best_parse(single);
  REQUIRE(tree.has_value());
  CHECK(shape(*tree) == "MS-ENTRY[MEAS2](NR)");
  auto doc = emit_parse_xml(make_document("500"), *tree, tag_text("500", shipped()));
  CHECK(emit_xml(doc) == "<DOC><MS-ENTRY RULE=\"MEAS2\"><NR>500</NR></MS-ENTRY></DOC>");

  auto units = parse(tag_text("mm mm", shipped()), shipped().grammar);
  CHECK_FALSE(units.find("3D-MS-ENTRY-C", 0, 2).has_value());
  CHECK(units.recognized().empty());
  CHECK_FALSE(best_parse(units).has_value());
  CHECK_FALSE(best_parse(parse({}, shipped().grammar)).has_value());

  // The operator x is not a measuring unit.
  auto operator_only = parse(tag_text("500 x", shipped()), shipped().grammar);
  CHECK_FALSE(operator_only.find("MS-ENTRY", 0, 2).has_value());

  auto leaf_doc = emit_parse_xml(make_document("500"), ParseNode{"NR", {}, 0, 1, {}},
                                 tag_text("500", shipped()));
  CHECK(emit_xml(leaf_doc) == "<DOC><NR>500</NR></DOC>");

  const std::string unit_text = "350 mm";
  auto unit_tokens = tag_text(unit_text, shipped());
  auto unit_doc = emit_parse_xml(make_document(unit_text),
                                 *best_parse(parse(unit_tokens, shipped().grammar)), unit_tokens);
  CHECK(emit_xml(unit_doc, {EmitMode::kCanonical, false}) ==
        "<MS-ENTRY RULE=\"MEAS1\"><NR>350</NR> <ABBR>mm</ABBR></MS-ENTRY>");
}

TEST_CASE("best_parse tie-breaks") {
  // Same span and label from two rules: the earlier declaration wins.
  auto grammar = parse_grammar(
      "R0 : B -> N\n"
      "R1 : A -> NR N\n"
      "R2 : C -> N N\n"
      "R3 : D -> NR\n"
      "R4 : A -> NR B\n",
      "g");
  std::vector<TaggedToken> tokens;
  for (auto [tag, surface] : {std::pair{PosTag::kNR, "5"}, std::pair{PosTag::kN, "Form"}}) {
    TaggedToken t;
    t.tag = tag;
    t.surface = surface;
    t.span = {tokens.size() * 2, tokens.size() * 2 + 1};
    tokens.push_back(t);
  }
  auto forest = parse(tokens, grammar);
  auto tree = best_parse(forest);
  REQUIRE(tree.has_value());
  CHECK(shape(*tree) == "A[R1](NR N)");
  // Windowed selection.
  CHECK(shape(*best_parse(forest, std::make_pair(size_t{1}, size_t{2}))) == "B[R0](N)");
  auto pieces = best_parses(forest);
  REQUIRE(pieces.size() == 1);

  // Fewer nodes wins between derivations of one rule's item.
  auto deep = parse_grammar("S0 : A -> B N\nS1 : A -> NR N\nS2 : B -> NR\n", "g");
  CHECK(shape(*best_parse(parse(tokens, deep))) == "A[S0](B[S2](NR) N)");
}

TEST_CASE("best_parses covers disjoint token ranges") {
  const std::string text = "Kastenformat 500 x 600 x 150 / 150 mm und 800 kg Stueckgewicht";
  auto tokens = tag_text(text, shipped());
  auto pieces = best_parses(parse(tokens, shipped().grammar));
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].label == "3D-MS-ENTRY-C");
  CHECK(pieces[0].begin == 1);
  CHECK(pieces[0].end == 9);
  CHECK(shape(pieces[1]) == "WT-ENTRY[MEAS5](MS-ENTRY[MEAS1](NR ABBR) N)");
}

TEST_CASE("property: chart recognition equals the derivation oracle") {
  std::mt19937 rng(31);
  size_t nonempty = 0;
  for (int instance = 0; instance < 300; ++instance) {
    Grammar grammar = testing::random_grammar(rng);
    auto tokens = testing::random_tokens(rng);
    auto forest = parse(tokens, grammar);
    testing::DerivationOracle oracle(grammar, tokens);
    REQUIRE(forest.recognized() == oracle.recognized());
    nonempty += !forest.recognized().empty();
  }
  CHECK(nonempty > 100);
}

// Expands a nonterminal of the shipped grammar into a token sequence.
void sample(const Grammar &grammar, const std::string &label, std::mt19937 &rng,
            std::vector<TaggedToken> &out) {
  std::vector<const GrammarRule *> options;
  for (const auto &p : grammar.productions()) {
    if (p.lhs == label) options.push_back(&p);
  }
  const GrammarRule &production = *options[testing::uniform(rng, 0, options.size() - 1)];
  for (const auto &symbol : production.rhs) {
    if (!symbol.is_terminal()) {
      sample(grammar, symbol.name, rng, out);
      continue;
    }
    TaggedToken token;
    token.tag = *parse_pos_tag(symbol.name);
    if (symbol.surface) {
      token.surface = *symbol.surface;
    } else if (token.tag == PosTag::kNR) {
      token.surface = std::to_string(testing::uniform(rng, 1, 5000));
      token.number = Rational(std::stoll(token.surface));
    } else if (symbol.abbreviation_kind == AbbreviationKind::kMeasuringUnit) {
      token.surface = testing::uniform(rng, 0, 1) ? "mm" : "kg";
    } else {
      token.surface = "Teil";
    }
    if (token.tag == PosTag::kABBR) {
      token.abbreviation_kind = symbol.abbreviation_kind.value_or(AbbreviationKind::kOperatorSymbol);
    }
    token.span = {out.size() * 2, out.size() * 2 + 1};
    out.push_back(token);
  }
}

TEST_CASE("property: sampled measurement strings parse back") {
  std::mt19937 rng(37);
  const Grammar &grammar = shipped().grammar;
  for (int round = 0; round < 500; ++round) {
    const auto &rule = grammar.rules()[testing::uniform(rng, 0, grammar.rules().size() - 1)];
    std::vector<TaggedToken> tokens;
    sample(grammar, rule.lhs, rng, tokens);
    auto forest = parse(tokens, grammar);
    CHECK(forest.find(rule.lhs, 0, tokens.size()).has_value());
    auto first = best_parse(forest);
    REQUIRE(first.has_value());
    CHECK(first->begin == 0);
    CHECK(first->end == tokens.size());
    CHECK(best_parse(forest) == first);

    // Children partition their parent and leaves carry the token tags.
    std::function<void(const ParseNode &)> check = [&](const ParseNode &node) {
      if (node.is_leaf()) {
        CHECK(node.end == node.begin + 1);
        CHECK(node.label == pos_tag_name(tokens[node.begin].tag));
        return;
      }
      size_t at = node.begin;
      for (const auto &child : node.children) {
        CHECK(child.begin == at);
        at = child.end;
        check(child);
      }
      CHECK(at == node.end);
    };
    check(*first);
  }
}

}  // namespace
}  // namespace semdoc
