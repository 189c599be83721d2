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

// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "dtd_oracle.h"
#include "generators.h"
#include "output_tree.h"
#include "parser_oracle.h"
#include "semdoc/case_frames.h"
#include "semdoc/chart_parser.h"
#include "semdoc/dtd.h"
#include "semdoc/html.h"
#include "semdoc/pipeline.h"
#include "semdoc/pos_tagger.h"
#include "semdoc/siss.h"

namespace semdoc {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const ResourceBundle &shipped() {
  static const ResourceBundle bundle = load_resources(default_resource_directory());
  return bundle;
}

// Golden files end with a newline that the emitted XML does not have.
std::string golden(const char *name) {
  std::string text = testing::slurp(fs::path(SEMDOC_SOURCE_DIR) / "tests/golden" / name);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

Outcome golden_pos() {
  auto start = Clock::now();
  const std::string text = "Kastenformat 500 x 600 x 150 / 150 mm";
  auto tokens = tag_text(text, shipped());
  std::string tags;
  for (const auto &t : tokens) tags += (tags.empty() ? "" : " ") + std::string(pos_tag_name(t.tag));
  std::string xml = emit_xml(annotate_tokens(make_document(text), 0, tokens));
  double elapsed = seconds_since(start);
  bool pass = tags == "N NR ABBR NR ABBR NR ABBR NR ABBR" && xml == golden("pos_kastenformat.xml") && elapsed < 1.0;
  return {pass, "tags " + tags + ", " + seconds(elapsed)};
}

Outcome golden_parse() {
  auto start = Clock::now();
  const std::string text = "1000 x 800 x 350 / 350 mm";
  auto tokens = tag_text(text, shipped());
  auto tree = best_parse(parse(tokens, shipped().grammar));
  if (!tree) return {false, "no parse"};
  std::string xml = emit_xml(emit_parse_xml(make_document(text), *tree, tokens), {EmitMode::kCanonical, false});
  double elapsed = seconds_since(start);
  bool pass = tree->label == "3D-MS-ENTRY-C" && xml == golden("parse_meas4.xml") && elapsed < 1.0;
  return {pass, "root " + tree->label + ", " + seconds(elapsed)};
}

Outcome golden_siss() {
  const std::string text = "1000 x 800 x 350 / 350 mm";
  auto tokens = tag_text(text, shipped());
  auto tree = best_parse(parse(tokens, shipped().grammar));
  if (!tree) return {false, "no parse"};
  std::vector<std::string> got;
  for (const auto &b : interpret(*tree, tokens, shipped().siss))
    got.push_back(b.sense + "=" + format_german_number(b.value) + (b.unit ? " " + *b.unit : ""));
  std::vector<std::string> expected = {"dimension-height=1000 mm", "dimension-length=800 mm",
                                       "dimension-width=350 mm", "dimension-diameter=350 mm"};
  std::string detail;
  for (const auto &g : got) detail += (detail.empty() ? "" : ", ") + g;
  return {got == expected, detail};
}

Outcome golden_case_frame() {
  auto result = match_case_frames(tag_text("Formanlagen fuer Grauguss", shipped()), shipped());
  std::string xml = emit_xml(concepts_document(result.concepts), {EmitMode::kCanonical, false});
  // Canonical form on both sides: parse and re-emit.
  std::string expected = emit_xml(parse_xml(golden("case_frame_formanlagen.xml")), {EmitMode::kCanonical, false});
  return {xml == expected && result.diagnostics.empty(),
          std::to_string(result.concepts.size()) + " concepts"};
}

Outcome garage_paraphrase() {
  const std::string text =
      "Wunschbox-Garagen sind als Typ S mit einer Breite von 2,68m, als Typ N (Breite 2,85m) "
      "und als Typ B (Breite 2,98m) lieferbar. Alle Garagen haben eine Hoehe von 2,46m.";
  std::vector<ProductFact> facts;
  for (const auto &sentence : split_sentences(tag_text(text, shipped()))) {
    auto found = match_phrasal_patterns(sentence, shipped().patterns);
    facts.insert(facts.end(), found.begin(), found.end());
  }
  bool contextual_marked = std::any_of(facts.begin(), facts.end(), [](const ProductFact &f) {
    return f.contextual && f.feature && *f.feature == "Hoehe";
  });
  auto blocks = clean_html(
      "<table><tr><th>type</th><th>width</th><th>height</th></tr>"
      "<tr><td>S</td><td>2,68</td><td>2,46</td></tr>"
      "<tr><td>N</td><td>2,85</td><td>2,46</td></tr>"
      "<tr><td>B</td><td>2,98</td><td>2,46</td></tr></table>");
  std::vector<FactTriple> triples;
  for (const auto &table : group_tables(blocks)) {
    auto t = extract_table_facts(table);
    triples.insert(triples.end(), t.begin(), t.end());
  }
  auto from_text = typed_features(facts, shipped());
  auto from_table = typed_features(triples, shipped());
  auto restrict = [](const std::vector<TypedFeature> &items, const std::set<std::string> &types) {
    std::set<TypedFeature> out;
    for (const auto &f : items)
      if ((f.feature == "width" || f.feature == "height") && types.count(f.type_id)) out.insert(f);
    return out;
  };
  std::set<std::string> text_types, table_types, shared;
  for (const auto &f : from_text) text_types.insert(f.type_id);
  for (const auto &f : from_table) table_types.insert(f.type_id);
  for (const auto &t : text_types)
    if (table_types.count(t)) shared.insert(t);
  auto a = restrict(from_text, shared);
  auto b = restrict(from_table, shared);
  return {contextual_marked && a == b && a.size() == 6,
          std::to_string(a.size()) + " text items, " + std::to_string(b.size()) + " table items, " +
              (contextual_marked ? "height sentence contextual" : "height sentence not contextual")};
}

Outcome parser_oracle() {
  auto start = Clock::now();
  std::mt19937 rng(20260601);
  size_t agree = 0;
  const size_t instances = 1000;
  for (size_t i = 0; i < instances; ++i) {
    Grammar grammar = testing::random_grammar(rng, 5);
    auto tokens = testing::random_tokens(rng, 8);
    auto forest = parse(tokens, grammar);
    if (forest.recognized() == testing::DerivationOracle(grammar, tokens).recognized()) ++agree;
  }
  double elapsed = seconds_since(start);
  return {agree == instances && elapsed < 60.0,
          std::to_string(agree) + "/" + std::to_string(instances) + " agree, " + seconds(elapsed)};
}

Outcome dtd_oracle() {
  auto start = Clock::now();
  std::mt19937 rng(20260602);
  size_t agree = 0, valid = 0;
  const size_t instances = 1000;
  for (size_t i = 0; i < instances; ++i) {
    auto models = testing::random_models(rng);
    Dtd dtd = parse_dtd(testing::dtd_text(models));
    std::string root = testing::dtd_names()[testing::uniform(rng, 0, 2)];
    auto tree = testing::random_tree(rng, models, root, 1);
    bool expected = testing::invalid_paths(models, tree, "/" + root + "[1]").empty();
    bool actual = validate(testing::tree_document(tree), dtd).valid();
    agree += expected == actual;
    valid += expected;
  }
  double elapsed = seconds_since(start);
  return {agree == instances && elapsed < 60.0,
          std::to_string(agree) + "/" + std::to_string(instances) + " agree (" + std::to_string(valid) +
              " valid), " + seconds(elapsed)};
}

Outcome xml_round_trip() {
  std::mt19937 rng(20260603);
  size_t ok = 0;
  const size_t instances = 1000;
  for (size_t i = 0; i < instances; ++i) {
    auto doc = testing::random_document(rng);
    ok += parse_xml(emit_xml(doc)) == doc;
  }
  return {ok == instances, std::to_string(ok) + "/" + std::to_string(instances) + " round trips"};
}

Outcome pipeline_determinism() {
  auto corpus = fs::path(SEMDOC_SOURCE_DIR) / "tests/fixtures/corpus";
  std::map<std::string, std::string> trees[2];
  for (int run = 0; run < 2; ++run) {
    PipelineConfig config;
    config.manifest = corpus / "manifest.tsv";
    config.resources = default_resource_directory();
    config.out = testing::scratch_dir("semdoc-acceptance");
    std::ostringstream log;
    int status = run_pipeline(config, log);
    trees[run] = testing::read_tree(config.out);
    fs::remove_all(config.out);
    if (status != 0) return {false, "exit status " + std::to_string(status)};
  }
  auto counts = testing::summary_counts(trees[0]["summary.txt"]);
  bool classes = counts["information"] == 1 && counts["lead"] == 1 && counts["overview"] == 1;
  return {trees[0] == trees[1] && classes,
          std::to_string(trees[0].size()) + " files, " + (trees[0] == trees[1] ? "identical" : "different") +
              ", information:" + std::to_string(counts["information"]) + " lead:" + std::to_string(counts["lead"]) +
              " overview:" + std::to_string(counts["overview"])};
}

Outcome truncation_expansion() {
  auto tokens = tag_text("Klein- und Mittelserien", shipped());
  bool found = std::any_of(tokens.begin(), tokens.end(), [](const TaggedToken &t) { return t.surface == "Kleinserien"; });
  return {found, "first token " + (tokens.empty() ? std::string("none") : tokens.front().surface)};
}

}  // namespace
}  // namespace semdoc

int main() {
  using semdoc::Outcome;
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"golden POS tagging", semdoc::golden_pos},
      {"golden syntactic parse", semdoc::golden_parse},
      {"golden SISS interpretation", semdoc::golden_siss},
      {"golden case frame analysis", semdoc::golden_case_frame},
      {"garage paraphrase equivalence", semdoc::garage_paraphrase},
      {"parser oracle suite", semdoc::parser_oracle},
      {"DTD validator oracle suite", semdoc::dtd_oracle},
      {"XML round trip", semdoc::xml_round_trip},
      {"pipeline determinism", semdoc::pipeline_determinism},
      {"truncation expansion", semdoc::truncation_expansion},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::cout << "criterion " << i + 1 << ": " << (outcome.pass ? "PASS" : "FAIL") << " " << criteria[i].first
              << " (" << outcome.detail << ")\n";
  }
  return failures == 0 ? 0 : 1;
}
