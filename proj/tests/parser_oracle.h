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

// Random grammars and a top-down derivation oracle for the chart parser.

#ifndef SEMDOC_TESTS_PARSER_ORACLE_H_
#define SEMDOC_TESTS_PARSER_ORACLE_H_

#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "generators.h"
#include "semdoc/errors.h"
#include "semdoc/pos_tagger.h"
#include "semdoc/resources.h"

namespace semdoc::testing {

// A grammar over nonterminals A, B, C and terminals N, NR, ABBR (optionally
// constrained to the surface "x"), with at most max_rules rules. Draws
// again whenever the loader rejects the grammar.
inline Grammar random_grammar(std::mt19937 &rng, size_t max_rules = 5) {
  static const std::vector<std::string> kNonterminals = {"A", "B", "C"};
  while (true) {
    std::vector<GrammarRule> rules;
    size_t count = uniform(rng, 1, max_rules);
    for (size_t r = 0; r < count; ++r) {
      GrammarRule rule;
      rule.name = "R" + std::to_string(r);
      rule.lhs = kNonterminals[uniform(rng, 0, kNonterminals.size() - 1)];
      rule.line = r + 1;
      size_t length = uniform(rng, 1, 3);
      for (size_t k = 0; k < length; ++k) {
        GrammarSymbol symbol;
        switch (uniform(rng, 0, 5)) {
          case 0: symbol.name = "N"; break;
          case 1: symbol.name = "NR"; break;
          case 2: symbol.name = "ABBR"; break;
          case 3: symbol.name = "ABBR"; symbol.surface = "x"; break;
          default: symbol.name = kNonterminals[uniform(rng, 0, 2)]; break;
        }
        symbol.optional = uniform(rng, 0, 5) == 0;
        rule.rhs.push_back(symbol);
      }
      rules.push_back(rule);
    }
    try {
      return Grammar::from_rules(rules);
    } catch (const ResourceFormatError &) {
    }
  }
}

inline std::vector<TaggedToken> random_tokens(std::mt19937 &rng, size_t max_tokens = 8) {
  std::vector<TaggedToken> tokens;
  size_t n = uniform(rng, 1, max_tokens);
  for (size_t k = 0; k < n; ++k) {
    TaggedToken token;
    switch (uniform(rng, 0, 3)) {
      case 0: token.tag = PosTag::kN; token.surface = "Form"; break;
      case 1: token.tag = PosTag::kNR; token.surface = "5"; token.number = Rational(5); break;
      case 2: token.tag = PosTag::kABBR; token.surface = "x"; break;
      default: token.tag = PosTag::kABBR; token.surface = "mm"; break;
    }
    token.span = {2 * k, 2 * k + 1};
    tokens.push_back(token);
  }
  return tokens;
}

// Top-down enumeration over the declared rules, handling optional symbols
// directly rather than through the compiled productions.
class DerivationOracle {
 public:
  DerivationOracle(const Grammar &grammar, const std::vector<TaggedToken> &tokens)
      : grammar_(grammar), tokens_(tokens) {}

  bool derives(const std::string &label, size_t i, size_t j, size_t depth = 0) const {
    if (depth > 4 * (tokens_.size() + 1) * (grammar_.rules().size() + 1)) return false;
    for (const auto &rule : grammar_.rules()) {
      if (rule.lhs == label && matches(rule.rhs, 0, i, j, depth + 1)) return true;
    }
    return false;
  }

  std::set<std::tuple<std::string, size_t, size_t>> recognized() const {
    std::set<std::tuple<std::string, size_t, size_t>> out;
    std::set<std::string> labels;
    for (const auto &rule : grammar_.rules()) labels.insert(rule.lhs);
    for (const auto &label : labels) {
      for (size_t i = 0; i < tokens_.size(); ++i) {
        for (size_t j = i + 1; j <= tokens_.size(); ++j) {
          if (derives(label, i, j)) out.emplace(label, i, j);
        }
      }
    }
    return out;
  }

 private:
  bool matches(const std::vector<GrammarSymbol> &rhs, size_t pos, size_t k, size_t j,
               size_t depth) const {
    if (pos == rhs.size()) return k == j;
    const GrammarSymbol &symbol = rhs[pos];
    if (symbol.optional && matches(rhs, pos + 1, k, j, depth)) return true;
    if (symbol.is_terminal()) {
      if (k >= j) return false;
      const TaggedToken &token = tokens_[k];
      bool ok = pos_tag_name(token.tag) == symbol.name &&
                (!symbol.surface || *symbol.surface == token.surface) &&
                (!symbol.abbreviation_kind || symbol.abbreviation_kind == token.abbreviation_kind);
      return ok && matches(rhs, pos + 1, k + 1, j, depth);
    }
    // Every required symbol covers at least one token.
    size_t required = 0;
    for (size_t q = pos + 1; q < rhs.size(); ++q) required += rhs[q].optional ? 0 : 1;
    for (size_t m = k + 1; m + required <= j; ++m) {
      if (derives(symbol.name, k, m, depth) && matches(rhs, pos + 1, m, j, depth)) {
        return true;
      }
    }
    return false;
  }

  const Grammar &grammar_;
  const std::vector<TaggedToken> &tokens_;
};

}  // namespace semdoc::testing

#endif  // SEMDOC_TESTS_PARSER_ORACLE_H_
