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

#include <algorithm>
#include <functional>

namespace semdoc {

namespace {

bool token_matches(const GrammarSymbol &symbol, const TaggedToken &token) {
  if (pos_tag_name(token.tag) != symbol.name) return false;
  if (symbol.surface && token.surface != *symbol.surface) return false;
  if (symbol.abbreviation_kind && token.abbreviation_kind != symbol.abbreviation_kind) {
    return false;
  }
  return true;
}

// Ranking key of the best tree below an item.
struct Best {
  size_t order = 0;
  size_t nodes = 0;
  size_t derivation = 0;
};

class TreeBuilder {
 public:
  explicit TreeBuilder(const ParseForest &forest)
      : forest_(forest), memo_(forest.items().size()) {}

  const Best &best(size_t id) {
    if (memo_[id]) return *memo_[id];
    const auto &item = forest_.items()[id];
    Best result{0, 1, 0};
    if (!item.terminal) {
      bool first = true;
      for (size_t d = 0; d < item.derivations.size(); ++d) {
        const auto &derivation = item.derivations[d];
        Best candidate{forest_.grammar().productions()[derivation.production].order, 1, d};
        for (size_t child : derivation.children) candidate.nodes += best(child).nodes;
        if (first || std::tie(candidate.order, candidate.nodes) <
                         std::tie(result.order, result.nodes)) {
          result = candidate;
          first = false;
        }
      }
    }
    memo_[id] = result;
    return *memo_[id];
  }

  ParseNode build(size_t id) {
    const auto &item = forest_.items()[id];
    ParseNode node;
    node.label = item.label;
    node.begin = item.begin;
    node.end = item.end;
    if (!item.terminal) {
      const auto &derivation = item.derivations[best(id).derivation];
      node.rule = forest_.grammar().productions()[derivation.production].name;
      for (size_t child : derivation.children) node.children.push_back(build(child));
    }
    return node;
  }

 private:
  const ParseForest &forest_;
  std::vector<std::optional<Best>> memo_;
};

std::optional<size_t> best_item(const ParseForest &forest, TreeBuilder &builder,
                                size_t lo, size_t hi) {
  std::optional<size_t> winner;
  for (size_t id = 0; id < forest.items().size(); ++id) {
    const auto &item = forest.items()[id];
    if (item.terminal || item.begin < lo || item.end > hi) continue;
    if (!winner) {
      winner = id;
      continue;
    }
    const auto &w = forest.items()[*winner];
    const Best &a = builder.best(id);
    const Best &b = builder.best(*winner);
    size_t size_a = item.end - item.begin, size_b = w.end - w.begin;
    auto key_a = std::make_tuple(-static_cast<long>(size_a), a.order, a.nodes, item.begin, item.label);
    auto key_b = std::make_tuple(-static_cast<long>(size_b), b.order, b.nodes, w.begin, w.label);
    if (key_a < key_b) winner = id;
  }
  return winner;
}

}  // namespace

size_t ParseNode::node_count() const {
  size_t n = 1;
  for (const auto &child : children) n += child.node_count();
  return n;
}

std::optional<size_t> ParseForest::find(const std::string &label, size_t begin,
                                        size_t end) const {
  auto it = index_.find({label, begin, end});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::set<std::tuple<std::string, size_t, size_t>> ParseForest::recognized() const {
  std::set<std::tuple<std::string, size_t, size_t>> out;
  for (const auto &item : items_) {
    if (!item.terminal) out.emplace(item.label, item.begin, item.end);
  }
  return out;
}

size_t ParseForest::add_item(std::string label, size_t begin, size_t end, bool terminal) {
  auto key = std::make_tuple(label, begin, end);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  items_.push_back(Item{std::move(label), begin, end, terminal, {}});
  index_.emplace(std::move(key), items_.size() - 1);
  return items_.size() - 1;
}

ParseForest parse(const std::vector<TaggedToken> &tokens, const Grammar &grammar) {
  ParseForest forest;
  forest.grammar_ = &grammar;
  forest.token_count_ = tokens.size();
  const auto &productions = grammar.productions();
  const size_t n = tokens.size();

  // Terminal items are keyed by position; their label is the tag name.
  std::vector<size_t> leaf(n);
  for (size_t k = 0; k < n; ++k) {
    leaf[k] = forest.add_item(std::string(pos_tag_name(tokens[k].tag)), k, k + 1, true);
  }

  for (size_t length = 1; length <= n; ++length) {
    for (size_t i = 0; i + length <= n; ++i) {
      const size_t j = i + length;
      // Variants of one rule may derive the same children; keep one.
      std::set<std::pair<size_t, std::vector<size_t>>> seen;
      auto record = [&](size_t p, std::vector<size_t> children) -> bool {
        if (!seen.emplace(productions[p].order, children).second) return false;
        size_t id = forest.add_item(productions[p].lhs, i, j, false);
        forest.items_[id].derivations.push_back({p, std::move(children)});
        return true;
      };

      // Productions with two or more symbols only use shorter spans.
      for (size_t p = 0; p < productions.size(); ++p) {
        const auto &rhs = productions[p].rhs;
        if (rhs.size() < 2 || rhs.size() > length) continue;
        std::vector<size_t> children;
        std::function<void(size_t, size_t)> extend = [&](size_t pos, size_t k) {
          if (pos == rhs.size()) {
            if (k == j) record(p, children);
            return;
          }
          const size_t remaining = rhs.size() - pos - 1;
          if (rhs[pos].is_terminal()) {
            if (k < j && token_matches(rhs[pos], tokens[k])) {
              children.push_back(leaf[k]);
              extend(pos + 1, k + 1);
              children.pop_back();
            }
            return;
          }
          for (size_t m = k + 1; m + remaining <= j; ++m) {
            if (auto child = forest.find(rhs[pos].name, k, m)) {
              children.push_back(*child);
              extend(pos + 1, m);
              children.pop_back();
            }
          }
        };
        extend(0, i);
      }

      // Unary productions over the same span, up to a fixpoint; the loader
      // rejects unary cycles so this terminates.
      for (bool changed = true; changed;) {
        changed = false;
        for (size_t p = 0; p < productions.size(); ++p) {
          const auto &rhs = productions[p].rhs;
          if (rhs.size() != 1) continue;
          if (rhs[0].is_terminal()) {
            if (length == 1 && token_matches(rhs[0], tokens[i])) {
              changed |= record(p, {leaf[i]});
            }
          } else if (auto child = forest.find(rhs[0].name, i, j)) {
            changed |= record(p, {*child});
          }
        }
      }
    }
  }
  return forest;
}

std::optional<ParseNode> best_parse(const ParseForest &forest,
                                    std::optional<std::pair<size_t, size_t>> window) {
  TreeBuilder builder(forest);
  auto [lo, hi] = window.value_or(std::make_pair(size_t{0}, forest.token_count()));
  auto id = best_item(forest, builder, lo, hi);
  if (!id) return std::nullopt;
  return builder.build(*id);
}

std::vector<ParseNode> best_parses(const ParseForest &forest) {
  TreeBuilder builder(forest);
  std::vector<ParseNode> out;
  std::vector<std::pair<size_t, size_t>> gaps = {{0, forest.token_count()}};
  while (!gaps.empty()) {
    auto [lo, hi] = gaps.back();
    gaps.pop_back();
    auto id = best_item(forest, builder, lo, hi);
    if (!id) continue;
    ParseNode node = builder.build(*id);
    if (node.begin > lo) gaps.emplace_back(lo, node.begin);
    if (node.end < hi) gaps.emplace_back(node.end, hi);
    out.push_back(std::move(node));
  }
  std::sort(out.begin(), out.end(),
            [](const ParseNode &a, const ParseNode &b) { return a.begin < b.begin; });
  return out;
}

AnnotatedDocument emit_parse_xml(const AnnotatedDocument &doc, const ParseNode &node,
                                 const std::vector<TaggedToken> &tokens, size_t offset) {
  Span span{tokens.at(node.begin).span.begin + offset,
            tokens.at(node.end - 1).span.end + offset};
  Attributes attributes;
  if (node.rule) {
    attributes.emplace_back("RULE", *node.rule);
  } else if (tokens[node.begin].expanded_from) {
    attributes.emplace_back("EXPANDED", tokens[node.begin].surface);
  }
  AnnotatedDocument out = doc.annotate(span, node.label, std::move(attributes));
  for (const auto &child : node.children) {
    out = emit_parse_xml(out, child, tokens, offset);
  }
  return out;
}

}  // namespace semdoc
