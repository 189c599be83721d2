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

// Bottom-up chart parsing of tagged tokens into a packed forest.

#ifndef SEMDOC_CHART_PARSER_H_
#define SEMDOC_CHART_PARSER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "semdoc/doc_model.h"
#include "semdoc/pos_tagger.h"
#include "semdoc/resources.h"

namespace semdoc {

struct ParseNode {
  std::string label;
  std::optional<std::string> rule;  // unset for leaves
  size_t begin = 0;                 // token range [begin, end)
  size_t end = 0;
  std::vector<ParseNode> children;

  bool is_leaf() const { return children.empty(); }
  size_t node_count() const;
  bool operator==(const ParseNode &) const = default;
};

class ParseForest {
 public:
  struct Derivation {
    size_t production = 0;        // index into Grammar::productions()
    std::vector<size_t> children;  // item ids
  };
  struct Item {
    std::string label;
    size_t begin = 0;
    size_t end = 0;
    bool terminal = false;
    std::vector<Derivation> derivations;  // empty for terminals
  };

  const std::vector<Item> &items() const { return items_; }
  std::optional<size_t> find(const std::string &label, size_t begin, size_t end) const;
  // Every nonterminal (label, begin, end) in the chart.
  std::set<std::tuple<std::string, size_t, size_t>> recognized() const;
  size_t token_count() const { return token_count_; }
  const Grammar &grammar() const { return *grammar_; }

 private:
  friend ParseForest parse(const std::vector<TaggedToken> &, const Grammar &);
  size_t add_item(std::string label, size_t begin, size_t end, bool terminal);

  const Grammar *grammar_ = nullptr;
  size_t token_count_ = 0;
  std::vector<Item> items_;
  std::map<std::tuple<std::string, size_t, size_t>, size_t> index_;
};

// Exhaustive: the forest holds an item for label L over [i, j) iff L
// derives tokens i..j-1. The grammar must outlive the forest.
ParseForest parse(const std::vector<TaggedToken> &tokens, const Grammar &grammar);

// The preferred tree among nonterminal items inside the token window
// (default: all tokens): larger span first, then the rule declared
// earlier, then fewer nodes, then the leftmost start.
std::optional<ParseNode> best_parse(const ParseForest &forest,
                                    std::optional<std::pair<size_t, size_t>> window = {});

// Repeated best_parse over the tokens not yet covered, in token order.
std::vector<ParseNode> best_parses(const ParseForest &forest);

// Adds the tree as nested annotations: node labels as tags, RULE
// attributes on nonterminals. Token spans are shifted by offset.
AnnotatedDocument emit_parse_xml(const AnnotatedDocument &doc, const ParseNode &node,
                                 const std::vector<TaggedToken> &tokens,
                                 size_t offset = 0);

}  // namespace semdoc

#endif  // SEMDOC_CHART_PARSER_H_
