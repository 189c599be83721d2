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

#include "semdoc/siss.h"

#include "semdoc/errors.h"

namespace semdoc {

namespace {

class Interpreter {
 public:
  Interpreter(const ParseNode &root, const std::vector<TaggedToken> &tokens,
              const SissLexicon &lexicon)
      : root_(root), tokens_(tokens), lexicon_(lexicon) {}

  std::vector<SenseBinding> run() {
    const SissAssignment *assignment = find_assignment(lexicon_, root_);
    if (!assignment) {
      throw NoAssignmentError("no assignment for " + root_.label +
                              (root_.rule ? " (" + *root_.rule + ")" : ""));
    }
    visit(root_, *assignment);
    return std::move(out_);
  }

 private:
  Span char_span(const ParseNode &node) const {
    return {tokens_.at(node.begin).span.begin, tokens_.at(node.end - 1).span.end};
  }

  void visit(const ParseNode &node, const SissAssignment &assignment) {
    if (assignment.components.size() != node.children.size()) {
      throw ShapeMismatchError("assignment for " + assignment.rule + " has " +
                               std::to_string(assignment.components.size()) +
                               " components but " + node.label + " has " +
                               std::to_string(node.children.size()) + " children");
    }
    for (size_t k = 0; k < node.children.size(); ++k) {
      const auto &interpretation = assignment.components[k].interpretation;
      const ParseNode &child = node.children[k];
      switch (interpretation.kind) {
        case SissInterpretation::Kind::kNil:
          break;
        case SissInterpretation::Kind::kExpand:
          if (const SissAssignment *own = find_assignment(lexicon_, child);
              own && !child.is_leaf()) {
            visit(child, *own);
          } else {
            bind(child, interpretation.label);
          }
          break;
        case SissInterpretation::Kind::kSense:
          bind(child, interpretation.label);
          break;
      }
    }
  }

  void bind(const ParseNode &child, const std::string &sense) {
    std::optional<size_t> number;
    for (size_t i = child.begin; i < child.end && !number; ++i) {
      if (tokens_[i].number) number = i;
    }
    if (!number) {
      throw ShapeMismatchError("no number under " + child.label + " for " + sense);
    }
    SenseBinding binding;
    binding.sense = sense;
    binding.value = *tokens_[*number].number;
    for (size_t i = *number + 1; i < root_.end; ++i) {
      if (tokens_[i].abbreviation_kind == AbbreviationKind::kMeasuringUnit) {
        binding.unit = tokens_[i].surface;
        break;
      }
    }
    binding.source_span = char_span(child);
    binding.origin_label = root_.label;
    binding.origin_span = char_span(root_);
    out_.push_back(std::move(binding));
  }

  const ParseNode &root_;
  const std::vector<TaggedToken> &tokens_;
  const SissLexicon &lexicon_;
  std::vector<SenseBinding> out_;
};

}  // namespace

const SissAssignment *find_assignment(const SissLexicon &lexicon, const ParseNode &node) {
  if (node.rule) {
    if (auto it = lexicon.find(*node.rule); it != lexicon.end()) return &it->second;
  }
  auto it = lexicon.find(node.label);
  return it == lexicon.end() ? nullptr : &it->second;
}

std::vector<SenseBinding> interpret(const ParseNode &tree,
                                    const std::vector<TaggedToken> &tokens,
                                    const SissLexicon &lexicon) {
  return Interpreter(tree, tokens, lexicon).run();
}

}  // namespace semdoc
