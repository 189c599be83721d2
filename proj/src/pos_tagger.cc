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

#include "semdoc/pos_tagger.h"

#include <algorithm>

namespace semdoc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_punct(char c) { return std::string_view(".,;:!?()").find(c) != std::string_view::npos; }
bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
// Letters include every non-ASCII byte so umlauts stay inside words.
bool is_letter(char c) { return is_ascii_letter(c) || static_cast<unsigned char>(c) >= 0x80; }
bool is_alnum(char c) { return is_letter(c) || is_digit(c); }

bool is_capitalized(std::string_view word) {
  if (word.empty()) return false;
  if (word[0] >= 'A' && word[0] <= 'Z') return true;
  // Ä, Ö, Ü in UTF-8.
  return word.size() >= 2 && word[0] == '\xC3' &&
         (word[1] == '\x84' || word[1] == '\x96' || word[1] == '\x9C');
}

bool ends_with_any(std::string_view word, std::initializer_list<std::string_view> suffixes) {
  for (auto suffix : suffixes) {
    if (word.size() > suffix.size() && word.ends_with(suffix)) return true;
  }
  return false;
}

// Byte ranges of the pieces of one whitespace-free chunk.
void split_chunk(std::string_view text, size_t begin, size_t end,
                 std::vector<std::pair<size_t, size_t>> &pieces) {
  size_t start = begin;
  for (size_t i = begin; i < end; ++i) {
    if (!is_punct(text[i])) continue;
    bool inside = i > begin && i + 1 < end;
    bool between_digits = inside && (text[i] == ',' || text[i] == '.') &&
                          is_digit(text[i - 1]) && is_digit(text[i + 1]);
    bool between_letters = inside && text[i] == '.' && is_alnum(text[i - 1]) &&
                           is_alnum(text[i + 1]);
    if (between_digits || between_letters) continue;
    if (start < i) pieces.emplace_back(start, i);
    pieces.emplace_back(i, i + 1);
    start = i + 1;
  }
  if (start < end) pieces.emplace_back(start, end);
}

const std::vector<PosTag> *lexicon_tags(const ResourceBundle &bundle,
                                        std::string_view surface) {
  auto it = bundle.pos_lexicon.find(surface);
  return it == bundle.pos_lexicon.end() ? nullptr : &it->second;
}

bool is_lexicon_word(const ResourceBundle &bundle, std::string_view word) {
  return lexicon_tags(bundle, word) != nullptr ||
         bundle.semantic_entry(word) != nullptr;
}

std::string compound_head(std::string_view noun, std::string_view prefix,
                          const ResourceBundle &bundle) {
  // The shortest suffix that turns the prefix into a known word.
  for (size_t len = 1; len < noun.size(); ++len) {
    std::string_view suffix = noun.substr(noun.size() - len);
    if ((static_cast<unsigned char>(suffix[0]) & 0xC0) == 0x80) continue;
    if (is_lexicon_word(bundle, std::string(prefix) + std::string(suffix))) {
      return std::string(suffix);
    }
  }
  // The remainder after the longest known first morpheme.
  for (size_t len = noun.size() - 1; len > 0; --len) {
    if ((static_cast<unsigned char>(noun[len]) & 0xC0) == 0x80) continue;
    if (is_lexicon_word(bundle, noun.substr(0, len))) {
      return std::string(noun.substr(len));
    }
  }
  // The final camel segment, which is the whole noun when there is none.
  for (size_t i = noun.size(); i-- > 1;) {
    if (noun[i] >= 'A' && noun[i] <= 'Z') return std::string(noun.substr(i));
  }
  return std::string(noun);
}

}  // namespace

std::vector<TaggedToken> tokenize(std::string_view text) {
  std::vector<std::pair<size_t, size_t>> pieces;
  size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    size_t end = i;
    while (end < text.size() && !is_space(text[end])) ++end;
    split_chunk(text, i, end, pieces);
    i = end;
  }

  // Code point index of every byte offset: lead bytes seen before it.
  std::vector<size_t> code_point(text.size() + 1, 0);
  for (size_t b = 0, cp = 0; b <= text.size(); ++b) {
    code_point[b] = cp;
    if (b < text.size() && (static_cast<unsigned char>(text[b]) & 0xC0) != 0x80) ++cp;
  }

  std::vector<TaggedToken> tokens;
  auto push = [&](size_t begin, size_t end) {
    TaggedToken token;
    token.surface = std::string(text.substr(begin, end - begin));
    token.span = {code_point[begin], code_point[end]};
    tokens.push_back(std::move(token));
  };
  for (auto [begin, end] : pieces) {
    // "2,68m": a number followed directly by letters.
    size_t k = begin;
    while (k < end && (is_digit(text[k]) || text[k] == ',' || text[k] == '.')) ++k;
    bool unit_glued = k > begin && k < end && is_digit(text[begin]) &&
                      is_digit(text[k - 1]) &&
                      std::all_of(text.begin() + k, text.begin() + end, is_letter);
    if (unit_glued) {
      push(begin, k);
      push(k, end);
    } else {
      push(begin, end);
    }
  }
  return tokens;
}

std::vector<TaggedToken> tag_tokens(std::vector<TaggedToken> tokens,
                                    const ResourceBundle &bundle) {
  for (auto &token : tokens) {
    token.number.reset();
    token.abbreviation_kind.reset();
    const std::string &s = token.surface;
    if (auto number = parse_german_number(s)) {
      token.tag = PosTag::kNR;
      token.number = *number;
    } else if (const auto *abbreviation = bundle.abbreviation(s)) {
      token.tag = PosTag::kABBR;
      token.abbreviation_kind = abbreviation->kind;
    } else if (const auto *tags = lexicon_tags(bundle, s)) {
      token.tag = tags->front();
    } else if (is_capitalized(s)) {
      token.tag = PosTag::kN;
    } else if (std::any_of(bundle.verb_stems.begin(), bundle.verb_stems.end(),
                           [&](const std::string &stem) {
                             return s.starts_with(stem) &&
                                    (s.substr(stem.size()) == "en" ||
                                     s.substr(stem.size()) == "st" ||
                                     s.substr(stem.size()) == "t");
                           })) {
      token.tag = PosTag::kV;
    } else if (ends_with_any(s, {"ig", "isch", "lich", "bar"})) {
      token.tag = PosTag::kADJ;
    } else {
      token.tag = PosTag::kUNKNOWN;
    }
  }
  return tokens;
}

std::vector<TaggedToken> expand_truncated_coordination(
    std::vector<TaggedToken> tokens, const ResourceBundle &bundle) {
  for (size_t i = 0; i + 2 < tokens.size(); ++i) {
    TaggedToken &truncated = tokens[i];
    const TaggedToken &conjunction = tokens[i + 1];
    const TaggedToken &full = tokens[i + 2];
    if (truncated.expanded_from || truncated.surface.size() < 2 ||
        truncated.surface.back() != '-' ||
        (conjunction.surface != "und" && conjunction.surface != "oder") ||
        full.tag != PosTag::kN) {
      continue;
    }
    std::string prefix = truncated.surface.substr(0, truncated.surface.size() - 1);
    std::string head = compound_head(full.surface, prefix, bundle);
    truncated.expanded_from = truncated.surface;
    truncated.surface = prefix + head;
    truncated.tag = PosTag::kN;
    truncated.number.reset();
    truncated.abbreviation_kind.reset();
  }
  return tokens;
}

std::vector<TaggedToken> tag_text(std::string_view text,
                                  const ResourceBundle &bundle) {
  return expand_truncated_coordination(tag_tokens(tokenize(text), bundle), bundle);
}

AnnotatedDocument annotate_tokens(const AnnotatedDocument &doc, size_t offset,
                                  const std::vector<TaggedToken> &tokens) {
  AnnotatedDocument out = doc;
  for (const auto &token : tokens) {
    Attributes attributes;
    if (token.expanded_from) attributes.emplace_back("EXPANDED", token.surface);
    out = out.annotate({token.span.begin + offset, token.span.end + offset},
                       std::string(pos_tag_name(token.tag)), std::move(attributes));
  }
  return out;
}

}  // namespace semdoc
