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

#include "semdoc/html.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "semdoc/errors.h"

namespace semdoc {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

std::string encode_utf8(unsigned long cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x110000) {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

const std::unordered_map<std::string, unsigned long> &named_entities() {
  static const std::unordered_map<std::string, unsigned long> kEntities = {
      {"amp", '&'},     {"lt", '<'},       {"gt", '>'},     {"quot", '"'},
      {"apos", '\''},   {"nbsp", 0xA0},    {"auml", 0xE4},  {"ouml", 0xF6},
      {"uuml", 0xFC},   {"Auml", 0xC4},    {"Ouml", 0xD6},  {"Uuml", 0xDC},
      {"szlig", 0xDF},  {"eacute", 0xE9},  {"egrave", 0xE8}, {"copy", 0xA9},
      {"reg", 0xAE},    {"euro", 0x20AC},  {"bull", 0x2022}, {"ndash", 0x2013},
      {"mdash", 0x2014}, {"middot", 0xB7}, {"deg", 0xB0},   {"times", 0xD7},
      {"sup2", 0xB2},   {"sup3", 0xB3},
  };
  return kEntities;
}

// Unknown or malformed references are kept verbatim, as browsers do.
std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') {
      out += text[i];
      continue;
    }
    size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out += '&';
      continue;
    }
    std::string name(text.substr(i + 1, semi - i - 1));
    std::optional<unsigned long> cp;
    if (name.size() > 1 && name[0] == '#') {
      try {
        cp = (name[1] == 'x' || name[1] == 'X')
                 ? std::stoul(name.substr(2), nullptr, 16)
                 : std::stoul(name.substr(1), nullptr, 10);
      } catch (const std::exception &) {
      }
    } else if (auto it = named_entities().find(name);
               it != named_entities().end()) {
      cp = it->second;
    }
    if (cp) {
      out += encode_utf8(*cp);
      i = semi;
    } else {
      out += '&';
    }
  }
  return out;
}

struct HtmlToken {
  enum Type { kText, kStart, kEnd };
  Type type = kText;
  std::string name;  // lowercased tag name
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;  // decoded character data

  const std::string *attribute(std::string_view key) const {
    for (const auto &[k, v] : attributes) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

// Forgiving HTML lexer: never fails, skips comments, declarations and the
// content of script, style and title.
std::vector<HtmlToken> lex_html(std::string_view html) {
  std::vector<HtmlToken> tokens;
  size_t pos = 0;
  auto emit_text = [&](std::string_view raw) {
    if (raw.empty()) return;
    if (!tokens.empty() && tokens.back().type == HtmlToken::kText) {
      tokens.back().text += decode_entities(raw);
    } else {
      HtmlToken t;
      t.text = decode_entities(raw);
      tokens.push_back(std::move(t));
    }
  };
  while (pos < html.size()) {
    size_t lt = html.find('<', pos);
    if (lt == std::string_view::npos) {
      emit_text(html.substr(pos));
      break;
    }
    emit_text(html.substr(pos, lt - pos));
    pos = lt;
    if (html.substr(pos, 4) == "<!--") {
      size_t end = html.find("-->", pos + 4);
      pos = end == std::string_view::npos ? html.size() : end + 3;
      continue;
    }
    if (pos + 1 < html.size() && (html[pos + 1] == '!' || html[pos + 1] == '?')) {
      size_t end = html.find('>', pos);
      pos = end == std::string_view::npos ? html.size() : end + 1;
      continue;
    }
    bool closing = pos + 1 < html.size() && html[pos + 1] == '/';
    size_t name_start = pos + (closing ? 2 : 1);
    if (name_start >= html.size() ||
        !std::isalpha(static_cast<unsigned char>(html[name_start]))) {
      emit_text("<");
      ++pos;
      continue;
    }
    size_t p = name_start;
    while (p < html.size() && (std::isalnum(static_cast<unsigned char>(html[p])) ||
                               html[p] == '-' || html[p] == ':')) {
      ++p;
    }
    HtmlToken tag;
    tag.type = closing ? HtmlToken::kEnd : HtmlToken::kStart;
    tag.name = lower(html.substr(name_start, p - name_start));
    // Attributes.
    while (p < html.size() && html[p] != '>') {
      if (is_space(html[p]) || html[p] == '/') {
        ++p;
        continue;
      }
      size_t a = p;
      while (p < html.size() && !is_space(html[p]) && html[p] != '=' &&
             html[p] != '>' && html[p] != '/') {
        ++p;
      }
      std::string key = lower(html.substr(a, p - a));
      while (p < html.size() && is_space(html[p])) ++p;
      std::string value;
      if (p < html.size() && html[p] == '=') {
        ++p;
        while (p < html.size() && is_space(html[p])) ++p;
        if (p < html.size() && (html[p] == '"' || html[p] == '\'')) {
          char quote = html[p++];
          size_t end = html.find(quote, p);
          if (end == std::string_view::npos) end = html.size();
          value = decode_entities(html.substr(p, end - p));
          p = std::min(end + 1, html.size());
        } else {
          size_t v = p;
          while (p < html.size() && !is_space(html[p]) && html[p] != '>') ++p;
          value = decode_entities(html.substr(v, p - v));
        }
      }
      if (!key.empty()) tag.attributes.emplace_back(std::move(key), std::move(value));
    }
    pos = std::min(p + 1, html.size());
    if (!closing && (tag.name == "script" || tag.name == "style" ||
                     tag.name == "title")) {
      // Raw text: skip to the matching end tag.
      std::string haystack = lower(html.substr(pos));
      size_t end = haystack.find("</" + tag.name);
      if (end == std::string::npos) {
        pos = html.size();
      } else {
        size_t close = html.find('>', pos + end);
        pos = close == std::string_view::npos ? html.size() : close + 1;
      }
      continue;
    }
    tokens.push_back(std::move(tag));
  }
  return tokens;
}

const std::unordered_set<std::string> &block_elements() {
  static const std::unordered_set<std::string> kBlocks = {
      "address", "article", "aside", "blockquote", "body", "caption",
      "center", "dd", "div", "dl", "dt", "fieldset", "figcaption", "figure",
      "footer", "form", "frame", "frameset", "h1", "h2", "h3", "h4", "h5",
      "h6", "head", "header", "hr", "html", "li", "main", "nav", "noscript",
      "ol", "p", "pre", "section", "table", "tbody", "td", "tfoot", "th",
      "thead", "tr", "ul"};
  return kBlocks;
}

bool is_heading(const std::string &name) {
  return name.size() == 2 && name[0] == 'h' && name[1] >= '1' && name[1] <= '6';
}

bool is_void(const std::string &name) {
  static const std::unordered_set<std::string> kVoid = {
      "area", "base", "br", "col", "embed", "hr", "img", "input", "link",
      "meta", "param", "source", "track", "wbr"};
  return kVoid.count(name) > 0;
}

class Cleaner {
 public:
  explicit Cleaner(const CleanOptions &options) : options_(options) {}

  std::vector<Block> run(std::string_view html) {
    for (auto &token : lex_html(html)) {
      switch (token.type) {
        case HtmlToken::kText: pending_ += token.text; break;
        case HtmlToken::kStart: start(token); break;
        case HtmlToken::kEnd: end(token.name); break;
      }
    }
    flush();
    while (!tables_.empty()) {
      close_cell();
      finish_table();
    }
    return std::move(blocks_);
  }

 private:
  struct Cell {
    std::string text;
    bool header = false;
    bool has_link = false;
    std::vector<std::string> path;
  };
  struct Table {
    size_t index = 0;
    bool has_thead = false;
    std::vector<std::vector<Cell>> rows;
    bool cell_open = false;
    size_t depth = 0;  // stack size at which the table element sits
  };

  void start(const HtmlToken &token) {
    const std::string &name = token.name;
    if (name == "br") {
      line_break();
      return;
    }
    if (name == "a") {
      if (in_cell()) tables_.back().rows.back().back().has_link = true;
      return;
    }
    if (!block_elements().count(name)) return;  // inline: dissolved

    flush();
    implicit_close(name);
    if (name == "ul" || name == "ol") {
      if (paragraph_before_list_ && !blocks_.empty() &&
          blocks_.back().kind == BlockKind::kParagraph) {
        blocks_.back().kind = BlockKind::kListHeading;
      }
    }
    paragraph_before_list_ = false;

    if (name == "table") {
      Table table;
      table.index = table_count_++;
      table.depth = stack_.size();
      stack_.push_back(name);
      tables_.push_back(std::move(table));
      return;
    }
    if (name == "thead" && !tables_.empty()) tables_.back().has_thead = true;
    if (name == "tr" && !tables_.empty()) {
      close_cell();
      tables_.back().rows.emplace_back();
    }
    if ((name == "td" || name == "th") && !tables_.empty()) {
      auto &table = tables_.back();
      close_cell();
      if (table.rows.empty()) table.rows.emplace_back();
      Cell cell;
      cell.header = name == "th";
      stack_.push_back(name);
      cell.path = stack_;
      table.rows.back().push_back(std::move(cell));
      table.cell_open = true;
      return;
    }
    if (!is_void(name)) stack_.push_back(name);
  }

  void end(const std::string &name) {
    if (name == "br") {
      line_break();
      return;
    }
    if (!block_elements().count(name)) return;
    auto it = std::find(stack_.rbegin(), stack_.rend(), name);
    if (it == stack_.rend()) return;  // stray end tag
    flush();
    size_t target = stack_.size() - 1 - (it - stack_.rbegin());
    pop_to(target);
  }

  // Pops stack_ down to (and including) index `target`, finishing any table
  // or cell that is closed on the way.
  void pop_to(size_t target) {
    while (stack_.size() > target) {
      const std::string top = stack_.back();
      if ((top == "td" || top == "th") && !tables_.empty()) close_cell();
      stack_.pop_back();
      if (top == "table" && !tables_.empty() &&
          tables_.back().depth == stack_.size()) {
        finish_table();
      }
    }
  }

  void implicit_close(const std::string &name) {
    auto find_open = [&](auto pred, auto barrier) -> std::optional<size_t> {
      for (size_t i = stack_.size(); i-- > 0;) {
        if (pred(stack_[i])) return i;
        if (barrier(stack_[i])) return std::nullopt;
      }
      return std::nullopt;
    };
    // Only inline content may sit inside <p>.
    if (!stack_.empty() && stack_.back() == "p") pop_to(stack_.size() - 1);
    if (is_heading(name)) {
      if (!stack_.empty() && is_heading(stack_.back())) pop_to(stack_.size() - 1);
    } else if (name == "li") {
      if (auto i = find_open([](const std::string &s) { return s == "li"; },
                             [](const std::string &s) {
                               return s == "ul" || s == "ol" || s == "table";
                             })) {
        pop_to(*i);
      }
    } else if (name == "dt" || name == "dd") {
      if (auto i = find_open(
              [](const std::string &s) { return s == "dt" || s == "dd"; },
              [](const std::string &s) { return s == "dl" || s == "table"; })) {
        pop_to(*i);
      }
    } else if (name == "td" || name == "th") {
      if (auto i = find_open(
              [](const std::string &s) { return s == "td" || s == "th"; },
              [](const std::string &s) { return s == "tr" || s == "table"; })) {
        pop_to(*i);
      }
    } else if (name == "tr") {
      if (auto i = find_open([](const std::string &s) { return s == "tr"; },
                             [](const std::string &s) { return s == "table"; })) {
        pop_to(*i);
      } else if (auto c = find_open(
                     [](const std::string &s) { return s == "td" || s == "th"; },
                     [](const std::string &s) { return s == "table"; })) {
        pop_to(*c);
      }
    }
  }

  bool in_cell() const {
    if (tables_.empty() || !tables_.back().cell_open) return false;
    for (size_t i = stack_.size(); i-- > 0;) {
      if (stack_[i] == "td" || stack_[i] == "th") return true;
      if (stack_[i] == "table") return false;
    }
    return false;
  }

  BlockKind context_kind() const {
    for (size_t i = stack_.size(); i-- > 0;) {
      const std::string &s = stack_[i];
      if (is_heading(s)) return BlockKind::kHeading;
      if (s == "li" || s == "dt" || s == "dd") return BlockKind::kListItem;
      if (s == "td" || s == "th") return BlockKind::kTableCell;
      if (s == "caption") return BlockKind::kCaption;
    }
    return BlockKind::kParagraph;
  }

  void line_break() {
    if (in_cell()) {
      pending_ += ' ';
      return;
    }
    segments_.push_back(normalize_whitespace(pending_));
    pending_.clear();
  }

  void flush() {
    std::vector<std::string> segments;
    if (!segments_.empty()) {
      segments_.push_back(normalize_whitespace(pending_));
      for (auto &s : segments_) {
        if (!s.empty()) segments.push_back(std::move(s));
      }
      segments_.clear();
    }
    std::string text = normalize_whitespace(pending_);
    if (!segments.empty()) {
      text.clear();
      for (const auto &s : segments) {
        if (!text.empty()) text += ' ';
        text += s;
      }
    }
    pending_.clear();
    if (segments.size() < 2) segments.clear();
    if (text.empty()) return;

    BlockKind kind = context_kind();
    if (kind == BlockKind::kTableCell && in_cell()) {
      auto &cell = tables_.back().rows.back().back();
      if (!cell.text.empty()) cell.text += ' ';
      cell.text += text;
      return;
    }
    Block block;
    block.kind = kind;
    block.text = std::move(text);
    block.source_path = stack_.empty() ? std::vector<std::string>{"#document"}
                                       : stack_;
    block.segments = std::move(segments);
    blocks_.push_back(std::move(block));
    paragraph_before_list_ = kind == BlockKind::kParagraph;
  }

  void close_cell() {
    if (!tables_.empty()) tables_.back().cell_open = false;
  }

  void finish_table() {
    Table table = std::move(tables_.back());
    tables_.pop_back();
    size_t total = 0, linked = 0;
    for (const auto &row : table.rows) {
      for (const auto &cell : row) {
        ++total;
        if (cell.has_link) ++linked;
      }
    }
    bool header_row =
        table.has_thead ||
        (!table.rows.empty() && !table.rows.front().empty() &&
         std::all_of(table.rows.front().begin(), table.rows.front().end(),
                     [](const Cell &c) { return c.header; }));
    if (!header_row && total > 0 &&
        static_cast<double>(linked) >=
            options_.layout_table_link_share * static_cast<double>(total)) {
      return;  // navigation frame built from a table
    }
    size_t r = 0;
    for (auto &row : table.rows) {
      if (row.empty()) continue;
      for (size_t c = 0; c < row.size(); ++c) {
        Block block;
        block.kind = BlockKind::kTableCell;
        block.text = normalize_whitespace(row[c].text);
        block.source_path = std::move(row[c].path);
        block.table = TableCoords{table.index, r, c};
        blocks_.push_back(std::move(block));
      }
      ++r;
    }
    paragraph_before_list_ = false;
  }

  const CleanOptions &options_;
  std::vector<Block> blocks_;
  std::vector<std::string> stack_;
  std::vector<Table> tables_;
  size_t table_count_ = 0;
  std::string pending_;
  std::vector<std::string> segments_;
  bool paragraph_before_list_ = false;
};

bool starts_with_marker(std::string_view segment, const std::string &marker) {
  if (segment.substr(0, marker.size()) != marker) return false;
  if (segment.size() == marker.size()) return true;
  return segment[marker.size()] == ' ' || marker != "-";
}

std::optional<std::string> strip_marker(std::string_view segment,
                                        const ListOptions &options) {
  std::optional<std::string> stripped;
  for (bool again = true; again;) {
    again = false;
    for (const auto &marker : options.bullet_markers) {
      if (starts_with_marker(segment, marker)) {
        stripped = normalize_whitespace(segment.substr(marker.size()));
        segment = *stripped;
        again = !segment.empty();
        break;
      }
    }
  }
  return stripped;
}

// RFC 3986, section 5.2.4.
std::string remove_dot_segments(std::string_view path) {
  std::string input(path);
  std::string output;
  auto pop_segment = [&] {
    auto slash = output.rfind('/');
    output.erase(slash == std::string::npos ? 0 : slash);
  };
  while (!input.empty()) {
    if (input.rfind("../", 0) == 0) {
      input.erase(0, 3);
    } else if (input.rfind("./", 0) == 0) {
      input.erase(0, 2);
    } else if (input.rfind("/./", 0) == 0) {
      input.replace(0, 3, "/");
    } else if (input == "/.") {
      input = "/";
    } else if (input.rfind("/../", 0) == 0) {
      input.replace(0, 4, "/");
      pop_segment();
    } else if (input == "/..") {
      input = "/";
      pop_segment();
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      size_t next = input.find('/', input[0] == '/' ? 1 : 0);
      output += input.substr(0, next);
      input.erase(0, next == std::string::npos ? input.size() : next);
    }
  }
  return output;
}

std::string default_port(const std::string &scheme) {
  if (scheme == "http") return "80";
  if (scheme == "https") return "443";
  return "";
}

}  // namespace

std::string_view block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::kParagraph: return "paragraph";
    case BlockKind::kHeading: return "heading";
    case BlockKind::kListHeading: return "list-heading";
    case BlockKind::kListItem: return "list-item";
    case BlockKind::kTableCell: return "table-cell";
    case BlockKind::kCaption: return "caption";
  }
  return "paragraph";
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool space = false;
  for (size_t i = 0; i < text.size(); ++i) {
    bool ws = is_space(text[i]) || text[i] == '\v';
    size_t width = 1;
    if (!ws && static_cast<unsigned char>(text[i]) == 0xC2 &&
        i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xA0) {
      ws = true;
      width = 2;
    }
    if (ws) {
      space = !out.empty();
      i += width - 1;
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += text[i];
  }
  return out;
}

std::vector<Block> clean_html(std::string_view html,
                              const CleanOptions &options) {
  return Cleaner(options).run(html);
}

size_t count_pictures(std::string_view html) {
  size_t n = 0;
  for (const auto &token : lex_html(html)) {
    if (token.type == HtmlToken::kStart && token.name == "img") ++n;
  }
  return n;
}

std::vector<Block> normalize_misused_lists(std::vector<Block> blocks,
                                           const ListOptions &options) {
  std::vector<Block> out;
  for (auto &block : blocks) {
    if (block.kind != BlockKind::kParagraph || block.segments.size() < 2) {
      out.push_back(std::move(block));
      continue;
    }
    std::string prefix;
    std::vector<std::string> items(block.segments.begin(), block.segments.end());
    if (!strip_marker(items.front(), options)) {
      // The heading may share the first line with the first bullet.
      const std::string first = items.front();
      size_t split = std::string::npos;
      for (const auto &marker : options.bullet_markers) {
        size_t at = first.find(" " + marker + " ");
        if (at != std::string::npos && at < split) split = at;
      }
      if (split != std::string::npos) {
        prefix = first.substr(0, split);
        items.front() = first.substr(split + 1);
      } else {
        prefix = first;
        items.erase(items.begin());
      }
    }
    std::vector<std::string> stripped;
    for (const auto &item : items) {
      auto text = strip_marker(item, options);
      if (!text) break;
      stripped.push_back(std::move(*text));
    }
    if (items.size() < 2 || stripped.size() != items.size()) {
      out.push_back(std::move(block));
      continue;
    }
    if (!prefix.empty()) {
      Block heading;
      heading.kind = BlockKind::kListHeading;
      heading.text = normalize_whitespace(prefix);
      heading.source_path = block.source_path;
      out.push_back(std::move(heading));
    } else if (!out.empty() && out.back().kind == BlockKind::kParagraph &&
               out.back().segments.empty() && !out.back().text.empty() &&
               out.back().text.back() == ':') {
      out.back().kind = BlockKind::kListHeading;
    }
    for (auto &text : stripped) {
      if (text.empty()) continue;
      Block item;
      item.kind = BlockKind::kListItem;
      item.text = std::move(text);
      item.source_path = block.source_path;
      out.push_back(std::move(item));
    }
  }
  return out;
}

std::vector<std::string> attach_list_items(const Block &heading,
                                           const std::vector<Block> &items) {
  std::string_view head = heading.text;
  while (!head.empty() && (head.back() == ':' || head.back() == ' ')) {
    head.remove_suffix(1);
  }
  std::vector<std::string> sentences;
  sentences.reserve(items.size());
  for (const auto &item : items) {
    sentences.push_back(head.empty() ? item.text
                                     : std::string(head) + " " + item.text);
  }
  return sentences;
}

std::string Url::to_string() const {
  std::string out = scheme + "://" + host;
  if (!port.empty()) out += ":" + port;
  out += path.empty() ? "/" : path;
  if (!query.empty()) out += "?" + query;
  return out;
}

std::optional<Url> parse_url(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) return std::nullopt;
  for (size_t i = 0; i < colon; ++i) {
    char c = text[i];
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
          c == '.') ||
        (i == 0 && !std::isalpha(static_cast<unsigned char>(c)))) {
      return std::nullopt;
    }
  }
  Url url;
  url.scheme = lower(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  if (auto hash = rest.find('#'); hash != std::string_view::npos) {
    rest = rest.substr(0, hash);
  }
  if (rest.substr(0, 2) != "//") {
    url.path = std::string(rest);
    return url;  // opaque (mailto:, javascript:)
  }
  rest.remove_prefix(2);
  size_t auth_end = rest.find_first_of("/?");
  std::string_view authority = rest.substr(0, auth_end);
  rest = auth_end == std::string_view::npos ? std::string_view() : rest.substr(auth_end);
  if (auto at = authority.rfind('@'); at != std::string_view::npos) {
    authority = authority.substr(at + 1);
  }
  if (auto pc = authority.rfind(':'); pc != std::string_view::npos) {
    url.port = std::string(authority.substr(pc + 1));
    authority = authority.substr(0, pc);
    for (char c : url.port) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    }
    if (url.port == default_port(url.scheme)) url.port.clear();
  }
  url.host = lower(authority);
  if (url.host.empty()) return std::nullopt;
  auto q = rest.find('?');
  url.path = remove_dot_segments(rest.substr(0, q));
  if (url.path.empty()) url.path = "/";
  if (q != std::string_view::npos) url.query = std::string(rest.substr(q + 1));
  return url;
}

std::optional<Url> resolve_url(const Url &base, std::string_view reference) {
  if (auto hash = reference.find('#'); hash != std::string_view::npos) {
    reference = reference.substr(0, hash);
  }
  // Absolute reference: has a scheme before any '/', '?'.
  auto colon = reference.find(':');
  auto delim = reference.find_first_of("/?");
  if (colon != std::string_view::npos && (delim == std::string_view::npos || colon < delim)) {
    return parse_url(reference);
  }
  if (reference.substr(0, 2) == "//") {
    return parse_url(base.scheme + ":" + std::string(reference));
  }
  Url url = base;
  url.query.clear();
  if (reference.empty()) {
    url.query = base.query;
    return url;
  }
  auto q = reference.find('?');
  std::string_view path = reference.substr(0, q);
  std::string query = q == std::string_view::npos ? "" : std::string(reference.substr(q + 1));
  if (path.empty()) {
    url.query = query;
    return url;
  }
  if (path.front() == '/') {
    url.path = remove_dot_segments(path);
  } else {
    std::string merged = base.path.substr(0, base.path.rfind('/') + 1);
    if (merged.empty()) merged = "/";
    merged += path;
    url.path = remove_dot_segments(merged);
  }
  if (url.path.empty()) url.path = "/";
  url.query = query;
  return url;
}

LinkScan extract_links(std::string_view html, std::string_view base_url) {
  auto base = parse_url(base_url);
  if (!base || (base->scheme != "http" && base->scheme != "https")) {
    throw Error("base URL is not an absolute http(s) URL: " + std::string(base_url));
  }
  LinkScan scan;
  std::optional<LinkRecord> open;
  std::string anchor_text;
  auto finish = [&] {
    if (open) {
      open->anchor_text = normalize_whitespace(anchor_text);
      scan.links.push_back(std::move(*open));
      open.reset();
    }
    anchor_text.clear();
  };
  for (const auto &token : lex_html(html)) {
    if (token.type == HtmlToken::kText) {
      if (open) anchor_text += token.text;
      continue;
    }
    if (token.name != "a") continue;
    if (token.type == HtmlToken::kEnd) {
      finish();
      continue;
    }
    finish();
    ++scan.anchors;
    const std::string *href = token.attribute("href");
    std::string target = href ? normalize_whitespace(*href) : "";
    if (target.empty() || target.front() == '#') {
      ++scan.dropped;
      continue;
    }
    auto resolved = resolve_url(*base, target);
    if (!resolved || (resolved->scheme != "http" && resolved->scheme != "https") ||
        resolved->host.empty()) {
      ++scan.unresolved;
      continue;
    }
    LinkRecord record;
    record.target = resolved->to_string();
    record.scope = resolved->host == base->host && resolved->port == base->port
                       ? LinkScope::kInternal
                       : LinkScope::kExternal;
    open = std::move(record);
  }
  finish();
  return scan;
}

std::vector<FactTriple> extract_table_facts(const std::vector<Block> &cells) {
  std::map<size_t, std::map<size_t, const Block *>> rows;
  for (const auto &cell : cells) {
    if (!cell.table) continue;
    rows[cell.table->row][cell.table->column] = &cell;
  }
  if (rows.empty()) return {};
  size_t width = rows.begin()->second.size();
  size_t expected_row = 0;
  for (const auto &[r, columns] : rows) {
    if (r != expected_row++ || columns.size() != width ||
        columns.rbegin()->first != width - 1) {
      throw RaggedTableError("table row " + std::to_string(r) + " has " +
                             std::to_string(columns.size()) +
                             " cells, expected " + std::to_string(width));
    }
  }
  std::vector<FactTriple> facts;
  if (rows.size() < 2 || width < 2) return facts;
  const auto &header = rows.at(0);
  for (const auto &[r, columns] : rows) {
    if (r == 0) continue;
    for (size_t c = 1; c < width; ++c) {
      FactTriple fact{columns.at(0)->text, header.at(c)->text,
                      columns.at(c)->text};
      if (fact.entity.empty() || fact.feature.empty() || fact.value.empty()) {
        continue;
      }
      facts.push_back(std::move(fact));
    }
  }
  return facts;
}

std::vector<std::vector<Block>> group_tables(const std::vector<Block> &blocks) {
  std::map<size_t, std::vector<Block>> tables;
  for (const auto &block : blocks) {
    if (block.kind == BlockKind::kTableCell && block.table) {
      tables[block.table->table].push_back(block);
    }
  }
  std::vector<std::vector<Block>> out;
  for (auto &[index, cells] : tables) out.push_back(std::move(cells));
  return out;
}

std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::string &base_dir) {
  std::vector<ManifestEntry> entries;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string trimmed = normalize_whitespace(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ConfigError("manifest line " + std::to_string(line_no) +
                        ": expected <path>TAB<url>");
    }
    ManifestEntry entry;
    entry.path = normalize_whitespace(line.substr(0, tab));
    entry.url = normalize_whitespace(line.substr(tab + 1));
    if (entry.path.empty() || entry.url.empty()) {
      throw ConfigError("manifest line " + std::to_string(line_no) +
                        ": empty path or url");
    }
    std::filesystem::path p(entry.path);
    if (p.is_relative() && !base_dir.empty()) {
      entry.path = (std::filesystem::path(base_dir) / p).lexically_normal().string();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace semdoc
