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

#include "semdoc/doc_model.h"

#include <cctype>
#include <set>
#include <tuple>

#include "semdoc/errors.h"

namespace semdoc {

namespace {

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

std::vector<size_t> code_point_offsets(const std::string &text) {
  std::vector<size_t> offsets;
  offsets.reserve(text.size() + 1);
  for (size_t i = 0; i < text.size(); ++i) {
    if (!is_continuation(static_cast<unsigned char>(text[i]))) {
      offsets.push_back(i);
    }
  }
  offsets.push_back(text.size());
  return offsets;
}

size_t count_code_points(std::string_view text) {
  size_t n = 0;
  for (char c : text) {
    if (!is_continuation(static_cast<unsigned char>(c))) ++n;
  }
  return n;
}

std::string span_string(const Span &span) {
  return "[" + std::to_string(span.begin) + "," + std::to_string(span.end) +
         ")";
}

void insert(std::vector<Annotation> &siblings, Annotation node) {
  for (auto &sibling : siblings) {
    if (sibling.span.contains(node.span)) {
      if (sibling.span == node.span && sibling.tag == node.tag &&
          sibling.attributes == node.attributes) {
        return;  // exact duplicate
      }
      insert(sibling.children, std::move(node));
      return;
    }
  }

  std::vector<Annotation> kept;
  for (auto &sibling : siblings) {
    if (node.span.contains(sibling.span)) {
      node.children.push_back(std::move(sibling));
    } else if (sibling.span.disjoint(node.span)) {
      kept.push_back(std::move(sibling));
    } else {
      throw OverlapError("span " + span_string(node.span) + " of <" +
                         node.tag + "> partially overlaps <" + sibling.tag +
                         "> at " + span_string(sibling.span));
    }
  }
  auto pos = kept.begin();
  while (pos != kept.end() &&
         (pos->span.begin < node.span.begin ||
          (pos->span.begin == node.span.begin && pos->span.empty()))) {
    ++pos;
  }
  kept.insert(pos, std::move(node));
  siblings = std::move(kept);
}

size_t count(const std::vector<Annotation> &nodes) {
  size_t n = 0;
  for (const auto &node : nodes) n += 1 + count(node.children);
  return n;
}

bool is_name_char(unsigned char c) {
  return std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == ':' ||
         c >= 0x80;
}

void check_level(const std::vector<Annotation> &nodes, const Span &parent,
                 std::set<std::tuple<std::string, size_t, size_t, Attributes>>
                     &seen) {
  const Annotation *previous = nullptr;
  for (const auto &node : nodes) {
    if (!is_xml_name(node.tag)) {
      throw Error("illegal element name '" + node.tag + "'");
    }
    if (node.span.begin > node.span.end || !parent.contains(node.span)) {
      throw Error("<" + node.tag + "> at " + span_string(node.span) +
                  " escapes its parent " + span_string(parent));
    }
    if (previous != nullptr && previous->span.end > node.span.begin) {
      throw Error("siblings <" + previous->tag + "> and <" + node.tag +
                  "> are unordered or overlap");
    }
    for (const auto &[name, value] : node.attributes) {
      if (!is_xml_name(name)) {
        throw Error("illegal attribute name '" + name + "'");
      }
    }
    if (!seen.emplace(node.tag, node.span.begin, node.span.end,
                      node.attributes)
             .second) {
      throw Error("duplicate annotation <" + node.tag + "> at " +
                  span_string(node.span));
    }
    check_level(node.children, node.span, seen);
    previous = &node;
  }
}

void append_attributes(std::string &out, const Attributes &attributes) {
  for (const auto &[name, value] : attributes) {
    out += ' ';
    out += name;
    out += "=\"";
    out += escape_xml(value);
    out += '"';
  }
}

class Emitter {
 public:
  Emitter(const AnnotatedDocument &doc, EmitMode mode)
      : doc_(doc), pretty_(mode == EmitMode::kPretty) {}

  void content(std::string &out, const std::vector<Annotation> &children,
               Span parent, int depth) {
    bool element_only = pretty_ && !children.empty() &&
                        whitespace_gaps(children, parent);
    size_t cursor = parent.begin;
    for (const auto &child : children) {
      if (element_only) {
        out += '\n';
        out.append(2 * (depth + 1), ' ');
      } else {
        out += escape_xml(doc_.slice({cursor, child.span.begin}));
      }
      element(out, child, depth + 1);
      cursor = child.span.end;
    }
    if (element_only) {
      out += '\n';
      out.append(2 * depth, ' ');
    } else {
      out += escape_xml(doc_.slice({cursor, parent.end}));
    }
  }

  void element(std::string &out, const Annotation &node, int depth) {
    out += '<';
    out += node.tag;
    append_attributes(out, node.attributes);
    out += '>';
    content(out, node.children, node.span, depth);
    out += "</";
    out += node.tag;
    out += '>';
  }

 private:
  bool whitespace_gaps(const std::vector<Annotation> &children, Span parent) {
    size_t cursor = parent.begin;
    auto blank = [&](Span gap) {
      for (char c : doc_.slice(gap)) {
        if (c != ' ' && c != '\n' && c != '\t' && c != '\r') return false;
      }
      return true;
    };
    for (const auto &child : children) {
      if (!blank({cursor, child.span.begin})) return false;
      cursor = child.span.end;
    }
    return blank({cursor, parent.end});
  }

  const AnnotatedDocument &doc_;
  bool pretty_;
};

// Recursive descent over the XML subset emitted above plus the usual
// prologue noise.
class XmlReader {
 public:
  explicit XmlReader(std::string_view xml) : xml_(xml) {}

  AnnotatedDocument read() {
    skip_misc();
    if (at_end() || peek() != '<') fail("expected root element");
    std::string root_tag;
    Attributes root_attributes;
    bool self_closing = false;
    read_start_tag(root_tag, root_attributes, self_closing);
    bool unwrap = root_tag == "DOC" && root_attributes.empty();
    if (!unwrap) builder_.open(root_tag, std::move(root_attributes));
    if (!self_closing) read_content(root_tag);
    if (!unwrap) builder_.close();
    skip_misc();
    if (!at_end()) fail("content after root element");
    try {
      return std::move(builder_).build();
    } catch (const MalformedXmlError &) {
      throw;
    } catch (const Error &e) {
      throw MalformedXmlError(e.what(), pos_);
    }
  }

 private:
  [[noreturn]] void fail(const std::string &message) const {
    throw MalformedXmlError(message, pos_);
  }

  bool at_end() const { return pos_ >= xml_.size(); }
  char peek() const { return xml_[pos_]; }
  bool starts_with(std::string_view s) const {
    return xml_.substr(pos_, s.size()) == s;
  }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\n' || peek() == '\t' ||
                         peek() == '\r')) {
      ++pos_;
    }
  }

  void skip_until(std::string_view terminator) {
    auto end = xml_.find(terminator, pos_);
    if (end == std::string_view::npos) fail("unterminated construct");
    pos_ = end + terminator.size();
  }

  void skip_doctype() {
    int brackets = 0;
    while (!at_end()) {
      char c = xml_[pos_++];
      if (c == '[') ++brackets;
      if (c == ']') --brackets;
      if (c == '>' && brackets <= 0) return;
    }
    fail("unterminated DOCTYPE");
  }

  void skip_misc() {
    for (;;) {
      skip_space();
      if (starts_with("<?")) {
        skip_until("?>");
      } else if (starts_with("<!--")) {
        skip_until("-->");
      } else if (starts_with("<!DOCTYPE")) {
        skip_doctype();
      } else {
        return;
      }
    }
  }

  std::string read_name() {
    size_t start = pos_;
    while (!at_end() && is_name_char(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    std::string name(xml_.substr(start, pos_ - start));
    if (!is_xml_name(name)) fail("invalid name '" + name + "'");
    return name;
  }

  std::string read_reference() {
    // Positioned just after '&'.
    auto semi = xml_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 10) {
      fail("unterminated entity reference");
    }
    std::string_view ref = xml_.substr(pos_, semi - pos_);
    pos_ = semi + 1;
    if (ref == "lt") return "<";
    if (ref == "gt") return ">";
    if (ref == "amp") return "&";
    if (ref == "quot") return "\"";
    if (ref == "apos") return "'";
    if (ref.size() > 1 && ref[0] == '#') {
      unsigned long code = 0;
      try {
        code = ref[1] == 'x' ? std::stoul(std::string(ref.substr(2)), nullptr, 16)
                             : std::stoul(std::string(ref.substr(1)), nullptr, 10);
      } catch (const std::exception &) {
        fail("bad character reference");
      }
      return encode_utf8(code);
    }
    fail("unknown entity '&" + std::string(ref) + ";'");
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
    } else {
      fail("character reference out of range");
    }
    return out;
  }

  void read_start_tag(std::string &tag, Attributes &attributes,
                      bool &self_closing) {
    ++pos_;  // '<'
    tag = read_name();
    for (;;) {
      skip_space();
      if (at_end()) fail("unterminated start tag <" + tag + ">");
      if (peek() == '>') {
        ++pos_;
        self_closing = false;
        return;
      }
      if (starts_with("/>")) {
        pos_ += 2;
        self_closing = true;
        return;
      }
      std::string name = read_name();
      skip_space();
      if (at_end() || peek() != '=') fail("expected '=' after attribute");
      ++pos_;
      skip_space();
      if (at_end() || (peek() != '"' && peek() != '\'')) {
        fail("expected quoted attribute value");
      }
      char quote = xml_[pos_++];
      std::string value;
      while (!at_end() && peek() != quote) {
        if (peek() == '<') fail("'<' in attribute value");
        if (peek() == '&') {
          ++pos_;
          value += read_reference();
        } else {
          value += xml_[pos_++];
        }
      }
      if (at_end()) fail("unterminated attribute value");
      ++pos_;
      for (const auto &existing : attributes) {
        if (existing.first == name) fail("duplicate attribute " + name);
      }
      attributes.emplace_back(std::move(name), std::move(value));
    }
  }

  void read_content(const std::string &parent) {
    std::string text;
    auto flush = [&] {
      if (!text.empty()) {
        builder_.text(text);
        text.clear();
      }
    };
    while (!at_end()) {
      char c = peek();
      if (c == '<') {
        if (starts_with("</")) {
          flush();
          pos_ += 2;
          std::string name = read_name();
          skip_space();
          if (at_end() || peek() != '>') fail("malformed end tag");
          ++pos_;
          if (name != parent) {
            fail("end tag </" + name + "> does not match <" + parent + ">");
          }
          return;
        }
        if (starts_with("<!--")) {
          skip_until("-->");
          continue;
        }
        if (starts_with("<![CDATA[")) {
          pos_ += 9;
          auto end = xml_.find("]]>", pos_);
          if (end == std::string_view::npos) fail("unterminated CDATA");
          text.append(xml_.substr(pos_, end - pos_));
          pos_ = end + 3;
          continue;
        }
        if (starts_with("<?")) {
          skip_until("?>");
          continue;
        }
        flush();
        std::string tag;
        Attributes attributes;
        bool self_closing = false;
        read_start_tag(tag, attributes, self_closing);
        builder_.open(tag, std::move(attributes));
        if (!self_closing) read_content(tag);
        builder_.close();
      } else if (c == '&') {
        ++pos_;
        text += read_reference();
      } else if (c == '>' && starts_with("]]>")) {
        fail("']]>' in character data");
      } else {
        text += c;
        ++pos_;
      }
    }
    fail("unclosed element <" + parent + ">");
  }

  std::string_view xml_;
  size_t pos_ = 0;
  DocumentBuilder builder_;
};

}  // namespace

const std::string *Annotation::attribute(std::string_view name) const {
  for (const auto &[key, value] : attributes) {
    if (key == name) return &value;
  }
  return nullptr;
}

AnnotatedDocument::AnnotatedDocument(std::string text)
    : text_(std::move(text)), offsets_(code_point_offsets(text_)) {}

std::string_view AnnotatedDocument::slice(Span span) const {
  if (span.begin > span.end || span.end > length()) {
    throw BoundsError("span " + span_string(span) + " exceeds text length " +
                      std::to_string(length()));
  }
  return std::string_view(text_).substr(
      offsets_[span.begin], offsets_[span.end] - offsets_[span.begin]);
}

AnnotatedDocument AnnotatedDocument::annotate(Span span, std::string tag,
                                              Attributes attributes) const {
  if (span.begin > span.end || span.end > length()) {
    throw BoundsError("span " + span_string(span) + " exceeds text length " +
                      std::to_string(length()));
  }
  if (!is_xml_name(tag)) throw Error("illegal element name '" + tag + "'");
  for (const auto &[name, value] : attributes) {
    if (!is_xml_name(name)) throw Error("illegal attribute name '" + name + "'");
  }
  AnnotatedDocument result(*this);
  insert(result.roots_,
         Annotation{std::move(tag), std::move(attributes), span, {}});
  return result;
}

size_t AnnotatedDocument::annotation_count() const { return count(roots_); }

void DocumentBuilder::open(std::string tag, Attributes attributes) {
  stack_.push_back(Annotation{std::move(tag), std::move(attributes),
                              Span{length_, length_}, {}});
}

void DocumentBuilder::text(std::string_view utf8) {
  text_.append(utf8);
  length_ += count_code_points(utf8);
}

void DocumentBuilder::close() {
  if (stack_.empty()) throw Error("close() without open element");
  Annotation node = std::move(stack_.back());
  stack_.pop_back();
  node.span.end = length_;
  if (stack_.empty()) {
    roots_.push_back(std::move(node));
  } else {
    stack_.back().children.push_back(std::move(node));
  }
}

void DocumentBuilder::element(std::string tag, std::string_view utf8,
                              Attributes attributes) {
  open(std::move(tag), std::move(attributes));
  text(utf8);
  close();
}

AnnotatedDocument DocumentBuilder::build() && {
  if (!stack_.empty()) {
    throw Error("element <" + stack_.back().tag + "> left open");
  }
  AnnotatedDocument doc(std::move(text_));
  doc.roots_ = std::move(roots_);
  check_invariants(doc);
  return doc;
}

std::string emit_xml(const AnnotatedDocument &doc, EmitOptions options) {
  Emitter emitter(doc, options.mode);
  std::string out;
  Span whole{0, doc.length()};
  if (options.synthetic_root) {
    out += "<DOC>";
    emitter.content(out, doc.annotations(), whole, 0);
    out += "</DOC>";
  } else {
    const auto &roots = doc.annotations();
    if (roots.size() != 1 || !(roots.front().span == whole)) {
      throw Error("document has no single root element spanning its text");
    }
    emitter.element(out, roots.front(), 0);
  }
  return out;
}

AnnotatedDocument parse_xml(std::string_view xml) {
  return XmlReader(xml).read();
}

bool is_xml_name(std::string_view name) {
  if (name.empty()) return false;
  unsigned char first = static_cast<unsigned char>(name.front());
  if (!(std::isalnum(first) || first == '_' || first == ':' || first >= 0x80)) {
    return false;
  }
  for (char c : name) {
    if (!is_name_char(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

void check_invariants(const AnnotatedDocument &doc) {
  std::set<std::tuple<std::string, size_t, size_t, Attributes>> seen;
  check_level(doc.annotations(), Span{0, doc.length()}, seen);
}

}  // namespace semdoc
