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

#include "semdoc/dtd.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "semdoc/errors.h"

namespace semdoc {
namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == ':' || (static_cast<unsigned char>(c) & 0x80);
}

class DtdReader {
 public:
  explicit DtdReader(std::string_view text) : text_(text) {}

  Dtd read() {
    Dtd dtd;
    skip_space();
    bool wrapped = false;
    if (starts_with("<!DOCTYPE")) {
      pos_ += 9;
      skip_space();
      name();
      skip_space();
      expect('[');
      wrapped = true;
    }
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) break;
      if (wrapped && text_[pos_] == ']') {
        ++pos_;
        skip_space();
        expect('>');
        skip_space();
        if (pos_ != text_.size()) fail("trailing content");
        wrapped = false;
        break;
      }
      if (starts_with("<!--")) {
        size_t end = text_.find("-->", pos_ + 4);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
      } else if (starts_with("<!ELEMENT")) {
        pos_ += 9;
        element(dtd);
      } else if (starts_with("<!ATTLIST")) {
        pos_ += 9;
        attlist();
      } else {
        fail("expected a declaration");
      }
    }
    if (wrapped) fail("unterminated DOCTYPE");
    for (auto &[element_name, attributes] : pending_attributes_) {
      if (!dtd.add_attributes(element_name, attributes))
        throw DanglingReferenceError("ATTLIST for undeclared element '" + element_name + "'");
    }
    for (const auto &decl : dtd.elements()) check_references(dtd, decl.name, decl.model);
    return dtd;
  }

 private:
  [[noreturn]] void fail(const std::string &message) const {
    throw DtdSyntaxError(message, pos_);
  }

  bool starts_with(std::string_view prefix) const {
    return text_.substr(pos_).starts_with(prefix);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string name() {
    skip_space();
    size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string quoted() {
    skip_space();
    if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\'')) fail("expected a quoted value");
    char quote = text_[pos_++];
    size_t end = text_.find(quote, pos_);
    if (end == std::string_view::npos) fail("unterminated quoted value");
    std::string value(text_.substr(pos_, end - pos_));
    pos_ = end + 1;
    return value;
  }

  Occurrence occurrence() {
    if (pos_ < text_.size()) {
      switch (text_[pos_]) {
        case '?': ++pos_; return Occurrence::kOptional;
        case '*': ++pos_; return Occurrence::kStar;
        case '+': ++pos_; return Occurrence::kPlus;
      }
    }
    return Occurrence::kOne;
  }

  ContentParticle particle() {
    skip_space();
    if (accept('(')) return group();
    ContentParticle p;
    p.kind = ContentParticle::Kind::kElement;
    p.name = name();
    p.occurrence = occurrence();
    return p;
  }

  // After '('.
  ContentParticle group() {
    ContentParticle g;
    g.children.push_back(particle());
    char separator = 0;
    for (;;) {
      skip_space();
      if (accept(')')) break;
      char c = pos_ < text_.size() ? text_[pos_] : 0;
      if (c != ',' && c != '|') fail("expected ',', '|' or ')'");
      if (separator && c != separator) fail("mixed ',' and '|' in one group");
      separator = c;
      ++pos_;
      g.children.push_back(particle());
    }
    g.kind = separator == '|' ? ContentParticle::Kind::kChoice : ContentParticle::Kind::kSequence;
    g.occurrence = occurrence();
    return g;
  }

  ContentParticle content_spec() {
    skip_space();
    ContentParticle p;
    if (starts_with("EMPTY")) {
      pos_ += 5;
      p.kind = ContentParticle::Kind::kEmpty;
      return p;
    }
    if (starts_with("ANY")) {
      pos_ += 3;
      p.kind = ContentParticle::Kind::kAny;
      return p;
    }
    expect('(');
    skip_space();
    if (!starts_with("#PCDATA")) return group();
    pos_ += 7;
    ContentParticle pcdata;
    pcdata.kind = ContentParticle::Kind::kPcdata;
    if (accept(')')) {
      if (pos_ < text_.size() && text_[pos_] == '*') ++pos_;
      return pcdata;
    }
    // Mixed content: (#PCDATA | a | b)*
    p.kind = ContentParticle::Kind::kChoice;
    p.children.push_back(pcdata);
    while (accept('|')) {
      ContentParticle e;
      e.kind = ContentParticle::Kind::kElement;
      e.name = name();
      p.children.push_back(e);
    }
    expect(')');
    if (pos_ >= text_.size() || text_[pos_] != '*') fail("mixed content must end with ')*'");
    ++pos_;
    p.occurrence = Occurrence::kStar;
    return p;
  }

  void element(Dtd &dtd) {
    size_t at = pos_;
    ElementDecl decl;
    decl.name = name();
    decl.model = content_spec();
    expect('>');
    std::string element_name = decl.name;
    if (!dtd.add(std::move(decl))) throw DtdSyntaxError("element '" + element_name + "' declared twice", at);
  }

  void attlist() {
    std::string element_name = name();
    auto &list = pending_attributes_[element_name];
    for (;;) {
      if (accept('>')) return;
      AttributeDecl attr;
      attr.name = name();
      skip_space();
      if (accept('(')) {
        attr.values.push_back(name());
        while (accept('|')) attr.values.push_back(name());
        expect(')');
      } else {
        std::string type = name();
        if (type != "CDATA" && type != "ID" && type != "IDREF" && type != "NMTOKEN")
          fail("unsupported attribute type '" + type + "'");
      }
      skip_space();
      if (starts_with("#REQUIRED")) {
        pos_ += 9;
        attr.required = true;
      } else if (starts_with("#IMPLIED")) {
        pos_ += 8;
      } else {
        if (starts_with("#FIXED")) pos_ += 6;
        attr.default_value = quoted();
        if (!attr.values.empty() &&
            std::find(attr.values.begin(), attr.values.end(), *attr.default_value) == attr.values.end())
          fail("default '" + *attr.default_value + "' is not among the enumerated values");
      }
      for (const auto &existing : list)
        if (existing.name == attr.name) fail("attribute '" + attr.name + "' declared twice");
      list.push_back(std::move(attr));
    }
  }

  void check_references(const Dtd &dtd, const std::string &owner, const ContentParticle &p) {
    if (p.kind == ContentParticle::Kind::kElement && !dtd.find(p.name))
      throw DanglingReferenceError("element '" + owner + "' refers to undeclared element '" + p.name + "'");
    for (const auto &child : p.children) check_references(dtd, owner, child);
  }

  std::string_view text_;
  size_t pos_ = 0;
  std::map<std::string, std::vector<AttributeDecl>> pending_attributes_;
};

void append_occurrence(std::string &out, Occurrence o) {
  switch (o) {
    case Occurrence::kOne: break;
    case Occurrence::kOptional: out += '?'; break;
    case Occurrence::kStar: out += '*'; break;
    case Occurrence::kPlus: out += '+'; break;
  }
}

using Positions = std::set<size_t>;

// Every position reachable after matching `p` once (ignoring its
// occurrence marker) from any of `from`.
Positions step_once(const ContentParticle &p, const std::vector<std::string> &seq, const Positions &from);

Positions step(const ContentParticle &p, const std::vector<std::string> &seq, const Positions &from) {
  if (from.empty()) return from;
  switch (p.occurrence) {
    case Occurrence::kOne:
      return step_once(p, seq, from);
    case Occurrence::kOptional: {
      Positions out = step_once(p, seq, from);
      out.insert(from.begin(), from.end());
      return out;
    }
    case Occurrence::kStar:
    case Occurrence::kPlus: {
      Positions reached = p.occurrence == Occurrence::kStar ? from : Positions{};
      Positions frontier = step_once(p, seq, from);
      while (!frontier.empty()) {
        Positions next;
        for (size_t pos : frontier)
          if (reached.insert(pos).second) next.insert(pos);
        frontier = step_once(p, seq, next);
      }
      return reached;
    }
  }
  return {};
}

Positions step_once(const ContentParticle &p, const std::vector<std::string> &seq, const Positions &from) {
  using Kind = ContentParticle::Kind;
  Positions out;
  switch (p.kind) {
    case Kind::kElement:
      for (size_t pos : from)
        if (pos < seq.size() && seq[pos] == p.name) out.insert(pos + 1);
      return out;
    case Kind::kPcdata:
    case Kind::kEmpty:
      return from;
    case Kind::kAny:
      for (size_t pos = from.empty() ? seq.size() : *from.begin(); pos <= seq.size(); ++pos) out.insert(pos);
      return out;
    case Kind::kSequence: {
      Positions current = from;
      for (const auto &child : p.children) current = step(child, seq, current);
      return current;
    }
    case Kind::kChoice:
      for (const auto &child : p.children) {
        Positions reached = step(child, seq, from);
        out.insert(reached.begin(), reached.end());
      }
      return out;
  }
  return out;
}

bool has_text_outside_children(const AnnotatedDocument &doc, const Annotation &a) {
  size_t cursor = a.span.begin;
  auto check = [&](size_t end) {
    std::string_view gap = doc.slice({cursor, end});
    return std::any_of(gap.begin(), gap.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  };
  for (const auto &child : a.children) {
    if (check(child.span.begin)) return true;
    cursor = child.span.end;
  }
  return check(a.span.end);
}

class Validator {
 public:
  Validator(const AnnotatedDocument &doc, const Dtd &dtd) : doc_(doc), dtd_(dtd) {}

  ValidationReport run() {
    ValidationReport report;
    if (doc_.annotations().size() != 1) {
      report.violations.push_back({"/", "", "document must have exactly one root element"});
      report.with_defaults = doc_;
      return report;
    }
    DocumentBuilder builder;
    size_t cursor = 0;
    visit(doc_.annotations()[0], "", 1, builder, cursor, report.violations);
    builder.text(doc_.slice({cursor, doc_.length()}));
    report.with_defaults = std::move(builder).build();
    return report;
  }

 private:
  void visit(const Annotation &a, const std::string &parent_path, size_t index, DocumentBuilder &builder,
             size_t &cursor, std::vector<Violation> &out) {
    builder.text(doc_.slice({cursor, a.span.begin}));
    cursor = a.span.begin;
    std::string path = parent_path + "/" + a.tag + "[" + std::to_string(index) + "]";
    const ElementDecl *decl = dtd_.find(a.tag);
    Attributes attributes = a.attributes;
    if (!decl) {
      out.push_back({path, "", "undeclared element '" + a.tag + "'"});
    } else {
      check_content(*decl, a, path, out);
      check_attributes(*decl, attributes, path, out);
    }
    builder.open(a.tag, std::move(attributes));
    std::map<std::string, size_t> seen;
    for (const auto &child : a.children) visit(child, path, ++seen[child.tag], builder, cursor, out);
    builder.text(doc_.slice({cursor, a.span.end}));
    cursor = a.span.end;
    builder.close();
  }

  void check_content(const ElementDecl &decl, const Annotation &a, const std::string &path,
                     std::vector<Violation> &out) {
    std::string model = "<!ELEMENT " + decl.name + " " + decl.model.to_string() + ">";
    using Kind = ContentParticle::Kind;
    if (decl.model.kind == Kind::kAny) return;
    if (decl.model.kind == Kind::kEmpty) {
      if (!a.span.empty()) out.push_back({path, model, "element declared EMPTY has content"});
      return;
    }
    if (decl.pcdata_only()) {
      if (!a.children.empty())
        out.push_back({path, model, "unexpected child element '" + a.children.front().tag + "'"});
      return;
    }
    if (decl.mixed()) {
      for (const auto &child : a.children) {
        bool allowed = std::any_of(decl.model.children.begin(), decl.model.children.end(),
                                   [&](const ContentParticle &p) { return p.name == child.tag; });
        if (!allowed) out.push_back({path, model, "unexpected child element '" + child.tag + "'"});
      }
      return;
    }
    if (has_text_outside_children(doc_, a)) out.push_back({path, model, "text in element-only content"});
    std::vector<std::string> names;
    for (const auto &child : a.children) names.push_back(child.tag);
    if (!matches_model(decl.model, names)) {
      std::string got;
      for (const auto &n : names) got += (got.empty() ? "" : ", ") + n;
      out.push_back({path, model, "children (" + got + ") do not match the content model"});
    }
  }

  void check_attributes(const ElementDecl &decl, Attributes &attributes, const std::string &path,
                        std::vector<Violation> &out) {
    for (const auto &[name, value] : attributes) {
      auto it = std::find_if(decl.attributes.begin(), decl.attributes.end(),
                             [&](const AttributeDecl &d) { return d.name == name; });
      std::string model = "<!ATTLIST " + decl.name + " " + name + ">";
      if (it == decl.attributes.end()) {
        out.push_back({path, model, "undeclared attribute '" + name + "'"});
      } else if (!it->values.empty() && std::find(it->values.begin(), it->values.end(), value) == it->values.end()) {
        out.push_back({path, model, "value '" + value + "' is not allowed for attribute '" + name + "'"});
      }
    }
    for (const auto &d : decl.attributes) {
      bool present = std::any_of(attributes.begin(), attributes.end(), [&](const auto &kv) { return kv.first == d.name; });
      if (present) continue;
      if (d.default_value) {
        attributes.emplace_back(d.name, *d.default_value);
      } else if (d.required) {
        out.push_back({path, "<!ATTLIST " + decl.name + " " + d.name + ">", "missing required attribute '" + d.name + "'"});
      }
    }
  }

  const AnnotatedDocument &doc_;
  const Dtd &dtd_;
};

}  // namespace

std::string ContentParticle::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::kEmpty: return "EMPTY";
    case Kind::kAny: return "ANY";
    case Kind::kPcdata: return "(#PCDATA)";
    case Kind::kElement:
      out = name;
      break;
    case Kind::kSequence:
    case Kind::kChoice: {
      out = "(";
      for (size_t i = 0; i < children.size(); ++i) {
        if (i) out += kind == Kind::kSequence ? ", " : " | ";
        out += children[i].kind == Kind::kPcdata ? "#PCDATA" : children[i].to_string();
      }
      out += ")";
      break;
    }
  }
  append_occurrence(out, occurrence);
  return out;
}

bool ElementDecl::pcdata_only() const { return model.kind == ContentParticle::Kind::kPcdata; }

bool ElementDecl::mixed() const {
  return model.kind == ContentParticle::Kind::kChoice && !model.children.empty() &&
         model.children.front().kind == ContentParticle::Kind::kPcdata;
}

const ElementDecl *Dtd::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &elements_[it->second];
}

bool Dtd::add(ElementDecl decl) {
  if (index_.count(decl.name)) return false;
  index_.emplace(decl.name, elements_.size());
  elements_.push_back(std::move(decl));
  return true;
}

bool Dtd::add_attributes(std::string_view element, const std::vector<AttributeDecl> &attributes) {
  auto it = index_.find(element);
  if (it == index_.end()) return false;
  auto &list = elements_[it->second].attributes;
  list.insert(list.end(), attributes.begin(), attributes.end());
  return true;
}

Dtd parse_dtd(std::string_view text) { return DtdReader(text).read(); }

bool matches_model(const ContentParticle &model, const std::vector<std::string> &children) {
  return step(model, children, {0}).count(children.size()) > 0;
}

ValidationReport validate(const AnnotatedDocument &doc, const Dtd &dtd) {
  return Validator(doc, dtd).run();
}

}  // namespace semdoc
