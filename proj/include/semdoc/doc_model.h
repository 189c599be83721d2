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

// Text with strictly nested, attributed span annotations and its inline XML
// serialization. All offsets are code point offsets into the UTF-8 text.

#ifndef SEMDOC_DOC_MODEL_H_
#define SEMDOC_DOC_MODEL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semdoc {

// Half-open range [begin, end).
struct Span {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool contains(const Span &other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool disjoint(const Span &other) const {
    return end <= other.begin || other.end <= begin;
  }
  bool operator==(const Span &) const = default;
};

using Attributes = std::vector<std::pair<std::string, std::string>>;

struct Annotation {
  std::string tag;
  Attributes attributes;
  Span span;
  std::vector<Annotation> children;

  // Returns nullptr when the attribute is absent.
  const std::string *attribute(std::string_view name) const;

  bool operator==(const Annotation &) const = default;
};

class AnnotatedDocument {
 public:
  AnnotatedDocument() : AnnotatedDocument(std::string()) {}
  explicit AnnotatedDocument(std::string text);

  const std::string &text() const { return text_; }

  // Number of code points.
  size_t length() const { return offsets_.size() - 1; }

  // UTF-8 bytes covered by a code point span.
  std::string_view slice(Span span) const;

  // Top-level annotations in offset order.
  const std::vector<Annotation> &annotations() const { return roots_; }

  // Returns a copy with one more annotation, placed where strict nesting
  // puts it: it adopts every existing annotation it contains and descends
  // into any annotation containing it. When an annotation with exactly the
  // same span already exists, the new one goes inside it. Adding an exact
  // duplicate (tag, span and attributes) returns the document unchanged.
  // Throws BoundsError or OverlapError.
  AnnotatedDocument annotate(Span span, std::string tag,
                             Attributes attributes = {}) const;

  // Total number of annotations in the tree.
  size_t annotation_count() const;

  bool operator==(const AnnotatedDocument &other) const {
    return text_ == other.text_ && roots_ == other.roots_;
  }

 private:
  friend class DocumentBuilder;

  std::string text_;
  std::vector<size_t> offsets_;  // byte offset of every code point, plus end
  std::vector<Annotation> roots_;
};

inline AnnotatedDocument make_document(std::string text) {
  return AnnotatedDocument(std::move(text));
}

// Builds a document in document order, the way a SAX writer would. Used for
// generated documents (concept lists, profiles) and by parse_xml.
class DocumentBuilder {
 public:
  void open(std::string tag, Attributes attributes = {});
  void text(std::string_view utf8);
  void close();
  // Convenience for open + text + close.
  void element(std::string tag, std::string_view utf8,
               Attributes attributes = {});

  size_t depth() const { return stack_.size(); }

  // Throws Error when elements are still open or invariants are violated.
  AnnotatedDocument build() &&;

 private:
  std::string text_;
  size_t length_ = 0;
  std::vector<Annotation> roots_;
  std::vector<Annotation> stack_;
};

enum class EmitMode { kCanonical, kPretty };

struct EmitOptions {
  EmitMode mode = EmitMode::kCanonical;
  // When false the document must consist of exactly one top-level
  // annotation spanning the whole text, which becomes the root element.
  bool synthetic_root = true;
};

// Serializes the document with a synthetic DOC root. Canonical mode is a
// single line reproducing the text exactly; pretty mode indents elements
// whose content is element-only by two spaces per level.
std::string emit_xml(const AnnotatedDocument &doc, EmitOptions options = {});

// Inverse of emit_xml. A DOC root without attributes is unwrapped; any other
// root element becomes the single top-level annotation. Comments, the XML
// declaration and a DOCTYPE are skipped. Throws MalformedXmlError.
AnnotatedDocument parse_xml(std::string_view xml);

// Element and attribute names. Names may start with a digit so that labels
// such as 3D-MS-ENTRY are representable.
bool is_xml_name(std::string_view name);

// Escapes & < > " ' as entity references.
std::string escape_xml(std::string_view text);

// Throws Error when the tree breaks bounds, nesting, ordering or
// uniqueness rules.
void check_invariants(const AnnotatedDocument &doc);

}  // namespace semdoc

#endif  // SEMDOC_DOC_MODEL_H_
