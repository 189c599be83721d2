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

// A DTD subset (ELEMENT and ATTLIST declarations) and validation of
// annotated documents against it.

#ifndef SEMDOC_DTD_H_
#define SEMDOC_DTD_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semdoc/doc_model.h"

namespace semdoc {

enum class Occurrence { kOne, kOptional, kStar, kPlus };

struct ContentParticle {
  enum class Kind { kSequence, kChoice, kElement, kPcdata, kEmpty, kAny };
  Kind kind = Kind::kEmpty;
  std::string name;  // for kElement
  Occurrence occurrence = Occurrence::kOne;
  std::vector<ContentParticle> children;

  // DTD syntax, e.g. "(tel, fax*, email*, http)".
  std::string to_string() const;
  bool operator==(const ContentParticle &) const = default;
};

struct AttributeDecl {
  std::string name;
  std::vector<std::string> values;  // empty means CDATA
  std::optional<std::string> default_value;
  bool required = false;
};

struct ElementDecl {
  std::string name;
  ContentParticle model;
  std::vector<AttributeDecl> attributes;

  // (#PCDATA): text only, no element children.
  bool pcdata_only() const;
  // (#PCDATA | a | b)*: text mixed with the listed elements.
  bool mixed() const;
};

class Dtd {
 public:
  const ElementDecl *find(std::string_view name) const;
  const std::vector<ElementDecl> &elements() const { return elements_; }

  // False when the element is already declared.
  bool add(ElementDecl decl);
  // False when the element is not declared.
  bool add_attributes(std::string_view element, const std::vector<AttributeDecl> &attributes);

 private:
  std::vector<ElementDecl> elements_;
  std::map<std::string, size_t, std::less<>> index_;
};

// Accepts an optional <!DOCTYPE name [ ... ]> wrapper and comments. Throws
// DtdSyntaxError with a byte offset, or DanglingReferenceError when a
// content model or ATTLIST names an undeclared element.
Dtd parse_dtd(std::string_view text);

// Whether a sequence of child element names is in the language of a model.
bool matches_model(const ContentParticle &model, const std::vector<std::string> &children);

struct Violation {
  std::string path;   // e.g. /profile[1]/foundry[1]/name[1]
  std::string model;  // the violated declaration
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // The input with declared attribute defaults filled in.
  AnnotatedDocument with_defaults;

  bool valid() const { return violations.empty(); }
};

// The document must have exactly one top-level annotation.
ValidationReport validate(const AnnotatedDocument &doc, const Dtd &dtd);

}  // namespace semdoc

#endif  // SEMDOC_DTD_H_
