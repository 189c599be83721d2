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

#include <random>

#include "doctest.h"
#include "generators.h"
#include "semdoc/errors.h"

namespace semdoc {
namespace {

// Character data of an emitted document, unescaped, in document order.
std::string character_data(const AnnotatedDocument &doc) {
  std::string out;
  size_t cursor = 0;
  // Leaves and gaps together reproduce the text; walk offsets directly.
  for (const auto &node : doc.annotations()) {
    out += doc.slice({cursor, node.span.begin});
    out += doc.slice(node.span);
    cursor = node.span.end;
  }
  out += doc.slice({cursor, doc.length()});
  return out;
}

void collect_spans(const std::vector<Annotation> &nodes,
                   std::vector<Span> &out) {
  for (const auto &node : nodes) {
    out.push_back(node.span);
    collect_spans(node.children, out);
  }
}

TEST_CASE("make_document") {
  CHECK(make_document("").length() == 0);
  auto doc = make_document("Grauguss");
  CHECK(doc.length() == 8);
  CHECK(doc.annotations().empty());
  CHECK(make_document("Kastenformat 500").text() == "Kastenformat 500");
  CHECK(make_document("Gie\xC3\x9F" "erei").length() == 8);
}

TEST_CASE("annotate nests by containment") {
  auto doc = make_document("Kastenformat 500");
  doc = doc.annotate({0, 12}, "N").annotate({13, 16}, "NR");
  REQUIRE(doc.annotations().size() == 2);
  CHECK(doc.annotations()[0].tag == "N");
  CHECK(doc.annotations()[1].tag == "NR");

  auto phrase = doc.annotate({0, 16}, "PHRASE");
  REQUIRE(phrase.annotations().size() == 1);
  CHECK(phrase.annotations()[0].children.size() == 2);
  // Value semantics.
  CHECK(doc.annotations().size() == 2);

  CHECK_THROWS_AS(doc.annotate({5, 14}, "X"), OverlapError);
  CHECK_THROWS_AS(doc.annotate({5, 17}, "X"), BoundsError);
}

TEST_CASE("equal spans nest the newcomer inside; duplicates are ignored") {
  auto doc = make_document("1000").annotate({0, 4}, "MS-ENTRY", {{"RULE", "MEAS2"}});
  doc = doc.annotate({0, 4}, "NR");
  CHECK(emit_xml(doc) ==
        "<DOC><MS-ENTRY RULE=\"MEAS2\"><NR>1000</NR></MS-ENTRY></DOC>");
  CHECK(doc.annotate({0, 4}, "NR") == doc);
}

TEST_CASE("emit_xml") {
  CHECK(emit_xml(make_document("")) == "<DOC></DOC>");
  CHECK(emit_xml(make_document("a<b")) == "<DOC>a&lt;b</DOC>");

  auto doc = make_document("Kastenformat 500 x 600");
  doc = doc.annotate({0, 12}, "N").annotate({13, 16}, "NR")
           .annotate({17, 18}, "ABBR").annotate({19, 22}, "NR");
  CHECK(emit_xml(doc) ==
        "<DOC><N>Kastenformat</N> <NR>500</NR> <ABBR>x</ABBR> <NR>600</NR></DOC>");

  auto attr = make_document("q").annotate({0, 1}, "A", {{"v", "1<\"2\"&"}});
  CHECK(emit_xml(attr) == "<DOC><A v=\"1&lt;&quot;2&quot;&amp;\">q</A></DOC>");
}

TEST_CASE("pretty emission indents element-only content") {
  DocumentBuilder b;
  b.open("profile");
  b.open("foundry");
  b.element("f_name", "Giesserei X");
  b.close();
  b.close();
  auto doc = std::move(b).build();
  CHECK(emit_xml(doc, {EmitMode::kPretty, false}) ==
        "<profile>\n  <foundry>\n    <f_name>Giesserei X</f_name>\n  </foundry>\n</profile>");
  CHECK(emit_xml(doc, {EmitMode::kCanonical, false}) ==
        "<profile><foundry><f_name>Giesserei X</f_name></foundry></profile>");
}

TEST_CASE("parse_xml") {
  auto doc = parse_xml("<DOC><N>x</N></DOC>");
  CHECK(doc.text() == "x");
  REQUIRE(doc.annotations().size() == 1);
  CHECK(doc.annotations()[0].tag == "N");
  CHECK(doc.annotations()[0].span == Span{0, 1});

  CHECK_THROWS_AS(parse_xml("<DOC><N>x</DOC>"), MalformedXmlError);
  CHECK_THROWS_AS(parse_xml("<DOC><N>x</N>"), MalformedXmlError);
  CHECK_THROWS_AS(parse_xml("<DOC>a &bogus; b</DOC>"), MalformedXmlError);
  CHECK_THROWS_AS(parse_xml("<DOC></DOC><DOC></DOC>"), MalformedXmlError);
  CHECK_THROWS_AS(parse_xml("<DOC><N>x</N><N>y</N></DOC>junk"),
                  MalformedXmlError);

  auto other = parse_xml(
      "<?xml version=\"1.0\"?>\n<!DOCTYPE profile SYSTEM \"profile.dtd\">\n"
      "<profile><!-- c --><quality>DIN &#x45;N</quality></profile>\n");
  REQUIRE(other.annotations().size() == 1);
  CHECK(other.annotations()[0].tag == "profile");
  CHECK(other.text() == "DIN EN");
}

TEST_CASE("malformed input reports a position") {
  try {
    parse_xml("<DOC><N>x</M></DOC>");
    FAIL("expected MalformedXmlError");
  } catch (const MalformedXmlError &e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("property: round trip and text preservation") {
  std::mt19937 rng(42);
  for (int i = 0; i < 300; ++i) {
    auto doc = testing::random_document(rng);
    auto xml = emit_xml(doc);
    auto back = parse_xml(xml);
    REQUIRE_MESSAGE(back == doc, xml);
    CHECK(character_data(doc) == doc.text());
    CHECK_NOTHROW(check_invariants(doc));
  }
}

TEST_CASE("property: OverlapError exactly on partial overlap") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 300; ++i) {
    auto doc = testing::random_document(rng, 8, 5);
    std::vector<Span> spans;
    collect_spans(doc.annotations(), spans);
    for (size_t a = 0; a <= doc.length(); ++a) {
      for (size_t b = a; b <= doc.length(); ++b) {
        Span s{a, b};
        bool partial = false;
        for (const auto &e : spans) {
          if (!e.contains(s) && !s.contains(e) && !e.disjoint(s)) partial = true;
        }
        bool threw = false;
        try {
          auto next = doc.annotate(s, "Z");
          CHECK(next.text() == doc.text());
        } catch (const OverlapError &) {
          threw = true;
        }
        CHECK(threw == partial);
      }
    }
  }
}

}  // namespace
}  // namespace semdoc
