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

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "dtd_oracle.h"
#include "semdoc/chart_parser.h"
#include "semdoc/dtd.h"
#include "semdoc/errors.h"
#include "semdoc/pos_tagger.h"
#include "semdoc/profile.h"

namespace semdoc {
namespace {

const ResourceBundle &shipped() {
  static const ResourceBundle bundle = load_resources(default_resource_directory());
  return bundle;
}

const Dtd &profile_dtd() {
  static const Dtd dtd = [] {
    std::ifstream in(default_resource_directory() / "profile.dtd");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_dtd(ss.str());
  }();
  return dtd;
}

std::set<std::string> violation_paths(const ValidationReport &report) {
  std::set<std::string> out;
  for (const auto &v : report.violations) out.insert(v.path);
  return out;
}

TEST_CASE("parse_dtd: the shipped profile DTD") {
  const Dtd &dtd = profile_dtd();
  CHECK(dtd.elements().size() == 23);
  REQUIRE(dtd.find("contact"));
  CHECK(dtd.find("contact")->model.to_string() == "(tel, fax*, email*, http)");
  CHECK(dtd.find("scope")->model.to_string() == "(material, (weight*, dimension*))");
  CHECK(dtd.find("profile")->model.to_string() == "(foundry)+");
  CHECK(dtd.find("tel")->pcdata_only());
  const auto &attrs = dtd.find("dimension")->attributes;
  REQUIRE(attrs.size() == 1);
  CHECK(attrs[0].values == std::vector<std::string>{"mould", "dim"});
  CHECK(attrs[0].default_value == "mould");
}

TEST_CASE("parse_dtd: DOCTYPE wrapper, comments, mixed content, EMPTY") {
  Dtd dtd = parse_dtd(
      "<!DOCTYPE profile [\n<!-- c -->\n<!ELEMENT profile (#PCDATA | br)*>\n"
      "<!ELEMENT br EMPTY>\n<!ATTLIST br kind CDATA #REQUIRED>\n]>");
  CHECK(dtd.find("profile")->mixed());
  CHECK(dtd.find("profile")->model.to_string() == "(#PCDATA | br)*");
  CHECK(dtd.find("br")->model.kind == ContentParticle::Kind::kEmpty);
  CHECK(dtd.find("br")->attributes[0].required);
}

TEST_CASE("parse_dtd: errors") {
  auto offset = [](const char *text) -> size_t {
    try {
      parse_dtd(text);
    } catch (const DtdSyntaxError &e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(offset("<!ELEMENT a (b,)>") == 15);
  CHECK(offset("<!ELEMENT a (b, c | d)>") == 18);
  CHECK(offset("<!ELEMENT a (#PCDATA)>\n<!ELEMENT a (#PCDATA)>") == 32);
  CHECK(offset("<!ELEMENT a (#PCDATA | a)>") != std::string::npos);
  CHECK(offset("<!FOO>") == 0);
  CHECK(offset("<!ELEMENT a (#PCDATA)>\n<!ATTLIST a k (x | y) \"z\">") != std::string::npos);
  CHECK_THROWS_AS(parse_dtd("<!ELEMENT a (b)>"), DanglingReferenceError);
  CHECK_THROWS_AS(parse_dtd("<!ELEMENT a (#PCDATA)>\n<!ATTLIST b k CDATA #IMPLIED>"), DanglingReferenceError);
}

TEST_CASE("matches_model: small cases") {
  Dtd dtd = parse_dtd(
      "<!ELEMENT r (a, (b | c)*, a?)>\n<!ELEMENT a (#PCDATA)>\n"
      "<!ELEMENT b (#PCDATA)>\n<!ELEMENT c (#PCDATA)>");
  const auto &m = dtd.find("r")->model;
  CHECK(matches_model(m, {"a"}));
  CHECK(matches_model(m, {"a", "b", "c", "b", "a"}));
  CHECK_FALSE(matches_model(m, {}));
  CHECK_FALSE(matches_model(m, {"a", "a", "a"}));
  CHECK_FALSE(matches_model(m, {"b"}));
}

TEST_CASE("validate: defaults, attributes and text") {
  Dtd dtd = parse_dtd(
      "<!ELEMENT r (d+)>\n<!ELEMENT d (#PCDATA)>\n"
      "<!ATTLIST d for_what (mould | dim) \"mould\" id CDATA #REQUIRED>");
  auto ok = validate(parse_xml("<r><d id=\"1\">5 mm</d></r>"), dtd);
  CHECK(ok.valid());
  CHECK(emit_xml(ok.with_defaults, {EmitMode::kCanonical, false}) ==
        "<r><d id=\"1\" for_what=\"mould\">5 mm</d></r>");

  auto bad = validate(parse_xml("<r>x<d for_what=\"box\" k=\"v\">5</d><e/></r>"), dtd);
  std::vector<std::string> messages;
  for (const auto &v : bad.violations) messages.push_back(v.path + ": " + v.message);
  CHECK(messages == std::vector<std::string>{
                        "/r[1]: text in element-only content",
                        "/r[1]: children (d, e) do not match the content model",
                        "/r[1]/d[1]: value 'box' is not allowed for attribute 'for_what'",
                        "/r[1]/d[1]: undeclared attribute 'k'",
                        "/r[1]/d[1]: missing required attribute 'id'",
                        "/r[1]/e[1]: undeclared element 'e'",
                    });
  CHECK(bad.violations[1].model == "<!ELEMENT r (d+)>");
}

TEST_CASE("property: validation agrees with the language-enumeration oracle") {
  std::mt19937 rng(707);
  size_t valid = 0;
  for (int round = 0; round < 400; ++round) {
    auto models = testing::random_models(rng);
    Dtd dtd = parse_dtd(testing::dtd_text(models));
    std::string root = testing::dtd_names()[testing::uniform(rng, 0, 2)];
    auto tree = testing::random_tree(rng, models, root, 1);
    auto expected = testing::invalid_paths(models, tree, "/" + root + "[1]");
    auto report = validate(testing::tree_document(tree), dtd);
    INFO(testing::dtd_text(models));
    CHECK(violation_paths(report) == expected);
    if (expected.empty()) ++valid;
  }
  CHECK(valid > 40);
}

TEST_CASE("property: models print back to the same model") {
  std::mt19937 rng(708);
  for (int round = 0; round < 300; ++round) {
    auto models = testing::random_models(rng);
    Dtd dtd = parse_dtd(testing::dtd_text(models));
    std::string reprinted;
    for (const auto &decl : dtd.elements())
      reprinted += "<!ELEMENT " + decl.name + " " + decl.model.to_string() + ">\n";
    Dtd again = parse_dtd(reprinted);
    for (const auto &decl : dtd.elements()) CHECK(again.find(decl.name)->model == decl.model);
  }
}

TEST_CASE("extract_contact") {
  std::vector<std::string> texts = {
      "Willkommen bei der Musterguss GmbH in Sachsen.",
      "Musterguss GmbH, Industriestraße 12, D-09111 Chemnitz",
      "Tel.: 0371 / 123456, Telefax: 0371 / 123457",
      "E-Mail: info@musterguss.de, www.musterguss.de.",
  };
  ContactInfo info = extract_contact(texts);
  CHECK(info.company_name == "Musterguss GmbH");
  CHECK(info.street == "Industriestraße 12");
  CHECK(info.zip == "09111");
  CHECK(info.city == "Chemnitz");
  CHECK(info.tel == "0371 / 123456");
  CHECK(info.fax == "0371 / 123457");
  CHECK(info.email == "info@musterguss.de");
  CHECK(info.http == "www.musterguss.de");
  CHECK(extract_contact({}) == ContactInfo{});
}

TEST_CASE("quality_statements: keywords start a word") {
  std::vector<std::string> texts = {"Zertifikate nach DIN EN 1561", "KONDINGO", "ISO 9001", "ohne Nachweis"};
  CHECK(quality_statements(texts, ProfileOptions{}.certificate_keywords) ==
        std::vector<std::string>{"Zertifikate nach DIN EN 1561", "ISO 9001"});
  CHECK(quality_statements(texts, {"Nachweis"}) == std::vector<std::string>{"ohne Nachweis"});
  CHECK(quality_statements(texts, {}).empty());
}

TEST_CASE("validate: the contact model") {
  auto contact = [](const char *xml) {
    return validate(parse_xml(xml), profile_dtd());
  };
  CHECK(contact("<contact><tel>1</tel><http>h</http></contact>").valid());
  auto missing = contact("<contact><tel>1</tel><fax>2</fax></contact>");
  REQUIRE(missing.violations.size() == 1);
  CHECK(missing.violations[0].path == "/contact[1]");
  CHECK(missing.violations[0].model == "<!ELEMENT contact (tel, fax*, email*, http)>");
}

MeasurementPhrase measure(const std::string &text) {
  auto tokens = tag_text(text, shipped());
  auto tree = *best_parse(parse(tokens, shipped().grammar));
  return {tree.label, text, interpret(tree, tokens, shipped().siss)};
}

ProfileEvidence sample_evidence() {
  ProfileEvidence e;
  e.host = "www.musterguss.de";
  e.texts = {"Musterguss GmbH, Industriestraße 12, 09111 Chemnitz",
             "Tel. 0371 123456", "Zertifiziert nach DIN EN ISO 9001."};
  auto tokens = tag_text("Wir liefern Grauguss und Sphaeroguss fuer das Eisenbahnwesen.", shipped());
  e.concepts = match_case_frames(tokens, shipped()).concepts;
  e.measurements = {measure("1000 x 800 x 350 / 350 mm"), measure("500 x 600 x 150"),
                    measure("800 kg Stueckgewicht")};
  ProductFact fact;
  fact.product = "Garagen";
  fact.type_id = "S";
  e.facts = {fact};
  return e;
}

TEST_CASE("build_profile: a complete profile validates") {
  auto profile = build_profile(sample_evidence(), shipped());
  auto report = validate(profile, profile_dtd());
  for (const auto &v : report.violations) INFO(v.path << " " << v.message);
  CHECK(report.valid());
  std::string xml = render_profile(profile);
  CHECK(xml.starts_with("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<!DOCTYPE profile SYSTEM \"profile.dtd\">\n<profile>"));
  CHECK(xml.find("<material>Grauguss</material>") != std::string::npos);
  CHECK(xml.find("<dimension for_what=\"mould\">1000 x 800 x 350 / 350 mm</dimension>") != std::string::npos);
  CHECK(xml.find("<dimension for_what=\"dim\">500 x 600 x 150</dimension>") != std::string::npos);
  CHECK(xml.find("<weight>800 kg</weight>") != std::string::npos);
  CHECK(xml.find("<product>Garagen S</product>") != std::string::npos);
  CHECK(xml.find("<i-sector>Eisenbahnwesen</i-sector>") != std::string::npos);
  CHECK(xml.find("<quality>Zertifiziert nach DIN EN ISO 9001.</quality>") != std::string::npos);
  CHECK(xml.find("<http>http://www.musterguss.de/</http>") != std::string::npos);
}

TEST_CASE("build_profile: empty evidence yields a minimal invalid profile") {
  auto profile = build_profile({}, shipped());
  auto report = validate(profile, profile_dtd());
  CHECK(violation_paths(report) ==
        std::set<std::string>{"/profile[1]/foundry[1]/name[1]", "/profile[1]/foundry[1]/name[1]/contact[1]",
                              "/profile[1]/foundry[1]/specifics[1]"});
  std::string report_text = format_report("x.xml", report);
  CHECK(report_text.starts_with("x.xml\t/profile[1]/foundry[1]/name[1]\t<!ELEMENT name (f_name, contact, address)>\t"));
  CHECK(std::count(report_text.begin(), report_text.end(), '\n') == 3);
}

TEST_CASE("property: profiles do not depend on evidence order") {
  std::mt19937 rng(709);
  ProfileEvidence base = sample_evidence();
  std::string expected = render_profile(build_profile(base, shipped()));
  for (int round = 0; round < 50; ++round) {
    ProfileEvidence e = base;
    std::shuffle(e.concepts.begin(), e.concepts.end(), rng);
    std::shuffle(e.measurements.begin(), e.measurements.end(), rng);
    e.measurements.push_back(e.measurements.front());
    CHECK(render_profile(build_profile(e, shipped())) == expected);
  }
}

}  // namespace
}  // namespace semdoc
