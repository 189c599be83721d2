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

#include "semdoc/profile.h"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

#include "semdoc/number.h"

namespace semdoc {
namespace {

std::optional<std::string> first_match(const std::vector<std::string> &texts, const std::regex &re, int group = 1) {
  std::smatch m;
  for (const auto &text : texts)
    if (std::regex_search(text, m, re)) return m[group].str();
  return std::nullopt;
}

std::string trim_trailing_punctuation(std::string s) {
  while (!s.empty() && std::string_view(".,;:)").find(s.back()) != std::string_view::npos) s.pop_back();
  return s;
}

// The base form from the semantic lexicon, or the surface.
std::string base_word(const ResourceBundle &bundle, const ConceptInstance &instance) {
  const SemLexEntry *entry = lookup_concept(bundle, instance.word);
  return entry ? entry->word : instance.word;
}

std::string unit_suffix(const std::optional<std::string> &unit) {
  return unit ? " " + *unit : std::string();
}

}  // namespace

ContactInfo extract_contact(const std::vector<std::string> &texts) {
  static const std::regex company(
      R"(((?:[A-Z][^\s,;:()]*\s){1,3}(?:GmbH & Co\. KG|GmbH|AG|KG)))");
  static const std::regex tel(R"((?:^|[^A-Za-z])(?:Tel(?:efon)?|Fon)\.?\s*:?\s*(\+?[0-9][0-9 /()\-]{4,}[0-9]))");
  static const std::regex fax(R"((?:Tele)?[Ff]ax\.?\s*:?\s*(\+?[0-9][0-9 /()\-]{4,}[0-9]))");
  static const std::regex email(R"(([A-Za-z0-9._%+\-]+@[A-Za-z0-9.\-]+\.[A-Za-z]{2,}))");
  static const std::regex http(R"(((?:https?://|www\.)[^\s<>"]+))");
  static const std::regex street(
      R"(([A-Z][^\s,;0-9]*(?:str\.|straße|strasse|weg|platz|allee|ring|gasse)\s+[0-9]+[a-z]?|)"
      R"([A-Z][^\s,;0-9]*[ \-](?:Straße|Strasse|Str\.|Weg|Platz|Allee|Ring|Gasse)\s+[0-9]+[a-z]?))");
  static const std::regex zip_city(R"((?:^|[\s,])(?:D-)?([0-9]{5})\s+([A-Z][^\s,;0-9]*(?:[ \-][A-Z][^\s,;0-9]*)?))");

  ContactInfo info;
  info.company_name = first_match(texts, company);
  info.tel = first_match(texts, tel);
  info.fax = first_match(texts, fax);
  info.email = first_match(texts, email);
  if (auto url = first_match(texts, http)) info.http = trim_trailing_punctuation(*url);
  info.street = first_match(texts, street);
  info.zip = first_match(texts, zip_city, 1);
  info.city = first_match(texts, zip_city, 2);
  if (info.city) info.city = trim_trailing_punctuation(*info.city);
  return info;
}

std::vector<std::string> quality_statements(const std::vector<std::string> &texts,
                                            const std::vector<std::string> &keywords) {
  auto is_letter = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || (c & 0x80); };
  std::vector<std::string> out;
  for (const auto &text : texts) {
    bool found = false;
    for (const auto &keyword : keywords) {
      for (size_t at = text.find(keyword); !found && at != std::string::npos; at = text.find(keyword, at + 1))
        found = !keyword.empty() && (at == 0 || !is_letter(text[at - 1]));
    }
    if (found) out.push_back(text);
  }
  return out;
}

AnnotatedDocument build_profile(const ProfileEvidence &evidence, const ResourceBundle &bundle,
                                const ProfileOptions &options) {
  ContactInfo contact = extract_contact(evidence.texts);
  if (!contact.http && !evidence.host.empty()) contact.http = "http://" + evidence.host + "/";

  std::set<std::string> materials, sectors, products, weights, qualities;
  std::set<std::pair<std::string, std::string>> dimensions;  // (text, for_what)
  for (const auto &instance : evidence.concepts) {
    if (bundle.is_a(instance.concept_type, "process")) materials.insert(base_word(bundle, instance));
    if (bundle.is_a(instance.concept_type, "sector")) sectors.insert(base_word(bundle, instance));
    if (bundle.is_a(instance.concept_type, "product")) products.insert(base_word(bundle, instance));
  }
  for (const auto &fact : evidence.facts) {
    if (fact.relation == FactRelation::kAvailableAs && fact.type_id)
      products.insert(fact.product + " " + *fact.type_id);
    else
      products.insert(fact.product);
  }
  for (const auto &phrase : evidence.measurements) {
    bool dimension = false;
    for (const auto &b : phrase.bindings) {
      if (b.sense == "weight") weights.insert(format_german_number(b.value) + unit_suffix(b.unit));
      if (b.sense.starts_with("dimension") || b.sense.ends_with("dimension")) dimension = true;
    }
    if (dimension) dimensions.emplace(phrase.text, phrase.origin_label == "3D-MS-ENTRY-C" ? "mould" : "dim");
  }
  for (const auto &text : quality_statements(evidence.texts, options.certificate_keywords)) qualities.insert(text);

  DocumentBuilder b;
  b.open("profile");
  b.open("foundry");
  b.open("name");
  if (contact.company_name) b.element("f_name", *contact.company_name);
  b.open("contact");
  if (contact.tel) b.element("tel", *contact.tel);
  if (contact.fax) b.element("fax", *contact.fax);
  if (contact.email) b.element("email", *contact.email);
  if (contact.http) b.element("http", *contact.http);
  b.close();
  if (contact.street || contact.city || contact.zip) {
    b.open("address");
    if (contact.street) b.element("street", *contact.street);
    if (contact.city) b.element("city", *contact.city);
    if (contact.zip) b.element("zip", *contact.zip);
    b.close();
  }
  b.close();  // name

  b.open("specifics");
  auto measurements = [&] {
    for (const auto &w : weights) b.element("weight", w);
    for (const auto &[text, for_what] : dimensions) b.element("dimension", text, {{"for_what", for_what}});
  };
  if (materials.empty() && !(weights.empty() && dimensions.empty())) {
    b.open("scope");
    measurements();
    b.close();
  }
  bool first = true;
  for (const auto &material : materials) {
    b.open("scope");
    b.element("material", material);
    if (first) measurements();
    first = false;
    b.close();
  }
  b.open("production");
  for (const auto &p : products) b.element("product", p);
  for (const auto &s : sectors) b.element("i-sector", s);
  b.close();
  for (const auto &q : qualities) b.element("quality", q);
  b.close();  // specifics

  b.close();  // foundry
  b.close();  // profile
  return std::move(b).build();
}

std::string render_profile(const AnnotatedDocument &profile) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<!DOCTYPE profile SYSTEM \"profile.dtd\">\n";
  out += emit_xml(profile, {EmitMode::kPretty, false});
  if (!out.ends_with('\n')) out += '\n';
  return out;
}

std::string format_report(const std::string &file, const ValidationReport &report) {
  std::string out;
  for (const auto &v : report.violations) out += file + "\t" + v.path + "\t" + v.model + "\t" + v.message + "\n";
  return out;
}

}  // namespace semdoc
