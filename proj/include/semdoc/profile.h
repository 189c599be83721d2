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

// Company profiles: evidence gathered from a company's pages mapped onto
// the profile DTD.

#ifndef SEMDOC_PROFILE_H_
#define SEMDOC_PROFILE_H_

#include <optional>
#include <string>
#include <vector>

#include "semdoc/case_frames.h"
#include "semdoc/doc_model.h"
#include "semdoc/dtd.h"
#include "semdoc/resources.h"
#include "semdoc/siss.h"

namespace semdoc {

struct ContactInfo {
  std::optional<std::string> company_name;
  std::optional<std::string> tel;
  std::optional<std::string> fax;
  std::optional<std::string> email;
  std::optional<std::string> http;
  std::optional<std::string> street;
  std::optional<std::string> city;
  std::optional<std::string> zip;

  bool operator==(const ContactInfo &) const = default;
};

// First match of each field over the texts, in order.
ContactInfo extract_contact(const std::vector<std::string> &texts);

// One interpreted measurement tree.
struct MeasurementPhrase {
  std::string origin_label;  // root label, e.g. 3D-MS-ENTRY-C
  std::string text;          // the phrase as written
  std::vector<SenseBinding> bindings;
};

struct ProfileEvidence {
  std::string host;
  std::vector<std::string> texts;  // block texts, in page and block order
  std::vector<ConceptInstance> concepts;
  std::vector<MeasurementPhrase> measurements;
  std::vector<ProductFact> facts;
};

struct ProfileOptions {
  // A text mentions a certificate when a word starts with one of these.
  std::vector<std::string> certificate_keywords = {"DIN", "ISO", "Zertifikat"};
};

std::vector<std::string> quality_statements(const std::vector<std::string> &texts,
                                            const std::vector<std::string> &keywords);

// Always emits profile/foundry/name and specifics; fields without evidence
// are left out even when the DTD requires them, so validation reports the
// gap. Repeated elements are deduplicated and sorted, which makes the
// output independent of the order of the evidence.
AnnotatedDocument build_profile(const ProfileEvidence &evidence, const ResourceBundle &bundle,
                                const ProfileOptions &options = {});

// XML declaration, DOCTYPE and the pretty-printed profile.
std::string render_profile(const AnnotatedDocument &profile);

// One line per violation: file, element path, model, message (tab
// separated).
std::string format_report(const std::string &file, const ValidationReport &report);

}  // namespace semdoc

#endif  // SEMDOC_PROFILE_H_
