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

// End-to-end batch processing of a manifest of fetched pages.

#ifndef SEMDOC_PIPELINE_H_
#define SEMDOC_PIPELINE_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "semdoc/doc_model.h"
#include "semdoc/html.h"
#include "semdoc/page_classifier.h"
#include "semdoc/profile.h"
#include "semdoc/resources.h"

namespace semdoc {

struct PipelineConfig {
  std::filesystem::path manifest;
  std::filesystem::path resources;
  std::filesystem::path out;
  ClassifierConfig classifier;
  ProfileOptions profile_options;
  bool classify = true;
  bool enrich = true;
  bool profile = true;
  EmitMode emit = EmitMode::kCanonical;
  size_t jobs = 0;  // 0: one per hardware thread
};

// "classify,enrich,profile" in any order and subset. Throws ConfigError.
void set_stages(PipelineConfig &config, std::string_view list);

// Applies a TOML-like file: [classifier] with link_density_threshold,
// external_majority_threshold and minimum_token_floor, and [pipeline]
// with stages, emit and jobs, and [profile] with certificate_keywords (a
// comma list). Values may be quoted. Throws ConfigError.
void apply_config_text(PipelineConfig &config, std::string_view text);

// Everything one information page contributes.
struct PageAnalysis {
  AnnotatedDocument enriched;
  std::vector<ConceptInstance> concepts;
  std::vector<MeasurementPhrase> measurements;
  std::vector<ProductFact> facts;
  std::vector<FactTriple> table_facts;
  std::vector<std::string> diagnostics;
};

// The page as PAGE > block elements, without analysis. Block elements are
// the block kinds in upper case; table cells carry TABLE, ROW and COLUMN.
AnnotatedDocument page_document(const std::vector<Block> &blocks, Attributes page_attributes);

// Tags, parses, interprets and matches every block, and annotates the
// page document. Within a block the order is relations, concepts, parse
// trees, then POS leaves, so larger structures are in place before the
// leaves nest into them.
PageAnalysis analyze_page(const std::vector<Block> &blocks, Attributes page_attributes,
                          const ResourceBundle &bundle);

// Writes pages/, profiles/ and summary.txt under config.out. Returns the
// exit status: 0, 2 for configuration errors, 3 for resource errors.
// Page failures are logged and skipped.
int run_pipeline(const PipelineConfig &config, std::ostream &log);

}  // namespace semdoc

#endif  // SEMDOC_PIPELINE_H_
