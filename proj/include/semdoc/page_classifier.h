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

#ifndef SEMDOC_PAGE_CLASSIFIER_H_
#define SEMDOC_PAGE_CLASSIFIER_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "semdoc/html.h"
#include "semdoc/number.h"

namespace semdoc {

struct PageFeatures {
  size_t token_count = 0;
  size_t internal_link_count = 0;
  size_t external_link_count = 0;
  size_t picture_count = 0;  // diagnostics only
  // Share of blocks that are running text (paragraphs, headings, list
  // headings). Not used by the default decision.
  double text_segment_ratio = 0.0;

  size_t link_count() const { return internal_link_count + external_link_count; }
};

enum class PageClass { kInformation, kLead, kOverview };

std::string_view page_class_name(PageClass page_class);

struct ClassifierConfig {
  Rational link_density_threshold{1, 10};    // links per token
  Rational external_majority_threshold{1, 2};
  size_t minimum_token_floor = 30;
};

PageFeatures compute_features(const std::vector<Block> &blocks,
                              const std::vector<LinkRecord> &links,
                              size_t picture_count);

// Pages with few links per token, or enough text and no links at all, are
// information pages. Link-heavy pages are overview pages when external
// links are the majority and lead pages otherwise.
PageClass classify_page(const PageFeatures &features,
                        const ClassifierConfig &config = {});

}  // namespace semdoc

#endif  // SEMDOC_PAGE_CLASSIFIER_H_
