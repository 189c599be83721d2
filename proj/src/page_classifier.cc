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

#include "semdoc/page_classifier.h"

#include <algorithm>

namespace semdoc {

namespace {

bool is_text_segment(BlockKind kind) {
  return kind == BlockKind::kParagraph || kind == BlockKind::kHeading ||
         kind == BlockKind::kListHeading;
}

size_t count_tokens(std::string_view text) {
  size_t n = 0;
  bool in_token = false;
  for (char c : text) {
    bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r';
    if (!space && !in_token) ++n;
    in_token = !space;
  }
  return n;
}

}  // namespace

std::string_view page_class_name(PageClass page_class) {
  switch (page_class) {
    case PageClass::kInformation: return "information";
    case PageClass::kLead: return "lead";
    case PageClass::kOverview: return "overview";
  }
  return "information";
}

PageFeatures compute_features(const std::vector<Block> &blocks,
                              const std::vector<LinkRecord> &links,
                              size_t picture_count) {
  PageFeatures features;
  size_t text_segments = 0;
  for (const auto &block : blocks) {
    if (!is_text_segment(block.kind)) continue;
    ++text_segments;
    features.token_count += count_tokens(block.text);
  }
  for (const auto &link : links) {
    if (link.scope == LinkScope::kInternal) {
      ++features.internal_link_count;
    } else {
      ++features.external_link_count;
    }
  }
  features.picture_count = picture_count;
  features.text_segment_ratio =
      blocks.empty() ? 0.0
                     : static_cast<double>(text_segments) /
                           static_cast<double>(blocks.size());
  return features;
}

PageClass classify_page(const PageFeatures &features,
                        const ClassifierConfig &config) {
  const auto links = static_cast<int64_t>(features.link_count());
  const auto tokens =
      static_cast<int64_t>(std::max<size_t>(features.token_count, 1));
  Rational density(links, tokens);
  if (density < config.link_density_threshold ||
      (features.token_count >= config.minimum_token_floor && links == 0)) {
    return PageClass::kInformation;
  }
  Rational external_share(static_cast<int64_t>(features.external_link_count),
                          std::max<int64_t>(links, 1));
  if (external_share > config.external_majority_threshold) {
    return PageClass::kOverview;
  }
  return PageClass::kLead;
}

}  // namespace semdoc
