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

#include <random>

#include "doctest.h"

namespace semdoc {
namespace {

Block block(BlockKind kind, std::string text) {
  Block b;
  b.kind = kind;
  b.text = std::move(text);
  b.source_path = {"body"};
  return b;
}

PageFeatures features(size_t tokens, size_t internal, size_t external) {
  PageFeatures f;
  f.token_count = tokens;
  f.internal_link_count = internal;
  f.external_link_count = external;
  return f;
}

TEST_CASE("compute_features") {
  auto empty = compute_features({}, {}, 0);
  CHECK(empty.token_count == 0);
  CHECK(empty.link_count() == 0);
  CHECK(empty.text_segment_ratio == 0.0);

  std::string ten = "eins zwei drei vier fuenf sechs sieben acht neun zehn";
  std::vector<Block> blocks(3, block(BlockKind::kParagraph, ten));
  std::vector<LinkRecord> links(2, LinkRecord{"http://a.de/x", LinkScope::kInternal, "x"});
  auto f = compute_features(blocks, links, 4);
  CHECK(f.token_count == 30);
  CHECK(f.internal_link_count == 2);
  CHECK(f.external_link_count == 0);
  CHECK(f.picture_count == 4);

  auto mixed = compute_features({block(BlockKind::kParagraph, "a"), block(BlockKind::kParagraph, "b"),
                                 block(BlockKind::kListItem, "c d"), block(BlockKind::kListItem, "e")},
                                {}, 0);
  CHECK(mixed.text_segment_ratio == doctest::Approx(0.5));
  CHECK(mixed.token_count == 2);
}

TEST_CASE("classify_page: hand-evaluated decisions") {
  // 11 links over 200 tokens: density 0.055 < 0.1.
  CHECK(classify_page(features(200, 10, 1)) == PageClass::kInformation);
  // 11/50 = 0.22 >= 0.1, external share 1/11 <= 1/2.
  CHECK(classify_page(features(50, 10, 1)) == PageClass::kLead);
  // 10/40 = 0.25, external share 0.8.
  CHECK(classify_page(features(40, 2, 8)) == PageClass::kOverview);
  CHECK(classify_page(features(500, 0, 0)) == PageClass::kInformation);
  CHECK(classify_page(features(0, 0, 0)) == PageClass::kInformation);
  // Exactly at the thresholds: density 1/10 is not below, share 1/2 is not above.
  CHECK(classify_page(features(20, 1, 1)) == PageClass::kLead);
}

TEST_CASE("classify_page: configurable thresholds") {
  ClassifierConfig strict;
  strict.link_density_threshold = Rational(1, 100);
  CHECK(classify_page(features(200, 10, 1), strict) == PageClass::kLead);
  strict.external_majority_threshold = Rational(1, 20);
  CHECK(classify_page(features(200, 10, 1), strict) == PageClass::kOverview);
}

TEST_CASE("property: monotone in external links and invariant under scaling") {
  std::mt19937 rng(17);
  ClassifierConfig config;
  for (int i = 0; i < 2000; ++i) {
    auto f = features(rng() % 300, rng() % 40, rng() % 40);
    PageClass base = classify_page(f, config);
    auto more = f;
    more.external_link_count += 1 + rng() % 10;
    if (base == PageClass::kOverview) {
      CHECK(classify_page(more, config) != PageClass::kLead);
    }
    if (f.token_count >= config.minimum_token_floor) {
      size_t k = 1 + rng() % 7;
      auto scaled = features(f.token_count * k, f.internal_link_count * k,
                             f.external_link_count * k);
      CHECK(classify_page(scaled, config) == base);
    }
  }
}

}  // namespace
}  // namespace semdoc
