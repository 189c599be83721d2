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

// enrich: runs the pipeline over a manifest of fetched pages.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "semdoc/errors.h"
#include "semdoc/number.h"
#include "semdoc/pipeline.h"

namespace {

semdoc::Rational ratio_flag(const std::string &name, const std::string &value) {
  auto r = semdoc::parse_ratio(value);
  if (!r) throw semdoc::ConfigError(name + ": not a ratio: " + value);
  return *r;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Annotate fetched HTML pages and build company profiles."};
  std::string manifest, resources = semdoc::default_resource_directory().string(), out;
  std::string config_file, stages, emit, link_density, external_majority;
  size_t token_floor = 0, jobs = 0;

  app.add_option("--manifest", manifest, "path<TAB>url per line")->required();
  app.add_option("--resources", resources, "resource directory");
  app.add_option("--out", out, "output directory")->required();
  app.add_option("--config", config_file, "config file with [classifier] and [pipeline] sections");
  auto *stages_opt = app.add_option("--stages", stages, "comma list of classify, enrich, profile");
  auto *emit_opt = app.add_option("--emit", emit, "canonical or pretty")->check(CLI::IsMember({"canonical", "pretty"}));
  auto *density_opt = app.add_option("--link-density-threshold", link_density, "links per token, e.g. 1/10");
  auto *external_opt = app.add_option("--external-majority-threshold", external_majority, "external share of links");
  auto *floor_opt = app.add_option("--min-token-floor", token_floor, "tokens for a link-free information page");
  auto *jobs_opt = app.add_option("--jobs", jobs, "worker threads (default: hardware threads)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  semdoc::PipelineConfig config;
  config.manifest = manifest;
  config.resources = resources;
  config.out = out;
  try {
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw semdoc::ConfigError("cannot read config file " + config_file);
      std::stringstream ss;
      ss << in.rdbuf();
      semdoc::apply_config_text(config, ss.str());
    }
    if (*stages_opt) semdoc::set_stages(config, stages);
    if (*emit_opt) config.emit = emit == "pretty" ? semdoc::EmitMode::kPretty : semdoc::EmitMode::kCanonical;
    if (*density_opt) config.classifier.link_density_threshold = ratio_flag("--link-density-threshold", link_density);
    if (*external_opt)
      config.classifier.external_majority_threshold = ratio_flag("--external-majority-threshold", external_majority);
    if (*floor_opt) config.classifier.minimum_token_floor = token_floor;
    if (*jobs_opt) config.jobs = jobs;
  } catch (const semdoc::ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return semdoc::run_pipeline(config, std::cerr);
}
