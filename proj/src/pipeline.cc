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

#include "semdoc/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "semdoc/case_frames.h"
#include "semdoc/chart_parser.h"
#include "semdoc/dtd.h"
#include "semdoc/errors.h"
#include "semdoc/number.h"
#include "semdoc/pos_tagger.h"
#include "semdoc/siss.h"

namespace semdoc {
namespace {

namespace fs = std::filesystem;

size_t code_points(std::string_view text) {
  return std::count_if(text.begin(), text.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; });
}

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::optional<std::string> read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error("cannot write " + path.string());
}

Rational config_ratio(std::string_view key, std::string_view value) {
  auto r = parse_ratio(value);
  if (!r) throw ConfigError(std::string(key) + ": not a ratio: " + std::string(value));
  return *r;
}

size_t config_count(std::string_view key, std::string_view value) {
  if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ConfigError(std::string(key) + ": not a count: " + std::string(value));
  return std::stoul(std::string(value));
}

struct PageResult {
  std::string name;  // NNN-stem
  std::string host;
  std::optional<PageClass> page_class;
  PageFeatures features;
  bool skipped = false;
  std::vector<std::string> log;
  std::vector<std::string> texts;
  std::optional<PageAnalysis> analysis;
};

std::string page_name(size_t index, const std::string &path) {
  char prefix[16];
  std::snprintf(prefix, sizeof prefix, "%03zu-", index + 1);
  return prefix + fs::path(path).stem().string();
}

}  // namespace

void set_stages(PipelineConfig &config, std::string_view list) {
  config.classify = config.enrich = config.profile = false;
  std::stringstream ss{std::string(list)};
  std::string stage;
  while (std::getline(ss, stage, ',')) {
    stage = trim(stage);
    if (stage == "classify") config.classify = true;
    else if (stage == "enrich") config.enrich = true;
    else if (stage == "profile") config.profile = true;
    else throw ConfigError("unknown stage '" + stage + "'");
  }
}

void apply_config_text(PipelineConfig &config, std::string_view text) {
  std::stringstream in{std::string(text)};
  std::string line, section;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string where = "config line " + std::to_string(number) + ": ";
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "malformed section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section != "classifier" && section != "pipeline" && section != "profile") throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front())
      value = value.substr(1, value.size() - 2);
    try {
      if (section == "classifier" && key == "link_density_threshold") {
        config.classifier.link_density_threshold = config_ratio(key, value);
      } else if (section == "classifier" && key == "external_majority_threshold") {
        config.classifier.external_majority_threshold = config_ratio(key, value);
      } else if (section == "classifier" && key == "minimum_token_floor") {
        config.classifier.minimum_token_floor = config_count(key, value);
      } else if (section == "pipeline" && key == "stages") {
        set_stages(config, value);
      } else if (section == "pipeline" && key == "emit") {
        if (value == "canonical") config.emit = EmitMode::kCanonical;
        else if (value == "pretty") config.emit = EmitMode::kPretty;
        else throw ConfigError("emit: expected canonical or pretty");
      } else if (section == "profile" && key == "certificate_keywords") {
        config.profile_options.certificate_keywords.clear();
        std::stringstream list(value);
        for (std::string keyword; std::getline(list, keyword, ',');)
          if (!trim(keyword).empty()) config.profile_options.certificate_keywords.push_back(trim(keyword));
      } else if (section == "pipeline" && key == "jobs") {
        config.jobs = config_count(key, value);
      } else {
        throw ConfigError("unknown key '" + key + "'" + (section.empty() ? "" : " in [" + section + "]"));
      }
    } catch (const ConfigError &e) {
      throw ConfigError(where + e.what());
    }
  }
}

AnnotatedDocument page_document(const std::vector<Block> &blocks, Attributes page_attributes) {
  DocumentBuilder b;
  b.open("PAGE", std::move(page_attributes));
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) b.text("\n");
    Attributes attributes;
    if (blocks[i].table) {
      attributes = {{"TABLE", std::to_string(blocks[i].table->table)},
                    {"ROW", std::to_string(blocks[i].table->row)},
                    {"COLUMN", std::to_string(blocks[i].table->column)}};
    }
    b.element(upper(block_kind_name(blocks[i].kind)), blocks[i].text, std::move(attributes));
  }
  b.close();
  return std::move(b).build();
}

PageAnalysis analyze_page(const std::vector<Block> &blocks, Attributes page_attributes,
                          const ResourceBundle &bundle) {
  PageAnalysis result;
  AnnotatedDocument doc = page_document(blocks, std::move(page_attributes));
  auto attempt = [&](const std::string &what, auto &&step) {
    try {
      doc = step(doc);
    } catch (const OverlapError &e) {
      result.diagnostics.push_back(what + " not annotated: " + e.what());
    }
  };

  size_t offset = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) offset += 1;  // the newline between blocks
    const std::string &text = blocks[i].text;
    auto tokens = tag_text(text, bundle);
    AnnotatedDocument block_text(text);

    std::vector<ParseNode> trees = best_parses(parse(tokens, bundle.grammar));
    for (const auto &tree : trees) {
      try {
        auto bindings = interpret(tree, tokens, bundle.siss);
        Span span{tokens[tree.begin].span.begin, tokens[tree.end - 1].span.end};
        if (!bindings.empty())
          result.measurements.push_back({tree.label, std::string(block_text.slice(span)), std::move(bindings)});
      } catch (const NoAssignmentError &) {
        // A bare MS-ENTRY: nothing to interpret.
      } catch (const ShapeMismatchError &e) {
        result.diagnostics.push_back(std::string("interpretation failed: ") + e.what());
      }
    }

    CaseFrameResult frames = match_case_frames(tokens, bundle);
    for (const auto &d : frames.diagnostics) result.diagnostics.push_back(d);
    for (const auto &sentence : split_sentences(tokens)) {
      auto facts = match_phrasal_patterns(sentence, bundle.patterns);
      result.facts.insert(result.facts.end(), facts.begin(), facts.end());
    }

    for (const auto &instance : frames.concepts)
      attempt("concept '" + instance.word + "'", [&](const AnnotatedDocument &d) {
        return annotate_concepts(d, offset, {instance});
      });
    for (const auto &tree : trees)
      attempt("parse tree " + tree.label, [&](const AnnotatedDocument &d) {
        return emit_parse_xml(d, tree, tokens, offset);
      });
    attempt("tokens", [&](const AnnotatedDocument &d) { return annotate_tokens(d, offset, tokens); });

    result.concepts.insert(result.concepts.end(), frames.concepts.begin(), frames.concepts.end());
    offset += code_points(text);
  }

  // List items completed with their heading, e.g. "Folgende Typen sind
  // lieferbar: - ...", go through the phrasal patterns as sentences.
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].kind != BlockKind::kListHeading) continue;
    std::vector<Block> items;
    for (size_t j = i + 1; j < blocks.size() && blocks[j].kind == BlockKind::kListItem; ++j) items.push_back(blocks[j]);
    for (const auto &sentence : attach_list_items(blocks[i], items)) {
      auto facts = match_phrasal_patterns(tag_text(sentence, bundle), bundle.patterns);
      result.facts.insert(result.facts.end(), facts.begin(), facts.end());
    }
  }

  for (const auto &table : group_tables(blocks)) {
    try {
      auto triples = extract_table_facts(table);
      result.table_facts.insert(result.table_facts.end(), triples.begin(), triples.end());
    } catch (const RaggedTableError &e) {
      result.diagnostics.push_back(std::string("table skipped: ") + e.what());
    }
  }
  result.enriched = std::move(doc);
  return result;
}

int run_pipeline(const PipelineConfig &config, std::ostream &log) {
  std::vector<ManifestEntry> entries;
  try {
    if (!config.classify && !config.enrich && !config.profile) throw ConfigError("no stage enabled");
    if (!fs::is_regular_file(config.manifest)) throw ConfigError("manifest not found: " + config.manifest.string());
    if (!fs::is_directory(config.resources)) throw ConfigError("resource directory not found: " + config.resources.string());
    if (config.out.empty()) throw ConfigError("no output directory");
    auto text = read_file(config.manifest);
    if (!text) throw ConfigError("cannot read manifest " + config.manifest.string());
    entries = parse_manifest(*text, config.manifest.parent_path().string());
    fs::create_directories(config.out);
  } catch (const ConfigError &e) {
    log << "config error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error &e) {
    log << "config error: " << e.what() << "\n";
    return 2;
  }

  ResourceBundle bundle;
  std::optional<Dtd> dtd;
  std::string dtd_text;
  try {
    bundle = load_resources(config.resources);
    if (config.profile) {
      auto text = read_file(config.resources / "profile.dtd");
      if (!text) throw ResourceFormatError((config.resources / "profile.dtd").string(), 0, "cannot read file");
      dtd_text = *text;
      dtd = parse_dtd(dtd_text);
    }
  } catch (const Error &e) {
    log << "resource error: " << e.what() << "\n";
    return 3;
  }

  const fs::path pages_dir = config.out / "pages";
  const fs::path profiles_dir = config.out / "profiles";
  if (config.enrich) fs::create_directories(pages_dir);
  if (config.profile) fs::create_directories(profiles_dir);

  std::vector<PageResult> results(entries.size());
  auto process = [&](size_t index) {
    const ManifestEntry &entry = entries[index];
    PageResult &r = results[index];
    r.name = page_name(index, entry.path);
    try {
      auto url = parse_url(entry.url);
      if (!url) throw Error("bad url " + entry.url);
      r.host = url->host;
      auto html = read_file(entry.path);
      if (!html) throw Error("cannot read " + entry.path);
      auto blocks = normalize_misused_lists(clean_html(*html));
      auto links = extract_links(*html, entry.url);
      r.features = compute_features(blocks, links.links, count_pictures(*html));
      Attributes attributes = {{"URL", entry.url}};
      if (config.classify) {
        r.page_class = classify_page(r.features, config.classifier);
        attributes.emplace_back("CLASS", std::string(page_class_name(*r.page_class)));
      }
      for (const auto &block : blocks) r.texts.push_back(block.text);
      bool information = !config.classify || r.page_class == PageClass::kInformation;
      AnnotatedDocument enriched;
      if (information && (config.enrich || config.profile)) {
        r.analysis = analyze_page(blocks, attributes, bundle);
        for (const auto &d : r.analysis->diagnostics) r.log.push_back(d);
        enriched = r.analysis->enriched;
      } else {
        enriched = page_document(blocks, attributes);
      }
      if (config.enrich)
        write_file(pages_dir / (r.name + ".xml"), emit_xml(enriched, {config.emit, false}) + "\n");
    } catch (const std::exception &e) {
      r.skipped = true;
      r.log.push_back(std::string("skipped: ") + e.what());
    }
  };

  size_t workers = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, entries.size());
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i; (i = next++) < entries.size();) process(i);
    });
  for (auto &t : pool) t.join();

  for (const auto &r : results)
    for (const auto &line : r.log) log << r.name << ": " << line << "\n";

  size_t profile_count = 0;
  if (config.profile) {
    std::map<std::string, ProfileEvidence> companies;
    for (const auto &r : results) {
      if (r.skipped || !r.analysis) continue;
      ProfileEvidence &e = companies[r.host];
      e.host = r.host;
      e.concepts.insert(e.concepts.end(), r.analysis->concepts.begin(), r.analysis->concepts.end());
      e.measurements.insert(e.measurements.end(), r.analysis->measurements.begin(), r.analysis->measurements.end());
      e.facts.insert(e.facts.end(), r.analysis->facts.begin(), r.analysis->facts.end());
    }
    // Contact data usually sits on other pages of the same site.
    for (const auto &r : results) {
      auto it = companies.find(r.host);
      if (it != companies.end()) it->second.texts.insert(it->second.texts.end(), r.texts.begin(), r.texts.end());
    }
    if (!companies.empty()) write_file(profiles_dir / "profile.dtd", dtd_text);
    for (const auto &[host, evidence] : companies) {
      AnnotatedDocument profile = build_profile(evidence, bundle, config.profile_options);
      ValidationReport report = validate(profile, *dtd);
      std::string file = host + ".xml";
      write_file(profiles_dir / file, render_profile(report.with_defaults));
      fs::path report_path = profiles_dir / (host + ".report.txt");
      if (!report.valid()) write_file(report_path, format_report(file, report));
      else fs::remove(report_path);
      ++profile_count;
    }
  }

  std::map<std::string, size_t> classes;
  size_t skipped = 0;
  for (const auto &r : results) {
    if (r.skipped) ++skipped;
    else if (r.page_class) ++classes[std::string(page_class_name(*r.page_class))];
  }
  std::ostringstream summary;
  summary << "pages\t" << entries.size() << "\n";
  summary << "skipped\t" << skipped << "\n";
  for (auto c : {PageClass::kInformation, PageClass::kLead, PageClass::kOverview}) {
    std::string name(page_class_name(c));
    summary << name << "\t" << classes[name] << "\n";
  }
  summary << "profiles\t" << profile_count << "\n";
  if (!results.empty()) {
    summary << "\npage\tclass\ttokens\tlinks\tconcepts\tmeasurements\tfacts\ttable-facts\n";
    for (const auto &r : results) {
      summary << r.name << "\t";
      if (r.skipped) {
        summary << "skipped\n";
        continue;
      }
      summary << (r.page_class ? std::string(page_class_name(*r.page_class)) : "-") << "\t"
              << r.features.token_count << "\t" << r.features.link_count();
      if (r.analysis) {
        summary << "\t" << r.analysis->concepts.size() << "\t" << r.analysis->measurements.size() << "\t"
                << r.analysis->facts.size() << "\t" << r.analysis->table_facts.size();
      } else {
        summary << "\t-\t-\t-\t-";
      }
      summary << "\n";
    }
  }
  try {
    write_file(config.out / "summary.txt", summary.str());
  } catch (const Error &e) {
    log << "config error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace semdoc
