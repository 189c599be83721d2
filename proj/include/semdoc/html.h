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

// HTML page preprocessing: tag-soup cleaning into text blocks, repair of
// list layouts faked with <p>/<br>, link collection and table facts.

#ifndef SEMDOC_HTML_H_
#define SEMDOC_HTML_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semdoc {

enum class BlockKind {
  kParagraph,
  kHeading,
  kListHeading,
  kListItem,
  kTableCell,
  kCaption,
};

std::string_view block_kind_name(BlockKind kind);

struct TableCoords {
  size_t table = 0;  // running index of the table within the page
  size_t row = 0;
  size_t column = 0;
  bool operator==(const TableCoords &) const = default;
};

struct Block {
  BlockKind kind = BlockKind::kParagraph;
  std::string text;
  // Element names from the document root down to the block element.
  std::vector<std::string> source_path;
  std::optional<TableCoords> table;
  // Line segments separated by <br>, kept only when there are at least two.
  std::vector<std::string> segments;

  bool operator==(const Block &) const = default;
};

struct CleanOptions {
  // Tables without a header row whose share of cells containing a link is
  // at least this value are treated as navigation and dropped.
  double layout_table_link_share = 0.6;
};

std::vector<Block> clean_html(std::string_view html,
                              const CleanOptions &options = {});

// Number of <img> elements.
size_t count_pictures(std::string_view html);

// Collapses whitespace runs (including no-break space) to single spaces and
// trims both ends.
std::string normalize_whitespace(std::string_view text);

struct ListOptions {
  std::vector<std::string> bullet_markers = {"-", "*", "\xE2\x80\xA2"};
};

// Rewrites paragraphs that fake a list with <br>-separated, bullet-marked
// lines into a list heading followed by list items.
std::vector<Block> normalize_misused_lists(std::vector<Block> blocks,
                                           const ListOptions &options = {});

// One candidate sentence per item: heading text without a trailing colon,
// a space, and the item text.
std::vector<std::string> attach_list_items(const Block &heading,
                                           const std::vector<Block> &items);

enum class LinkScope { kInternal, kExternal };

struct LinkRecord {
  std::string target;
  LinkScope scope = LinkScope::kInternal;
  std::string anchor_text;
  bool operator==(const LinkRecord &) const = default;
};

struct LinkScan {
  std::vector<LinkRecord> links;
  size_t anchors = 0;       // every <a> element seen
  size_t dropped = 0;       // no href, empty or fragment-only
  size_t unresolved = 0;    // non-http schemes or unparsable targets
};

// Throws Error when base_url is not an absolute http(s) URL.
LinkScan extract_links(std::string_view html, std::string_view base_url);

// Minimal URL handling for link resolution.
struct Url {
  std::string scheme;
  std::string host;  // lowercased
  std::string port;  // empty when default for the scheme
  std::string path;
  std::string query;
  std::string to_string() const;
};

std::optional<Url> parse_url(std::string_view text);
std::optional<Url> resolve_url(const Url &base, std::string_view reference);

struct FactTriple {
  std::string entity;
  std::string feature;
  std::string value;
  bool operator==(const FactTriple &) const = default;
  auto operator<=>(const FactTriple &) const = default;
};

// Row 0 holds feature names and column 0 entity names. Cells with empty
// text produce no triple. Throws RaggedTableError on unequal row lengths.
std::vector<FactTriple> extract_table_facts(const std::vector<Block> &cells);

// Groups the table cells of a block sequence by table index.
std::vector<std::vector<Block>> group_tables(const std::vector<Block> &blocks);

struct ManifestEntry {
  std::string path;
  std::string url;
};

// One "path<TAB>url" entry per line; blank lines and '#' comments are
// ignored. Relative paths resolve against base_dir. Throws ConfigError.
std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::string &base_dir);

}  // namespace semdoc

#endif  // SEMDOC_HTML_H_
