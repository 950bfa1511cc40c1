#pragma once

// File formats: group, presentation, job and catalog JSON; sentence files.
//
// Group:        {"kind":"perm","degree":n,"generators":[g, ...]}
//               {"kind":"table","order":n,"table":[[...], ...]}
//   A generator is a cycle string "(0 1)(2 3)", a list of cycles
//   [[0,1],[2,3]], or a flat list [0,1,2] read as a single cycle.
// Presentation: {"generators":k,"relators":["x0^2", "(x0 x1)^5", ...]}
//   Relators may also be lists of [generator, sign] pairs.
// Job:          {"presentation": <presentation or path>, "group": <group or path>,
//                "assignment":[g, ...], "v":n, "variant":"simple"|"at_least_3"|"monolithic",
//                "enforce_guard":true}
//   Paths are relative to the job file. Assignment items are generators in
//   the formats above, or element indices for table groups.
// Catalog spec: {"entries":[{"name":..., "order":n (optional), "construction":{"kind":..., "n":..., "factors":[...], "path":...}}]}

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgd/catalog.hpp"
#include "sgd/formula.hpp"
#include "sgd/group.hpp"
#include "sgd/synth.hpp"
#include "sgd/word.hpp"

namespace sgd {

std::string read_text_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// "(0 1)(2 3)" on `degree` points; "()" is the identity.
Permutation parse_cycles(std::string_view text, std::uint32_t degree);

struct LoadedGroup {
  std::string name;
  std::optional<PermGroup> perm;
  GroupTable table;
};

LoadedGroup parse_group_json(std::string_view text, const std::string& fallback_name = {});
LoadedGroup load_group_file(const std::filesystem::path& path);
std::string group_to_json(const PermGroup& g, const std::string& name = {}, const std::string& provenance = {});
std::string table_to_json(const GroupTable& g, const std::string& name = {}, const std::string& provenance = {});

Presentation parse_presentation_json(std::string_view text);
std::string presentation_to_json(const Presentation& p);

struct LoadedJob {
  std::string name;
  DescriptionJob job;
  std::optional<PermGroup> perm;
};

LoadedJob load_job_file(const std::filesystem::path& path);

/// Sentence files: ';' comment lines followed by one S-expression.
Formula load_sentence_file(const std::filesystem::path& path);
std::string sentence_file_text(const Formula& f, const std::vector<std::string>& comments = {});

std::vector<CatalogEntrySpec> parse_catalog_spec(std::string_view text);
std::string catalog_spec_to_json(const std::vector<CatalogEntrySpec>& spec);

/// Every *.json group file in `dir`, in file-name order.
std::vector<CatalogEntry> load_catalog_dir(const std::filesystem::path& dir);
/// One group file per entry plus index.json; byte-identical for equal input.
void export_catalog(const std::vector<CatalogEntry>& entries, const std::filesystem::path& dir);

}  // namespace sgd
