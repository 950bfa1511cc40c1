#include "sgd/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "sgd/error.hpp"

namespace sgd {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::kSyntax, what + ": " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::kInvalidInput, what + " lacks \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(Errc::kInvalidInput, what + ": \"" + key + "\" has the wrong type");
  }
}

Permutation permutation_from_json(const json& j, std::uint32_t degree) {
  if (j.is_string()) return parse_cycles(j.get<std::string>(), degree);
  if (!j.is_array()) throw Error(Errc::kInvalidInput, "a generator must be a cycle string or a list");
  std::vector<Cycle> cycles;
  if (!j.empty() && j.front().is_number()) {
    cycles.push_back(j.get<Cycle>());
  } else {
    for (const auto& c : j) cycles.push_back(c.get<Cycle>());
  }
  return Permutation::from_cycles(degree, cycles);
}

Word word_from_json(const json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>());
  Word w;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw Error(Errc::kInvalidInput, "letters are [generator, sign] pairs");
    w.letters.push_back({pair[0].get<std::uint32_t>(), static_cast<std::int8_t>(pair[1].get<int>())});
  }
  return w;
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.generator_count = field<std::uint32_t>(j, "generators", "presentation");
  for (const auto& r : field<json>(j, "relators", "presentation")) p.relators.push_back(word_from_json(r));
  p.validate();
  return p;
}

LoadedGroup group_from_json(const json& j, const std::string& fallback_name) {
  const auto kind = field<std::string>(j, "kind", "group");
  const std::string name = j.contains("name") ? j["name"].get<std::string>() : fallback_name;
  if (kind == "perm") {
    const auto degree = field<std::uint32_t>(j, "degree", "group");
    std::vector<Permutation> gens;
    for (const auto& g : field<json>(j, "generators", "group")) gens.push_back(permutation_from_json(g, degree));
    PermGroup perm(degree, std::move(gens));
    GroupTable table = perm.table();
    return {name, std::move(perm), std::move(table)};
  }
  if (kind == "table") {
    auto rows = field<std::vector<std::vector<Elem>>>(j, "table", "group");
    if (j.contains("order") && j["order"].get<std::size_t>() != rows.size())
      throw Error(Errc::kInvalidGroup, "table size disagrees with \"order\"");
    return {name, std::nullopt, GroupTable(rows)};
  }
  throw Error(Errc::kInvalidInput, "unknown group kind \"" + kind + "\"");
}

json construction_to_json(const Construction& c) {
  json j;
  j["kind"] = construction_kind_name(c.kind);
  switch (c.kind) {
    case ConstructionKind::kQuaternion: break;
    case ConstructionKind::kDirectProduct:
      j["factors"] = json::array();
      for (const auto& f : c.factors) j["factors"].push_back(construction_to_json(f));
      break;
    case ConstructionKind::kFromFile: j["path"] = c.path; break;
    default: j["n"] = c.n; break;
  }
  return j;
}

Construction construction_from_json(const json& j) {
  const auto name = field<std::string>(j, "kind", "construction");
  const auto kind = parse_construction_kind(name);
  if (!kind) throw Error(Errc::kInvalidInput, "unknown construction \"" + name + "\"");
  Construction c;
  c.kind = *kind;
  if (j.contains("n")) c.n = j["n"].get<std::uint32_t>();
  if (j.contains("path")) c.path = j["path"].get<std::string>();
  if (j.contains("factors"))
    for (const auto& f : j["factors"]) c.factors.push_back(construction_from_json(f));
  return c;
}

}  // namespace

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::kIo, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(Errc::kIo, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(Errc::kIo, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

Permutation parse_cycles(std::string_view text, std::uint32_t degree) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto bad = [&](const std::string& msg) -> Error {
    return Error(Errc::kSyntax, "cycle notation \"" + std::string(text) + "\": " + msg);
  };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw bad("expected '('");
    ++i;
    Cycle c;
    while (true) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i >= text.size()) throw bad("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw bad("expected a point");
      Point p = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') p = p * 10 + static_cast<Point>(text[i++] - '0');
      c.push_back(p);
    }
    if (!c.empty()) cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(degree, cycles);
}

LoadedGroup parse_group_json(std::string_view text, const std::string& fallback_name) {
  return group_from_json(parse_json(text, "group"), fallback_name);
}

LoadedGroup load_group_file(const fs::path& path) {
  return parse_group_json(read_text_file(path), path.stem().string());
}

std::string group_to_json(const PermGroup& g, const std::string& name, const std::string& provenance) {
  json j = json::object();
  if (!name.empty()) j["name"] = name;
  if (!provenance.empty()) j["provenance"] = provenance;
  j["kind"] = "perm";
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["generators"] = json::array();
  for (const auto& p : g.generators()) j["generators"].push_back(p.to_string());
  return j.dump(2) + "\n";
}

std::string table_to_json(const GroupTable& g, const std::string& name, const std::string& provenance) {
  json j = json::object();
  if (!name.empty()) j["name"] = name;
  if (!provenance.empty()) j["provenance"] = provenance;
  j["kind"] = "table";
  j["order"] = g.order();
  j["table"] = g.rows();
  return j.dump() + "\n";
}

Presentation parse_presentation_json(std::string_view text) {
  return presentation_from_json(parse_json(text, "presentation"));
}

std::string presentation_to_json(const Presentation& p) {
  json j;
  j["generators"] = p.generator_count;
  j["relators"] = json::array();
  for (const auto& r : p.relators) j["relators"].push_back(r.to_string());
  return j.dump(2) + "\n";
}

LoadedJob load_job_file(const fs::path& path) {
  const json j = parse_json(read_text_file(path), "job " + path.string());
  const fs::path base = path.parent_path();
  auto resolve = [&](const json& item, const char* what) {
    if (!item.is_string()) return item;
    return parse_json(read_text_file(base / item.get<std::string>()), what);
  };

  LoadedJob out;
  out.name = j.contains("name") ? j["name"].get<std::string>() : path.stem().string();
  out.job.presentation = presentation_from_json(resolve(field<json>(j, "presentation", "job"), "presentation"));
  LoadedGroup group = group_from_json(resolve(field<json>(j, "group", "job"), "group"), out.name);
  for (const auto& a : field<json>(j, "assignment", "job")) {
    if (a.is_number_integer()) {
      out.job.assignment.push_back(a.get<Elem>());
      continue;
    }
    if (!group.perm) throw Error(Errc::kInvalidInput, "table groups take element indices as assignment");
    const Permutation p = permutation_from_json(a, group.perm->degree());
    const auto idx = group.perm->index_of(p);
    if (!idx) throw Error(Errc::kInvalidInput, "assignment " + p.to_string() + " is not in the group");
    out.job.assignment.push_back(*idx);
  }
  out.job.v = field<std::uint32_t>(j, "v", "job");
  const auto variant_text = j.contains("variant") ? j["variant"].get<std::string>() : std::string("simple");
  const auto variant = parse_variant(variant_text);
  if (!variant) throw Error(Errc::kInvalidInput, "unknown variant \"" + variant_text + "\"");
  out.job.variant = *variant;
  out.job.enforce_guard = j.value("enforce_guard", true);
  out.job.target = std::make_shared<const GroupTable>(std::move(group.table));
  out.perm = std::move(group.perm);
  return out;
}

Formula load_sentence_file(const fs::path& path) { return parse_formula(read_text_file(path)); }

std::string sentence_file_text(const Formula& f, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "; " + c + "\n";
  return out + render(f) + "\n";
}

std::vector<CatalogEntrySpec> parse_catalog_spec(std::string_view text) {
  const json j = parse_json(text, "catalog spec");
  std::vector<CatalogEntrySpec> spec;
  for (const auto& e : field<json>(j, "entries", "catalog spec")) {
    CatalogEntrySpec s{field<std::string>(e, "name", "catalog entry"),
                       construction_from_json(field<json>(e, "construction", "catalog entry")), std::nullopt};
    if (e.contains("order")) s.declared_order = e["order"].get<std::size_t>();
    spec.push_back(std::move(s));
  }
  return spec;
}

std::string catalog_spec_to_json(const std::vector<CatalogEntrySpec>& spec) {
  json j;
  j["entries"] = json::array();
  for (const auto& e : spec) {
    json entry{{"name", e.name}, {"construction", construction_to_json(e.construction)}};
    if (e.declared_order) entry["order"] = *e.declared_order;
    j["entries"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

std::vector<CatalogEntry> load_catalog_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(Errc::kIo, dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json" && e.path().filename() != "index.json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (const auto& f : files) {
    LoadedGroup g = load_group_file(f);
    CatalogEntry e;
    e.name = g.name;
    e.construction = Construction::from_file(f.string());
    e.provenance = describe(e.construction);
    e.perm = std::move(g.perm);
    e.table = std::make_shared<const GroupTable>(std::move(g.table));
    out.push_back(std::move(e));
  }
  return out;
}

void export_catalog(const std::vector<CatalogEntry>& entries, const fs::path& dir) {
  fs::create_directories(dir);
  json index = json::array();
  for (const auto& e : entries) {
    const std::string text = e.perm ? group_to_json(*e.perm, e.name, e.provenance)
                                    : table_to_json(*e.table, e.name, e.provenance);
    write_file_atomic(dir / (e.name + ".json"), text);
    index.push_back({{"name", e.name}, {"order", e.order()}, {"file", e.name + ".json"}});
  }
  write_file_atomic(dir / "index.json", index.dump(2) + "\n");
}

}  // namespace sgd
