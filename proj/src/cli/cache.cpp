#include "clasp/cli/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "clasp/error.hpp"
#include "clasp/version.hpp"

namespace clasp {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr std::string_view kPrefix = "cgtable-";

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string serialize_table(const CgTable& t) {
  ordered_json values = ordered_json::array();
  for (const auto& v : t.values) values.push_back(v.str());
  ordered_json j;
  j["a"] = t.summand.knot.a;
  j["b"] = t.summand.signed_b();
  j["p"] = t.p;
  j["library_version"] = kLibraryVersion;
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

CgTable parse_table(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    if (j.at("library_version").get<std::string>() != kLibraryVersion) {
      throw Error(ErrorKind::ParseError, "table written by another library version");
    }
    CgTable t{make_summand(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>()), j.at("p").get<int>(), {}};
    for (const auto& v : j.at("values")) t.values.push_back(Rat::parse(v.get<std::string>()));
    if (t.values.size() != static_cast<std::size_t>(t.p)) throw Error(ErrorKind::ParseError, "table length differs from p");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed table: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, std::string("malformed table: ") + e.what());
  }
}

TableCache::TableCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path TableCache::default_dir() {
  if (const char* d = std::getenv("CLASP_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "clasp";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "clasp";
  return ".clasp-cache";
}

fs::path TableCache::entry_path(const Summand& s, int p) const {
  std::ostringstream name;
  name << kPrefix << "v" << kLibraryVersion << "-a" << s.knot.a << "-b" << s.signed_b() << "-p" << p << ".json";
  return dir_ / name.str();
}

CgTable TableCache::get(const Summand& s, int p) const {
  const fs::path path = entry_path(s, p);
  if (const auto text = read_file(path)) {
    try {
      CgTable t = parse_table(*text);
      if (t.summand == s && t.p == p) return t;
    } catch (const Error&) {
      // unreadable entry: fall through and overwrite it
    }
  }
  CgTable t = cg_table(s, p);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (out) out << serialize_table(t);
    if (!out) return t;
  }
  fs::rename(tmp, path, ec);
  return t;
}

TableCache::Integrity TableCache::verify() const {
  Integrity result;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return result;
  const std::string current = std::string(kPrefix) + "v" + kLibraryVersion + "-";
  std::vector<fs::path> entries;
  for (const auto& e : fs::directory_iterator(dir_, ec)) {
    const std::string name = e.path().filename().string();
    if (name.rfind(current, 0) == 0 && e.path().extension() == ".json") entries.push_back(e.path());
  }
  std::sort(entries.begin(), entries.end());
  for (const auto& path : entries) {
    ++result.checked;
    const auto text = read_file(path);
    try {
      if (!text) throw Error(ErrorKind::IoError, "unreadable");
      const CgTable stored = parse_table(*text);
      const CgTable fresh = cg_table(stored.summand, stored.p);
      if (path != entry_path(stored.summand, stored.p) || serialize_table(fresh) != *text) {
        result.mismatches.push_back(path.filename().string());
      }
    } catch (const Error&) {
      result.mismatches.push_back(path.filename().string());
    }
  }
  return result;
}

}  // namespace clasp
