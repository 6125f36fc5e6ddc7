#include "ellsw/catalog.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "ellsw/errors.hpp"

namespace ellsw {

Json CatalogRecord::payload() const {
  Json j = to_json(spec);
  j["order"] = group_order;
  j["seifert"] = seifert;
  j["abelianization"] = abelianization;
  j["sw"] = sw;
  return j;
}

CatalogRecord compute_record(const FiniteGroup& G, const SWDimensionReport& sw) {
  if (!G.spec) throw InternalError("catalog records need a group from build_group");
  CatalogRecord r;
  r.spec = *G.spec;
  r.group_order = (int64_t)G.order();
  r.seifert = seifert_json(r.spec);
  r.abelianization = abelianization(G).factors;
  r.sw = to_json(sw);
  return r;
}

CatalogRecord compute_record(const GroupSpec& s) {
  FiniteGroup G = build_group(s);
  return compute_record(G, sw_dimension(G));
}

std::string catalog_key(const GroupSpec& s) {
  return family_name(s.family) + "/" + std::to_string(s.m) + "/" + (s.dihedral() ? std::to_string(s.n) : "-");
}

std::string status_name(CatalogStatus s) {
  switch (s) {
    case CatalogStatus::Appended: return "appended";
    case CatalogStatus::Matched: return "matched";
    case CatalogStatus::Drift: return "DRIFT";
  }
  return "?";
}

Catalog Catalog::open(const std::string& path) {
  Catalog c;
  c.path_ = path;
  std::ifstream in(path);
  if (!in) return c;
  std::string line;
  for (size_t no = 1; std::getline(in, line); ++no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw InputError(path + ":" + std::to_string(no) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("key") || !j["key"].is_string() || !j.contains("payload"))
      throw InputError(path + ":" + std::to_string(no) + ": expected {key, payload, recorded_at}");
    c.lines_.emplace_back(j["key"].get<std::string>(), j["payload"]);
  }
  return c;
}

std::vector<Json> Catalog::lookup(const GroupSpec& s) const {
  std::string k = catalog_key(s);
  std::vector<Json> out;
  for (const auto& [key, p] : lines_)
    if (key == k) out.push_back(p);
  return out;
}

namespace {

std::string first_difference(const Json& stored, const Json& fresh) {
  Json patch = Json::diff(stored, fresh);
  if (patch.empty()) return "";
  return patch[0].value("path", std::string("/"));
}

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

CatalogStatus Catalog::check_or_append(const CatalogRecord& r, std::string* detail) {
  Json fresh = r.payload();
  std::vector<Json> stored = lookup(r.spec);
  if (!stored.empty()) {
    for (const Json& s : stored) {
      if (s != fresh) {
        if (detail) *detail = catalog_key(r.spec) + " differs at " + first_difference(s, fresh);
        return CatalogStatus::Drift;
      }
    }
    return CatalogStatus::Matched;
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw InputError("cannot open catalog " + path_ + " for appending");
  Json line{{"key", catalog_key(r.spec)}, {"payload", fresh}, {"recorded_at", utc_now()}};
  out << dump_line(line) << '\n';
  out.flush();
  if (!out) throw InputError("write to catalog " + path_ + " failed");
  lines_.emplace_back(catalog_key(r.spec), fresh);
  return CatalogStatus::Appended;
}

}  // namespace ellsw
