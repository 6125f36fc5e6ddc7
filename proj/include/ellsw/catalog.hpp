#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ellsw/serialize.hpp"

namespace ellsw {

// Everything stored for one spec.  Timestamps are kept only in the catalog
// line and never take part in comparisons.
struct CatalogRecord {
  GroupSpec spec;
  int64_t group_order = 0;
  Json seifert;
  std::vector<int64_t> abelianization;
  Json sw;  // SWDimensionReport

  Json payload() const;  // the compared part
};

CatalogRecord compute_record(const FiniteGroup& G, const SWDimensionReport& sw);
CatalogRecord compute_record(const GroupSpec& s);

enum class CatalogStatus { Appended, Matched, Drift };

// Append-only newline-delimited record file keyed by (family, m, n).  Each
// line is { "key", "payload", "recorded_at" }.  An existing key is never
// rewritten: a later computation is compared against every stored line for
// that key.
class Catalog {
 public:
  // A missing file is an empty catalog.  Malformed lines throw InputError
  // with the line number.
  static Catalog open(const std::string& path);

  const std::string& path() const { return path_; }
  size_t size() const { return lines_.size(); }
  std::vector<Json> lookup(const GroupSpec& s) const;

  // Compares against stored lines, or appends (and flushes) a new one.
  // On drift, `detail` names the first differing field.
  CatalogStatus check_or_append(const CatalogRecord& r, std::string* detail = nullptr);

 private:
  std::string path_;
  std::vector<std::pair<std::string, Json>> lines_;  // (key, payload)
};

std::string catalog_key(const GroupSpec& s);  // "DD/3/2", "II/7/-"
std::string status_name(CatalogStatus s);

}  // namespace ellsw
