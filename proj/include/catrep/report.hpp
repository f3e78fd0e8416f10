#pragma once

// Text and JSON emission. A report is a list of items; every item carries a
// JSON object and a few lines of text, and every number in either form
// comes with the last degree on which it is valid.
//
// JSON envelope: {"version": 1, "items": [ ... ]}. Each item has a "kind".

#include <string>
#include <vector>

#include <json.hpp>

#include "catrep/homology.hpp"
#include "catrep/theorems.hpp"

namespace catrep {

using Json = nlohmann::ordered_json;

struct ReportItem {
  Json json;
  std::string text;
};

class Report {
 public:
  void add(ReportItem item) { items_.push_back(std::move(item)); }
  const std::vector<ReportItem>& items() const { return items_; }
  std::string json() const;
  std::string text() const;

 private:
  std::vector<ReportItem> items_;
};

/// "[1,0,0]".
std::string list_text(const std::vector<std::size_t>& v);
std::string list_text(const std::vector<long long>& v);
std::string list_text(const std::vector<int>& v);

/// {"dims": [...], "valid_through": t}.
Json dims_json(const std::vector<std::size_t>& dims);

ReportItem dims_item(const std::string& label, const std::vector<std::size_t>& dims);
ReportItem homology_item(const HomologyReport& r);
ReportItem hilbert_item(const HilbertFit& fit, bool gd_certified);
ReportItem theorem_item(const TheoremCheck& c);
ReportItem theorem_summary_item(const TheoremReport& r);

}  // namespace catrep
