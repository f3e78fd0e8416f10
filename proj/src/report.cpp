#include "catrep/report.hpp"

#include <sstream>

namespace catrep {

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

std::string through(int t) { return t < 0 ? "(empty window)" : "(degrees 0.." + std::to_string(t) + ")"; }

int last_degree(std::size_t size) { return static_cast<int>(size) - 1; }

}  // namespace

std::string list_text(const std::vector<std::size_t>& v) { return join(v); }
std::string list_text(const std::vector<long long>& v) { return join(v); }
std::string list_text(const std::vector<int>& v) { return join(v); }

std::string Report::json() const {
  Json items = Json::array();
  for (const auto& item : items_) items.push_back(item.json);
  Json envelope;
  envelope["version"] = 1;
  envelope["items"] = std::move(items);
  return envelope.dump() + "\n";
}

std::string Report::text() const {
  std::string out;
  for (const auto& item : items_) out += item.text;
  return out;
}

Json dims_json(const std::vector<std::size_t>& dims) {
  Json j;
  j["dims"] = dims;
  j["valid_through"] = last_degree(dims.size());
  return j;
}

ReportItem dims_item(const std::string& label, const std::vector<std::size_t>& dims) {
  Json j;
  j["kind"] = "dims";
  j["module"] = label;
  j["dims"] = dims;
  j["valid_through"] = last_degree(dims.size());
  return {j, label + " dims = " + list_text(dims) + " " + through(last_degree(dims.size())) + "\n"};
}

ReportItem homology_item(const HomologyReport& r) {
  Json j;
  j["kind"] = "homology";
  j["horizon"] = r.horizon;
  j["depth"] = r.depth;
  Json indices = Json::array();
  std::ostringstream text;
  text << "homology to depth " << r.depth << ", horizon " << r.horizon << "\n";
  for (int i = 0; i <= r.depth; ++i) {
    Json e;
    e["i"] = i;
    e["dims"] = r.tor[i];
    e["valid_through"] = r.valid_through[i];
    e["hd"] = r.hd[i];
    e["generator_degrees"] = r.generator_degrees[i];
    indices.push_back(e);
    text << "  H_" << i << " dims = " << list_text(r.tor[i]) << " " << through(r.valid_through[i]) << "; hd_" << i
         << " = " << r.hd[i] << " (lower bound)\n";
  }
  j["indices"] = indices;
  j["gd"] = {{"value", r.gd}, {"valid_through", r.valid_through.empty() ? -1 : r.valid_through[0]}};
  j["reg"] = {{"value", r.reg}, {"lower_bound", true}, {"exact_within_window", r.complete}, {"depth", r.depth}};
  j["failures"] = r.failures;
  text << "  gd = " << r.gd << " " << through(r.valid_through.empty() ? -1 : r.valid_through[0]) << "\n";
  text << "  reg >= " << r.reg << " (indices 0.." << r.depth << (r.complete ? ", every index complete to the horizon"
                                                                             : ", some indices stop below the horizon")
       << ")\n";
  for (const auto& f : r.failures) text << "  FAILURE: " << f << "\n";
  return {j, text.str()};
}

ReportItem hilbert_item(const HilbertFit& fit, bool gd_certified) {
  Json j;
  j["kind"] = "hilbert_fit";
  j["dims"] = fit.dims;
  j["valid_through"] = last_degree(fit.dims.size());
  j["gd"] = {{"value", fit.gd}, {"certified", gd_certified}};
  j["found"] = fit.found;
  std::ostringstream text;
  text << "dims = " << list_text(fit.dims) << " " << through(last_degree(fit.dims.size())) << "\n";
  if (fit.found) {
    Json coeffs = Json::array();
    for (const auto& c : fit.coefficients) coeffs.push_back(c.get_str());
    j["onset"] = fit.onset;
    j["coefficients"] = coeffs;
    j["polynomial"] = polynomial_text(fit.coefficients);
    j["degree"] = fit.degree();
    j["degree_within_gd"] = fit.degree_within_gd();
    j["matches"] = fit.matches;
    text << "polynomial " << polynomial_text(fit.coefficients) << ", onset " << fit.onset << ", degree "
         << fit.degree() << " <= gd " << fit.gd << (fit.degree_within_gd() ? "" : " FAILS") << "; matches dims "
         << fit.onset << ".." << last_degree(fit.dims.size()) << (fit.matches ? "" : " FAILS") << "\n";
  } else {
    j["reason"] = fit.reason;
    text << "inconclusive: " << fit.reason << "\n";
  }
  return {j, text.str()};
}

ReportItem theorem_item(const TheoremCheck& c) {
  Json j;
  j["kind"] = "theorem_check";
  j["name"] = c.name;
  j["index"] = c.index;
  j["status"] = status_name(c.status);
  std::ostringstream text;
  text << status_name(c.status) << ": " << c.name;
  if (c.index >= 0) text << " [i=" << c.index << "]";
  if (c.status != CheckStatus::Skipped) {
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["valid_through"] = c.window;
    text << ": " << c.lhs << " vs " << c.rhs << " " << through(c.window);
  }
  if (!c.reason.empty()) {
    j["reason"] = c.reason;
    text << "; " << c.reason;
  }
  if (!c.witness.empty()) {
    j["witness"] = c.witness;
    text << "; witness: " << c.witness;
  }
  text << "\n";
  return {j, text.str()};
}

ReportItem theorem_summary_item(const TheoremReport& r) {
  Json j;
  j["kind"] = "theorem_summary";
  j["horizon"] = r.horizon;
  j["depth"] = r.depth;
  j["N"] = r.N;
  j["hypothesis"] = {{"regularities", r.hypothesis_regs},
                     {"holds", r.hypothesis_holds},
                     {"holds_with_N_zero", r.hypothesis_zero_holds},
                     {"note", r.hypothesis_note}};
  j["mu_injective"] = {{"value", r.mu_injective_visible}, {"valid_through", r.horizon - 1}};
  if (r.support_bound) j["support_bound"] = *r.support_bound;
  j["pass"] = r.count(CheckStatus::Pass);
  j["violation"] = r.count(CheckStatus::Violation);
  j["inconclusive"] = r.count(CheckStatus::Inconclusive);
  j["skipped"] = r.count(CheckStatus::Skipped);
  std::ostringstream text;
  text << "hypothesis: reg(SM(s)) = " << list_text(r.hypothesis_regs) << " for s = 0.." << r.hypothesis_regs.size() - 1
       << " (" << (r.hypothesis_holds ? "holds" : "fails") << " with N = " << r.N << ")\n";
  text << "mu_V injective: " << (r.mu_injective_visible ? "yes" : "no") << " " << through(r.horizon - 1) << "\n";
  text << "checks: " << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Violation) << " violation, "
       << r.count(CheckStatus::Inconclusive) << " inconclusive, " << r.count(CheckStatus::Skipped) << " skipped\n";
  return {j, text.str()};
}

}  // namespace catrep
