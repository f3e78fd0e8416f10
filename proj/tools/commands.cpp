#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "catrep/corpus.hpp"
#include "catrep/homology.hpp"
#include "catrep/presentation.hpp"
#include "catrep/report.hpp"
#include "catrep/shift.hpp"
#include "catrep/theorems.hpp"

namespace catrep::cli {

namespace {

constexpr int kDefaultHorizon = 6;

std::string window_text(int t) { return t < 0 ? "(empty window)" : "(degrees 0.." + std::to_string(t) + ")"; }

int last(const std::vector<std::size_t>& dims) { return static_cast<int>(dims.size()) - 1; }

/// Tracks the worst outcome seen by a command.
struct Outcome {
  int code = kOk;
  void inconclusive() {
    if (code == kOk) code = kInconclusive;
  }
  void violation() { code = kViolation; }
};

struct Job {
  const JobConfig& config;
  Presentation presentation;
  FieldSpec field;
  int horizon;
  std::size_t max_dim;
};

ReportItem job_item(const Job& job) {
  const auto& cat = job.presentation.category;
  Json j;
  j["kind"] = "job";
  j["command"] = job.config.command;
  j["category"] = cat.name();
  if (cat.group()) j["group"] = cat.group()->spec();
  j["field"] = job.field.to_string();
  j["horizon"] = job.horizon;
  if (!job.config.path.empty()) j["input"] = job.config.path;
  std::string text = job.config.command + ": " + cat.name();
  if (cat.group()) text += " with G = " + cat.group()->spec();
  text += " over " + job.field.to_string() + ", horizon " + std::to_string(job.horizon) + "\n";
  return {j, text};
}

ReportItem note_item(const std::string& kind, Json j, const std::string& text) {
  Json out;
  out["kind"] = kind;
  for (auto& [k, v] : j.items()) out[k] = v;
  return {out, text};
}

ResolutionOptions resolution_options(const Job& job) {
  ResolutionOptions opt;
  opt.depth = job.config.depth;
  opt.max_dim = job.max_dim;
  return opt;
}

template <class F>
bool gd_certified(const TruncatedModule<F>& v) {
  return v.gd_bound() && *v.gd_bound() <= v.horizon();
}

// ---------------------------------------------------------------- commands

template <class F>
int cmd_info(const Job& job, const ModulePtr<F>& v, Report& rep) {
  rep.add(dims_item("V", v->dims()));
  const int gd = visible_generating_degree(*v);
  const bool certified = gd_certified(*v);
  Json j;
  j["generators"] = job.presentation.generators.size();
  j["relations"] = job.presentation.relations.size();
  j["gd"] = {{"value", gd}, {"valid_through", v->horizon()}, {"certified", certified}};
  j["provenance"] = job.presentation.category.provenance();
  std::ostringstream text;
  text << job.presentation.generators.size() << " generators, " << job.presentation.relations.size()
       << " relations\n";
  text << "gd = " << gd << " " << window_text(v->horizon())
       << (certified ? " (exact: every generator lies inside the window)" : " (visible only)") << "\n";
  rep.add(note_item("module_info", j, text.str()));
  return kOk;
}

template <class F>
int cmd_hilbert(const Job&, const ModulePtr<F>& v, Report& rep) {
  const bool certified = gd_certified(*v);
  auto fit = hilbert_fit(v->dims(), visible_generating_degree(*v));
  rep.add(hilbert_item(fit, certified));
  if (!fit.found) return kInconclusive;
  if (fit.matches && fit.degree_within_gd()) return kOk;
  return certified ? kViolation : kInconclusive;
}

template <class F>
int cmd_homology(const Job& job, const ModulePtr<F>& v, Report& rep) {
  auto r = tor_groups(*v, resolution_options(job));
  rep.add(homology_item(r));
  if (!r.failures.empty()) return kViolation;
  return r.complete ? kOk : kInconclusive;
}

template <class F>
int cmd_shift(const Job&, const ModulePtr<F>& v, Report& rep) {
  auto key = derive(v);
  rep.add(dims_item("V", v->dims()));
  rep.add(dims_item("KV", key.KV->dims()));
  rep.add(dims_item("SV", key.SV->dims()));
  rep.add(dims_item("DV", key.DV->dims()));
  auto euler = key.euler();
  const int window = key.horizon();
  Json j;
  j["alternating_sums"] = euler;
  j["valid_through"] = window;
  j["exact"] = key.exact();
  j["mu_injective"] = mu_injective(key);
  std::ostringstream text;
  text << "dim KV - dim V + dim SV - dim DV = " << list_text(euler) << " " << window_text(window) << "\n";
  text << "mu_V injective: " << (mu_injective(key) ? "yes" : "no") << " " << window_text(window) << "\n";
  int bad = -1;
  for (int t = 0; t <= window; ++t)
    if (euler[t] != 0 && bad < 0) bad = t;
  if (bad >= 0) {
    j["witness"] = "alternating sum " + std::to_string(euler[bad]) + " at degree " + std::to_string(bad);
    text << "VIOLATION: key sequence not exact at degree " << bad << "\n";
  } else {
    text << "key sequence exact " << window_text(window) << "\n";
  }
  rep.add(note_item("key_sequence", j, text.str()));
  return bad >= 0 ? kViolation : kOk;
}

template <class F>
int cmd_probe_sd(const Job&, const ModulePtr<F>& v, Report& rep) {
  auto probe = sd_commutation_probe(v);
  const int window = last(probe.sdv);
  Json j;
  j["sdv"] = probe.sdv;
  j["dsv"] = probe.dsv;
  j["valid_through"] = window;
  j["agree"] = probe.agree();
  std::ostringstream text;
  if (probe.dsv_zero())
    text << "DSV = 0; SDV dims = " << list_text(probe.sdv);
  else
    text << "DSV dims = " << list_text(probe.dsv) << "; SDV dims = " << list_text(probe.sdv);
  text << " " << window_text(window) << "\n";
  text << "S and D " << (probe.agree() ? "agree" : "do not commute") << " on dimensions " << window_text(window)
       << "\n";
  rep.add(note_item("sd_probe", j, text.str()));
  return kOk;
}

template <class F>
int cmd_decompose(const Job& job, const ModulePtr<F>& v, Report& rep) {
  auto st = un_chain(v, job.config.max_steps);
  Outcome out;
  Json chain = Json::array();
  std::ostringstream text;
  for (std::size_t n = 0; n < st.chain.size(); ++n) {
    auto dims = st.chain[n].dims();
    chain.push_back({{"n", n}, {"dims", dims}, {"valid_through", last(dims)}});
    text << "U^" << n << " dims " << list_text(dims) << " " << window_text(last(dims)) << "\n";
  }
  Json j;
  j["chain"] = chain;
  j["gd"] = {{"value", st.gd}, {"certified", st.gd_certified}};
  j["characterization_mismatches"] = st.characterization_mismatches;
  for (int n : st.characterization_mismatches) {
    text << "VIOLATION: U^" << n << " differs from {v : mu(v) in U^" << n - 1 << "}\n";
    out.violation();
  }
  auto split = sin_reg(st);
  if (!split) {
    j["stabilized"] = false;
    text << "not stabilized within " << job.config.max_steps << " steps on horizon " << v->horizon() << "\n";
    out.inconclusive();
  } else {
    const int n = *st.stabilized_at;
    j["stabilized"] = true;
    j["stabilized_at"] = n;
    j["sin"] = dims_json(split->sin->dims());
    j["reg"] = dims_json(split->reg->dims());
    j["k_reg"] = dims_json(split->reg_key.KV->dims());
    text << "stabilized at n=" << n << "; V_sin dims " << list_text(split->sin->dims()) << " "
         << window_text(split->horizon) << "\n";
    text << "V_reg dims " << list_text(split->reg->dims()) << " " << window_text(split->horizon) << "\n";
    text << "K(V_reg) dims " << list_text(split->reg_key.KV->dims()) << " "
         << window_text(split->reg_key.horizon()) << "\n";
    if (!split->k_reg_zero()) {
      j["witness"] = "K(V_reg) dims " + list_text(split->reg_key.KV->dims());
      text << "VIOLATION: K(V_reg) is nonzero\n";
      out.violation();
    }
  }
  rep.add(note_item("decomposition", j, text.str()));
  return out.code;
}

template <class F>
int cmd_verify(const Job& job, const ModulePtr<F>& v, Report& rep) {
  VerifyOptions opt;
  opt.depth = job.config.depth;
  opt.N = job.config.N;
  opt.hypothesis_bound = job.config.hypothesis_bound;
  opt.max_dim = job.max_dim;
  auto r = verify_theorems(v, opt);
  rep.add(theorem_summary_item(r));
  for (const auto* h : {&r.v, &r.sv, &r.dv}) {
    auto item = homology_item(*h);
    const char* label = h == &r.v ? "V" : (h == &r.sv ? "SV" : "DV");
    item.json["module"] = label;
    item.text = std::string(label) + " " + item.text;
    rep.add(std::move(item));
  }
  for (const auto& c : r.checks) rep.add(theorem_item(c));
  Outcome out;
  for (const auto* h : {&r.v, &r.sv, &r.dv})
    if (!h->failures.empty()) out.violation();
  if (r.count(CheckStatus::Violation)) out.violation();
  if (r.count(CheckStatus::Inconclusive)) out.inconclusive();
  return out.code;
}

/// U^n against the joint annihilator for n = 1..max_steps.
template <class F>
std::vector<int> oracle_mismatches(const ModulePtr<F>& v, int steps, Json* rows, std::ostream* text) {
  auto chain = un_steps(v, steps);
  std::vector<int> bad;
  for (int n = 1; n < static_cast<int>(chain.size()); ++n) {
    auto ann = annihilator_oracle(v, n);
    const int window = v->horizon() - n;
    const bool same = same_submodule(chain[n], ann, window);
    if (!same) bad.push_back(n);
    if (rows)
      rows->push_back({{"n", n}, {"chain", chain[n].dims()}, {"oracle", ann.dims()}, {"valid_through", window},
                       {"agree", same}});
    if (text)
      *text << "U^" << n << " dims " << list_text(chain[n].dims()) << ", annihilator dims " << list_text(ann.dims())
            << " " << window_text(window) << (same ? ": agree" : ": DISAGREE") << "\n";
  }
  return bad;
}

template <class F>
int cmd_oracle(const Job& job, const ModulePtr<F>& v, Report& rep) {
  Json rows = Json::array();
  std::ostringstream text;
  auto bad = oracle_mismatches(v, job.config.max_steps, &rows, &text);
  Json j;
  j["steps"] = rows;
  j["mismatches"] = bad;
  rep.add(note_item("oracle", j, text.str()));
  return bad.empty() ? kOk : kViolation;
}

// ---------------------------------------------------------------- fuzz

struct CaseResult {
  std::vector<std::string> violations;
  std::vector<std::string> inconclusive;
};

template <class F>
CaseResult fuzz_case(const Job& job, const ModulePtr<F>& v, std::uint64_t case_seed) {
  CaseResult res;
  auto fail = [&](std::string s) { res.violations.push_back(std::move(s)); };
  std::mt19937_64 rng(case_seed);
  if (auto f = functoriality_failure(*v, rng, 16)) fail("functoriality: " + *f);

  auto key = derive(v);
  if (!key.exact()) fail("key sequence not exact: " + list_text(key.euler()));

  VerifyOptions vopt;
  vopt.depth = job.config.depth;
  vopt.N = job.config.N;
  vopt.hypothesis_bound = job.config.hypothesis_bound;
  vopt.max_dim = job.max_dim;
  auto th = verify_theorems(v, vopt);
  for (const auto* h : {&th.v, &th.sv, &th.dv})
    for (const auto& f : h->failures) fail("resolution: " + f);
  for (const auto& c : th.checks) {
    if (c.status == CheckStatus::Violation) fail(c.name + ": " + c.witness);
    if (c.status == CheckStatus::Inconclusive) res.inconclusive.push_back(c.name + ": " + c.reason);
  }

  auto ropt = resolution_options(job);
  ropt.pad = true;
  auto padded = tor_groups(*v, ropt);
  for (int i = 0; i <= job.config.depth; ++i) {
    const int w = std::min(padded.valid_through[i], th.v.valid_through[i]);
    for (int t = 0; t <= w; ++t)
      if (padded.tor[i][t] != th.v.tor[i][t]) {
        fail("padded and minimal resolutions differ at H_" + std::to_string(i) + " degree " + std::to_string(t));
        break;
      }
  }
  if (!th.v.complete) res.inconclusive.push_back("resolution stopped below the horizon");

  auto st = un_chain(v, job.config.max_steps);
  for (int n : st.characterization_mismatches) fail("U^" + std::to_string(n) + " characterization");
  if (auto split = sin_reg(st)) {
    if (!split->k_reg_zero()) fail("K(V_reg) nonzero: " + list_text(split->reg_key.KV->dims()));
  } else {
    res.inconclusive.push_back("U^n chain not stabilized");
  }
  for (int n : oracle_mismatches<F>(v, std::min(job.config.max_steps, 3), nullptr, nullptr))
    fail("U^" + std::to_string(n) + " differs from the annihilator oracle");

  auto fit = hilbert_fit(v->dims(), visible_generating_degree(*v));
  if (!fit.found)
    res.inconclusive.push_back("hilbert: " + fit.reason);
  else if (!fit.matches || !fit.degree_within_gd())
    (gd_certified(*v) ? res.violations : res.inconclusive).push_back("hilbert fit fails");
  return res;
}

int cmd_fuzz(const JobConfig& config, const Category& cat, const FieldSpec& field, int horizon, std::size_t max_dim,
             Report& rep) {
  auto corpus = random_corpus(cat, field, config.seed, config.count);
  Outcome out;
  std::size_t n_viol = 0, n_inc = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    auto p = corpus[k];
    p.field = field;
    p.horizon = horizon;
    Job job{config, p, field, horizon, max_dim};
    CaseResult res;
    try {
      res = with_field(field, [&](auto f) {
        auto v = from_presentation(p, f, horizon).module;
        return fuzz_case(job, v, config.seed * 1000003u + k);
      });
    } catch (const RationalGrowthError& e) {
      res.inconclusive.push_back(e.what());
    }
    Json j;
    j["seed"] = config.seed;
    j["case"] = k;
    j["status"] = res.violations.empty() ? (res.inconclusive.empty() ? "pass" : "inconclusive") : "violation";
    j["violations"] = res.violations;
    j["inconclusive"] = res.inconclusive;
    std::ostringstream text;
    text << "seed " << config.seed << " case " << k << ": " << j["status"].get<std::string>();
    if (!res.inconclusive.empty()) text << " (" << res.inconclusive.size() << " inconclusive)";
    text << "\n";
    for (const auto& s : res.violations) text << "  VIOLATION: " << s << "\n";
    if (!res.violations.empty()) {
      j["presentation"] = write_presentation(p);
      text << write_presentation(p);
      out.violation();
      ++n_viol;
    } else if (!res.inconclusive.empty()) {
      out.inconclusive();
      ++n_inc;
    }
    rep.add(note_item("fuzz_case", j, text.str()));
  }
  Json j;
  j["seed"] = config.seed;
  j["count"] = corpus.size();
  j["violations"] = n_viol;
  j["inconclusive"] = n_inc;
  rep.add(note_item("fuzz_summary", j,
                    "fuzz seed " + std::to_string(config.seed) + ": " + std::to_string(corpus.size()) + " cases, " +
                        std::to_string(n_viol) + " with violations, " + std::to_string(n_inc) +
                        " with inconclusive checks\n"));
  return out.code;
}

template <class F>
int dispatch(const Job& job, const ModulePtr<F>& v, Report& rep) {
  const auto& c = job.config.command;
  if (c == "info") return cmd_info(job, v, rep);
  if (c == "hilbert") return cmd_hilbert(job, v, rep);
  if (c == "homology") return cmd_homology(job, v, rep);
  if (c == "shift") return cmd_shift(job, v, rep);
  if (c == "probe-sd") return cmd_probe_sd(job, v, rep);
  if (c == "decompose") return cmd_decompose(job, v, rep);
  if (c == "verify") return cmd_verify(job, v, rep);
  if (c == "oracle") return cmd_oracle(job, v, rep);
  throw std::invalid_argument("unknown command '" + c + "'");
}

void emit(const Report& rep, const JobConfig& config, std::ostream& out) {
  out << (config.format == "json" ? rep.json() : rep.text());
}

}  // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  if (config.depth < 0) {
    err << "error: depth must be nonnegative\n";
    return kParseError;
  }
  if (config.horizon && *config.horizon < 0) {
    err << "error: horizon must be nonnegative\n";
    return kParseError;
  }
  Report rep;
  try {
    if (config.command == "fuzz") {
      if (!config.kind) {
        err << "error: fuzz needs --cat\n";
        return kParseError;
      }
      const bool needs_group = *config.kind == Kind::FI_G || *config.kind == Kind::OI_G;
      if (needs_group && !config.group) {
        err << "error: " << kind_name(*config.kind) << " needs --group\n";
        return kParseError;
      }
      Category cat(*config.kind, needs_group ? std::optional<Group>(Group::parse(*config.group)) : std::nullopt);
      FieldSpec field = config.field.value_or(FieldSpec::parse("q"));
      const int h = config.horizon.value_or(kDefaultHorizon);
      const std::size_t max_dim = config.max_dim;
      Presentation p;
      p.category = cat;
      JobConfig shown = config;
      rep.add(job_item(Job{shown, p, field, h, max_dim}));
      int code = cmd_fuzz(config, cat, field, h, max_dim, rep);
      emit(rep, config, out);
      return code;
    }

    if (!std::ifstream(config.path)) {
      err << "error: cannot open '" << config.path << "'\n";
      return kParseError;
    }
    PresentationOverrides ov{config.kind, config.group, config.field, config.horizon};
    Presentation p = read_presentation(config.path, ov);
    FieldSpec field = p.field.value_or(FieldSpec::parse("q"));
    const int h = p.horizon.value_or(kDefaultHorizon);
    p.field = field;
    p.horizon = h;

    if (config.command == "info" && config.emit_normalized) {
      out << write_presentation(p);
      return kOk;
    }
    Job job{config, p, field, h, config.max_dim};
    rep.add(job_item(job));
    int code = with_field(field, [&](auto f) {
      auto v = from_presentation(p, f, h).module;
      return dispatch(job, v, rep);
    });
    emit(rep, config, out);
    return code;
  } catch (const ParseError& e) {
    err << (config.path.empty() ? std::string("input") : config.path) << ": " << e.what() << "\n";
    return kParseError;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const CategoryError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const RationalGrowthError& e) {
    emit(rep, config, out);
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  }
}

}  // namespace catrep::cli
