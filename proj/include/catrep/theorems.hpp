#pragma once

// Numeric instances of the regularity inequalities relating V, SV and DV.
//
// Every value below is read off a finite window, and visible homological
// degrees are lower bounds for the true ones. A check therefore passes when
// the inequality holds on the visible values, is a violation only when it
// fails and every term on the right-hand side is certified exact, and is
// inconclusive when it fails with an uncertified right-hand side.
// A right-hand term is certified when it is a constant, a generating degree
// whose construction bound lies inside its window, or comes from a module
// certified to be zero.

#include <optional>
#include <string>
#include <vector>

#include "catrep/homology.hpp"
#include "catrep/shift.hpp"

namespace catrep {

enum class CheckStatus { Pass, Violation, Inconclusive, Skipped };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Violation: return "violation";
    case CheckStatus::Inconclusive: return "inconclusive";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct TheoremCheck {
  std::string name;       // e.g. "hd_i(SV) <= max_j hd_j(V) + i - j"
  int index = -1;         // homological index i, or -1
  CheckStatus status = CheckStatus::Pass;
  int lhs = 0, rhs = 0;   // visible values
  int window = -1;        // degrees on which the values were computed
  std::string reason;     // for skipped and inconclusive checks
  std::string witness;    // for violations
};

struct VerifyOptions {
  int depth = 3;
  int N = 0;                 // offset in reg(SM(s)) <= s + N
  int hypothesis_bound = 3;  // s checked in the hypothesis
  std::size_t max_dim = 4000;
};

struct TheoremReport {
  int horizon = -1;
  int depth = 0;
  int N = 0;
  HomologyReport v, sv, dv;
  bool mu_injective_visible = false;  // KV = 0 on its window
  std::vector<int> hypothesis_regs;   // visible reg(SM(s)), s = 0, 1, ...
  bool hypothesis_holds = false;      // reg(SM(s)) <= s + N on the checked range
  bool hypothesis_zero_holds = false; // the same with N = 0
  std::string hypothesis_note;
  std::optional<int> support_bound;   // N0 with V_n = 0 for n > N0, when certified
  std::vector<TheoremCheck> checks;

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
  /// Checks whose visible values fail, certified or not.
  std::size_t visible_failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      n += (c.status == CheckStatus::Violation || c.status == CheckStatus::Inconclusive) && c.lhs > c.rhs;
    return n;
  }
};

namespace detail {

/// Module known to vanish in every degree: zero on a window that reaches its
/// construction bound on generators.
template <class F>
bool certified_zero(const TruncatedModule<F>& m) {
  return m.is_zero() && m.gd_bound() && *m.gd_bound() <= m.horizon();
}

/// Generating degree known exactly.
template <class F>
bool certified_gd(const TruncatedModule<F>& m) {
  return certified_zero(m) || (m.gd_bound() && *m.gd_bound() <= m.horizon());
}

struct Term {
  int value;
  bool certified;
};

inline Term max_terms(const std::vector<Term>& ts) {
  Term out{ts.front().value, true};
  for (const auto& t : ts) {
    out.value = std::max(out.value, t.value);
    out.certified = out.certified && t.certified;
  }
  return out;
}

}  // namespace detail

/// Visible reg(SM(s)) for s <= bound, depth and horizon as given.
template <class F>
std::vector<int> shifted_free_regularity(const Category& cat, const F& field, int bound, int depth, int horizon,
                                         std::size_t max_dim) {
  std::vector<int> out;
  for (int s = 0; s <= bound; ++s) {
    auto m = free_module(cat, field, s, horizon + 1);
    ResolutionOptions opt;
    opt.depth = depth;
    opt.max_dim = max_dim;
    out.push_back(tor_groups(shift_module(m), opt).reg);
  }
  return out;
}

template <class F>
TheoremReport verify_theorems(const ModulePtr<F>& v, const VerifyOptions& opt = {}) {
  using detail::Term;
  TheoremReport rep;
  rep.horizon = v->horizon();
  rep.depth = opt.depth;
  rep.N = opt.N;
  const auto& cat = v->category();
  ResolutionOptions ropt;
  ropt.depth = opt.depth;
  ropt.max_dim = opt.max_dim;

  auto key = derive(v);
  rep.v = tor_groups(*v, ropt);
  rep.sv = tor_groups(*key.SV, ropt);
  rep.dv = tor_groups(*key.DV, ropt);
  rep.mu_injective_visible = key.KV->is_zero();

  // Hypothesis reg(SM(s)) <= s + N. Visible regularities are lower bounds,
  // so a visible excess refutes it; otherwise it holds on the checked range.
  const int bound = std::min(opt.hypothesis_bound, std::max(0, v->horizon() - 1));
  auto regs = shifted_free_regularity(cat, v->field(), bound, opt.depth, v->horizon(), opt.max_dim);
  rep.hypothesis_regs = regs;
  rep.hypothesis_holds = rep.hypothesis_zero_holds = true;
  for (int s = 0; s <= bound; ++s) {
    if (regs[s] > s + opt.N) rep.hypothesis_holds = false;
    if (regs[s] > s) rep.hypothesis_zero_holds = false;
  }
  rep.hypothesis_note = "reg(SM(s)) checked for s <= " + std::to_string(bound) + " at depth " +
                        std::to_string(opt.depth) + ", horizon " + std::to_string(v->horizon());

  const bool v_zero = detail::certified_zero(*v);
  const bool sv_zero = detail::certified_zero(*key.SV);
  const bool dv_zero = detail::certified_zero(*key.DV);
  auto hd = [](const HomologyReport& r, bool zero, bool gd_ok, int i) {
    return Term{r.hd.at(i), zero || (i == 0 && gd_ok)};
  };
  auto reg_term = [](const HomologyReport& r, bool zero) { return Term{r.reg, zero}; };
  const bool v_gd = detail::certified_gd(*v), sv_gd = detail::certified_gd(*key.SV), dv_gd = detail::certified_gd(*key.DV);

  auto add = [&](std::string name, int index, int lhs, Term rhs, int window, const std::string& what) {
    TheoremCheck c;
    c.name = std::move(name);
    c.index = index;
    c.lhs = lhs;
    c.rhs = rhs.value;
    c.window = window;
    if (lhs <= rhs.value) {
      c.status = CheckStatus::Pass;
    } else if (rhs.certified) {
      c.status = CheckStatus::Violation;
      c.witness = what + ": " + std::to_string(lhs) + " > " + std::to_string(rhs.value) + " (index " +
                  std::to_string(index) + ", degrees <= " + std::to_string(window) + ")";
    } else {
      c.status = CheckStatus::Inconclusive;
      c.reason = "visible values give " + std::to_string(lhs) + " > " + std::to_string(rhs.value) +
                 " but the right-hand side is only a lower bound on degrees <= " + std::to_string(window);
    }
    rep.checks.push_back(std::move(c));
  };
  auto skip = [&](std::string name, int index, std::string reason) {
    TheoremCheck c;
    c.name = std::move(name);
    c.index = index;
    c.status = CheckStatus::Skipped;
    c.reason = std::move(reason);
    rep.checks.push_back(std::move(c));
  };

  const int hv = v->horizon(), hs = key.SV->horizon();

  // Generating degrees of V, SV, DV.
  if (!v->is_zero()) {
    add("gd(DV) <= gd(V) - 1", -1, rep.dv.gd, Term{rep.v.gd - 1, v_gd}, hs, "gd(DV) exceeds gd(V) - 1");
    add("gd(DV) >= gd(V) - 1", -1, rep.v.gd - 1, Term{rep.dv.gd, dv_gd}, hs, "gd(V) - 1 exceeds gd(DV)");
  }
  add("gd(SV) <= gd(V)", -1, rep.sv.gd, Term{rep.v.gd, v_gd}, hs, "gd(SV) exceeds gd(V)");
  add("gd(V) <= gd(SV) + 1", -1, rep.v.gd, Term{rep.sv.gd + 1, sv_gd}, hv, "gd(V) exceeds gd(SV) + 1");

  const std::string why_zero = "hypothesis reg(SM(s)) <= s fails on the checked range";
  const std::string why_n = "hypothesis reg(SM(s)) <= s + " + std::to_string(opt.N) + " fails on the checked range";
  for (int i = 0; i <= opt.depth; ++i) {
    const std::string a = "hd_i(SV) <= max_{j<=i} hd_j(V) + i - j";
    const std::string b = "hd_i(V) <= max(max_{j<i} hd_j(V) + i - j, hd_i(SV) + 1)";
    if (!rep.hypothesis_zero_holds) {
      skip(a, i, why_zero);
      skip(b, i, why_zero);
    } else {
      std::vector<Term> ra, rb;
      for (int j = 0; j <= i; ++j) {
        auto t = hd(rep.v, v_zero, v_gd, j);
        ra.push_back({t.value + i - j, t.certified});
        if (j < i) rb.push_back({t.value + i - j, t.certified});
      }
      auto s = hd(rep.sv, sv_zero, sv_gd, i);
      rb.push_back({s.value + 1, s.certified});
      add(a, i, rep.sv.hd[i], detail::max_terms(ra), hs, "hd_i(SV) too large");
      add(b, i, rep.v.hd[i], detail::max_terms(rb), hv, "hd_i(V) too large");
    }
    const std::string c = "hd_i(V) <= reg(DV) + (N+1)i + 1";
    if (!rep.hypothesis_holds) {
      skip(c, i, why_n);
    } else if (!rep.mu_injective_visible) {
      skip(c, i, "mu_V is not injective (KV != 0)");
    } else {
      auto r = reg_term(rep.dv, dv_zero);
      add(c, i, rep.v.hd[i], Term{r.value + (opt.N + 1) * i + 1, r.certified}, hv, "hd_i(V) exceeds the D-bound");
    }
  }

  if (!rep.hypothesis_zero_holds) {
    skip("reg(SV) <= reg(V)", -1, why_zero);
    skip("reg(V) <= reg(SV) + 1", -1, why_zero);
    skip("reg(V) <= reg(DV) + 1", -1, why_zero);
  } else {
    add("reg(SV) <= reg(V)", -1, rep.sv.reg, reg_term(rep.v, v_zero), hs, "reg(SV) exceeds reg(V)");
    add("reg(V) <= reg(SV) + 1", -1, rep.v.reg, Term{rep.sv.reg + 1, sv_zero}, hv, "reg(V) exceeds reg(SV) + 1");
    if (!rep.mu_injective_visible)
      skip("reg(V) <= reg(DV) + 1", -1, "mu_V is not injective (KV != 0)");
    else
      add("reg(V) <= reg(DV) + 1", -1, rep.v.reg, Term{rep.dv.reg + 1, dv_zero}, hv, "reg(V) exceeds reg(DV) + 1");
  }

  // Finite support: V_n = 0 from some n >= gd bound on is certified to persist.
  if (v->gd_bound()) {
    int last = -1;
    for (int t = 0; t <= hv; ++t)
      if (v->dim(t) > 0) last = t;
    if (last < hv && last + 1 >= *v->gd_bound()) rep.support_bound = last;
  }
  const std::string d = "reg(V) <= N0 for V supported in degrees <= N0";
  if (!rep.support_bound)
    skip(d, -1, "V is not certified to be finitely supported within the horizon");
  else if (!rep.hypothesis_zero_holds)
    skip(d, -1, why_zero);
  else
    add(d, -1, rep.v.reg, Term{*rep.support_bound, true}, hv, "reg(V) exceeds the support bound");
  return rep;
}

}  // namespace catrep
