#pragma once

// The shift functor S, the natural map mu: V -> SV, the kernel and derivative
// functors K and D, the chain U^0 <= U^1 <= ... with U^{n+1}/U^n = K(V/U^n),
// and the singular/regular split.

#include <optional>
#include <string>
#include <vector>

#include "catrep/module.hpp"

namespace catrep {

/// (SV)_t = V_{t+1}; alpha acts on SV as embed(alpha) acts on V.
template <class F>
TruncatedModule<F> shift_module(const TruncatedModule<F>& v) {
  const int h = v.horizon();
  std::vector<std::size_t> dims;
  for (int t = 0; t + 1 <= h; ++t) dims.push_back(v.dim(t + 1));
  TruncatedModule<F> s(v.category(), v.field(), dims);
  const auto& cat = v.category();
  for (const auto& step : s.steps()) s.set_action(step, act(v, cat.embed(cat.generator(step))));
  s.set_gd_bound(v.gd_bound());
  return s;
}

/// mu_V, degree t given by the witness mu_witness(t), on horizon h - 1.
template <class F>
ModuleMap<F> mu_map(const ModulePtr<F>& v, const ModulePtr<F>& sv) {
  ModuleMap<F> mu{v, sv, {}};
  for (int t = 0; t <= sv->horizon(); ++t) mu.mats.push_back(act(*v, v->category().mu_witness(t)));
  return mu;
}

template <class F>
struct KeySequence {
  ModulePtr<F> V, KV, SV, DV;
  ModuleMap<F> mu;    // V -> SV
  ModuleMap<F> incl;  // KV -> V
  ModuleMap<F> proj;  // SV -> DV

  int horizon() const { return SV->horizon(); }

  /// dim KV_t - dim V_t + dim SV_t - dim DV_t per degree.
  std::vector<long long> euler() const {
    std::vector<long long> out;
    for (int t = 0; t <= horizon(); ++t)
      out.push_back(static_cast<long long>(KV->dim(t)) - static_cast<long long>(V->dim(t)) +
                    static_cast<long long>(SV->dim(t)) - static_cast<long long>(DV->dim(t)));
    return out;
  }
  bool exact() const {
    for (auto e : euler())
      if (e != 0) return false;
    return true;
  }
};

template <class F>
KeySequence<F> derive(const ModulePtr<F>& v) {
  auto sv = share(shift_module(*v));
  auto mu = mu_map(v, sv);
  auto [kv, incl] = kernel_of_map(mu);
  auto [dv, proj] = quotient(image_submodule(mu));
  return {v, kv, sv, dv, mu, incl, proj};
}

template <class F>
bool mu_injective(const KeySequence<F>& ks) {
  return ks.KV->is_zero();
}

// ---------------------------------------------------------------- U^n chain

enum class ChainStatus { Stabilized, HorizonExhausted };

template <class F>
struct ChainState {
  ModulePtr<F> V;
  std::vector<Submodule<F>> chain;  // chain[n] = U^n, valid on degrees <= h - n
  std::optional<int> stabilized_at;
  ChainStatus status = ChainStatus::HorizonExhausted;
  int gd = -1;               // generating degree used by the stopping rule
  bool gd_certified = false;  // true when gd comes from the construction
  /// Steps where the recursive construction and the membership formula
  /// {v : mu(v) in U^n_{s+1}} disagreed. Empty unless something is broken.
  std::vector<int> characterization_mismatches;

  int valid_horizon(int n) const { return V->horizon() - n; }
};

template <class F>
Submodule<F> shifted(const Submodule<F>& u, const ModulePtr<F>& sv, int horizon) {
  Submodule<F> out{sv, {}, {}};
  for (int t = 0; t <= horizon; ++t) {
    out.basis.push_back(u.basis.at(t + 1));
    out.pivots.push_back(u.pivots.at(t + 1));
  }
  return out;
}

/// Builds U^0 = 0, U^{n+1} = preimage in V of K(V/U^n), and stops when
/// U^n = U^{n+1} on degrees <= h - n - 1 with h - n - 1 >= gd(V) + 1.
template <class F>
ChainState<F> un_chain(const ModulePtr<F>& v, int max_steps) {
  ChainState<F> st;
  st.V = v;
  const int h = v->horizon();
  if (v->gd_bound()) {
    st.gd = *v->gd_bound();
    st.gd_certified = true;
  } else {
    st.gd = visible_generating_degree(*v);
  }
  st.chain.push_back(zero_submodule(v, h));
  auto sv = share(shift_module(*v));
  auto mu = mu_map(v, sv);
  for (int n = 0; n < max_steps; ++n) {
    const int window = h - n - 1;
    if (window < 0) break;
    const auto un = st.chain[n];
    auto [q, proj] = quotient(un);
    auto kq = kernel_submodule(mu_map(q, share(shift_module(*q))));
    auto next = preimage(proj, kq);
    auto formula = preimage(mu, shifted(un, sv, window));
    if (!same_submodule(next, formula, window)) st.characterization_mismatches.push_back(n + 1);
    st.chain.push_back(std::move(next));
    if (same_submodule(truncate(un, window), st.chain[n + 1], window)) {
      if (window >= st.gd + 1) {
        st.stabilized_at = n;
        st.status = ChainStatus::Stabilized;
      }
      break;
    }
    if (window - 1 < st.gd + 1) break;
  }
  return st;
}

/// U^0, ..., U^steps with no stopping rule; U^n lives on degrees <= h - n.
template <class F>
std::vector<Submodule<F>> un_steps(const ModulePtr<F>& v, int steps) {
  std::vector<Submodule<F>> out{zero_submodule(v, v->horizon())};
  for (int n = 0; n < steps && v->horizon() - n - 1 >= 0; ++n) {
    auto [q, proj] = quotient(out.back());
    out.push_back(preimage(proj, kernel_submodule(mu_map(q, share(shift_module(*q))))));
  }
  return out;
}

template <class F>
struct SinReg {
  ModulePtr<F> sin, reg;
  ModuleMap<F> sin_incl, reg_proj;
  KeySequence<F> reg_key;  // derive(V_reg); KV_reg must vanish
  int horizon = -1;

  bool k_reg_zero() const { return reg_key.KV->is_zero(); }
};

/// V_sin = U^n at the stabilization index, V_reg = V / V_sin.
template <class F>
std::optional<SinReg<F>> sin_reg(const ChainState<F>& st) {
  if (!st.stabilized_at) return std::nullopt;
  const int n = *st.stabilized_at;
  const auto& u = st.chain[n];
  auto [sin, incl] = realize(u);
  auto [reg, proj] = quotient(u);
  auto key = derive(reg);
  return SinReg<F>{sin, reg, incl, proj, key, u.horizon()};
}

// ---------------------------------------------------------------- oracles

/// Degreewise joint annihilator on degrees <= h - n of
///   FI kinds: all of C(s, s + n);
///   OI kinds: the maps in C(s, s + n) missing 1..n, i.e. I^n starting at s.
template <class F>
Submodule<F> annihilator_oracle(const ModulePtr<F>& v, int n) {
  const auto& cat = v->category();
  const F& f = v->field();
  Submodule<F> out{v, {}, {}};
  for (int s = 0; s + n <= v->horizon(); ++s) {
    EchelonSpace<F> rows(f, v->dim(s));
    auto images = orbit_matrices(*v, s, s + n, Mat<F>::identity(f, v->dim(s)));
    const auto& hom = cat.hom(s, s + n);
    for (std::size_t k = 0; k < hom.size(); ++k) {
      if (rows.full()) break;
      const auto& a = hom[k];
      if (cat.order_preserving() && s > 0 && a.images[0] < std::uint32_t(n) + 1) continue;
      const auto& m = images[k];
      for (std::size_t i = 0; i < m.rows() && !rows.full(); ++i)
        rows.insert(Vec<F>(m.row(i).begin(), m.row(i).end()));
    }
    Mat<F> r = rows.rref().reduced;
    if (r.rows() == 0) r = Mat<F>(f, 0, v->dim(s));
    append_canonical(out, kernel_basis(r));
  }
  return out;
}

template <class F>
struct SDProbe {
  std::vector<std::size_t> sdv, dsv;  // dims on degrees <= h - 2
  bool agree() const { return sdv == dsv; }
  bool dsv_zero() const {
    return std::all_of(dsv.begin(), dsv.end(), [](std::size_t d) { return d == 0; });
  }
};

template <class F>
SDProbe<F> sd_commutation_probe(const ModulePtr<F>& v) {
  auto dv = derive(v).DV;
  auto sdv = shift_module(*dv);
  auto dsv = derive(share(shift_module(*v))).DV;
  return {sdv.dims(), dsv->dims()};
}

}  // namespace catrep
