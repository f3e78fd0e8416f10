#pragma once

// Zeroth homology V/mV, free resolutions built degree by degree, Tor groups
// H_i(V) = Tor_i(C/m, V), homological degrees and regularity.
//
// Free modules P^i are never stored as TruncatedModules. A generator of P^i
// sits in some degree d and maps to an element z of P^{i-1}_d (of V_d for
// i = 0); the basis element (alpha, j) of P^i_t maps to alpha . z, which is a
// relabelling of z's coordinates when i > 0. Generators are kept sorted by
// degree, so the coordinates of generators of degree t (the "top" ones,
// spanning P^i_t modulo m) form the tail of P^i_t.
//
// Two formulas for dim H_i(V)_t are evaluated:
//   reduced complex: n_i - rank(dbar_i) - rank(dbar_{i+1}), with dbar the
//     top-by-top block of the differential;
//   syzygies: nullity(d_{i-1} on non-top columns) - rank(d_i on non-top
//     columns), with d_{-1} = 0 on V, which needs only P^0..P^i.

#include <optional>
#include <string>
#include <vector>

#include "catrep/module.hpp"

namespace catrep {

template <class F>
struct ZerothHomology {
  std::vector<std::size_t> dims;  // dim H_0(V)_t
  std::vector<Mat<F>> lifts;      // complement of (mV)_t in V_t
  int gd = -1;
};

template <class F>
ZerothHomology<F> zeroth_homology(const TruncatedModule<F>& v) {
  ZerothHomology<F> out;
  for (int t = 0; t <= v.horizon(); ++t) {
    auto space = decomposable_space(v, t);
    out.dims.push_back(v.dim(t) - space.dim());
    auto ech = space.rref();
    out.lifts.push_back(complement_basis(transpose(ech.reduced)));
    if (out.dims.back() > 0) out.gd = t;
  }
  return out;
}

struct ResolutionOptions {
  int depth = 3;
  std::size_t max_dim = 4000;  // largest dim P^i_t (or target) attempted
  bool pad = false;            // add one redundant generator to every P^i
};

struct ResolutionStep {
  std::vector<int> generator_degrees;
  std::vector<std::size_t> dims;  // dim P^i_t for the degrees reached
  int stopped_at = -1;            // first degree abandoned because of max_dim, or -1
};

struct Resolution {
  int horizon = -1;
  int depth = 0;
  std::vector<ResolutionStep> steps;
  std::vector<std::vector<long long>> tor;          // syzygy formula, tor[i][t]
  std::vector<std::vector<long long>> tor_reduced;  // reduced complex, -1 where not available
  std::vector<int> valid_through;                   // tor[i] known on degrees <= valid_through[i]
  std::vector<std::string> failures;                // broken invariants; empty when healthy
};

namespace detail {

template <class F>
struct SparseEntry {
  std::uint32_t gen;
  std::uint32_t index;
  typename F::Element coeff;
};

template <class F>
using Sparse = std::vector<SparseEntry<F>>;

// Column elimination that remembers how each stored row was combined, so a
// column reducing to zero yields a kernel vector.
template <class F>
class KernelSweep {
 public:
  KernelSweep(F field, std::size_t rows, std::size_t cols) : f_(std::move(field)), rows_(rows), cols_(cols) {}

  /// Feeds column j; returns a kernel vector when it depends on earlier ones.
  std::optional<Vec<F>> feed(std::size_t j, Vec<F> v) {
    std::vector<std::pair<std::size_t, typename F::Element>> combo{{j, f_.one()}};
    for (std::size_t k = 0; k < reduced_.size(); ++k) {
      const auto c = v[pivots_[k]];
      if (f_.is_zero(c)) continue;
      for (std::size_t r : supports_[k]) f_.sub_mul(v[r], c, reduced_[k][r]);
      for (const auto& [col, coeff] : combos_[k]) combo.push_back({col, f_.neg(f_.mul(c, coeff))});
    }
    std::size_t p = 0;
    while (p < rows_ && f_.is_zero(v[p])) ++p;
    if (p == rows_) {
      Vec<F> kernel(cols_, f_.zero());
      for (const auto& [col, coeff] : combo) kernel[col] = f_.add(kernel[col], coeff);
      return kernel;
    }
    auto inv = f_.inv(v[p]);
    std::vector<std::size_t> support;
    for (std::size_t r = p; r < rows_; ++r) {
      if (f_.is_zero(v[r])) continue;
      v[r] = f_.mul(v[r], inv);
      support.push_back(r);
    }
    // Merge repeated columns in the combination before storing it.
    std::sort(combo.begin(), combo.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<std::size_t, typename F::Element>> merged;
    for (auto& [col, coeff] : combo) {
      if (!merged.empty() && merged.back().first == col)
        merged.back().second = f_.add(merged.back().second, coeff);
      else
        merged.push_back({col, coeff});
    }
    std::erase_if(merged, [&](const auto& e) { return f_.is_zero(e.second); });
    for (auto& e : merged) e.second = f_.mul(e.second, inv);
    reduced_.push_back(std::move(v));
    pivots_.push_back(p);
    supports_.push_back(std::move(support));
    combos_.push_back(std::move(merged));
    return std::nullopt;
  }

 private:
  F f_;
  std::size_t rows_, cols_;
  std::vector<Vec<F>> reduced_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> supports_;
  std::vector<std::vector<std::pair<std::size_t, typename F::Element>>> combos_;
};

template <class F>
class Resolver {
 public:
  Resolver(const TruncatedModule<F>& v, ResolutionOptions opt) : v_(v), cat_(v.category()), f_(v.field()), opt_(opt) {
    const int depth = opt_.depth;
    steps_.resize(depth + 1);
    res_.horizon = v.horizon();
    res_.depth = depth;
    res_.steps.resize(depth + 1);
    res_.tor.assign(depth + 1, {});
    res_.tor_reduced.assign(depth + 1, {});
    res_.valid_through.assign(depth + 1, -1);
  }

  Resolution run() {
    const int h = v_.horizon();
    const int depth = opt_.depth;
    for (int t = 0; t <= h; ++t) {
      bool stop_rest = false;
      for (int i = 0; i <= depth; ++i) {
        auto& st = steps_[i];
        if (!st.stopped && (stop_rest || !stage(i, t))) {
          st.stopped = true;
          res_.steps[i].stopped_at = t;
        }
        if (st.stopped) {
          stop_rest = true;
          continue;
        }
        const long long nullity_below =
            i == 0 ? static_cast<long long>(v_.dim(t))
                   : static_cast<long long>(steps_[i - 1].nontop_cols) - static_cast<long long>(steps_[i - 1].nontop_rank);
        res_.tor[i].push_back(nullity_below - static_cast<long long>(st.nontop_rank));
        res_.valid_through[i] = t;
      }
      // Reduced complex, wherever both neighbouring blocks are known.
      for (int i = 0; i <= depth && res_.valid_through[i] == t; ++i) {
        long long value = -1;
        const bool have_i = i == 0 || steps_[i].top_rank >= 0;
        const bool have_next = i + 1 <= depth && res_.valid_through[i + 1] == t && steps_[i + 1].top_rank >= 0;
        if (have_i && have_next) {
          value = static_cast<long long>(steps_[i].top_cols) - (i == 0 ? 0 : steps_[i].top_rank) - steps_[i + 1].top_rank;
          if (value != res_.tor[i][t])
            res_.failures.push_back("H_" + std::to_string(i) + " at degree " + std::to_string(t) +
                                    ": reduced complex gives " + std::to_string(value) + ", syzygies give " +
                                    std::to_string(res_.tor[i][t]));
        }
        res_.tor_reduced[i].push_back(value);
      }
    }
    for (int i = 0; i <= depth; ++i) res_.steps[i].generator_degrees = steps_[i].degrees();
    return std::move(res_);
  }

 private:
  struct Generator {
    int degree;
    Vec<F> dense;      // image, i = 0
    Sparse<F> sparse;  // image, i > 0
    std::vector<Vec<F>> dense_images;  // alpha . image over hom(degree, current degree)
    std::vector<Sparse<F>> sparse_images;
  };

  struct Step {
    std::vector<Generator> gens;
    bool stopped = false;
    bool padded = false;
    // Data at the current degree.
    std::vector<std::size_t> offsets;
    std::size_t dim = 0;          // dim P^i_t
    std::size_t nontop_cols = 0;  // columns from generators of lower degree
    std::size_t nontop_rank = 0;
    std::size_t image_dim = 0;    // rank of the differential, = dim Z^i_t
    std::size_t top_cols = 0;
    long long top_rank = -1;      // rank of the top-by-top block, -1 if not computed

    std::vector<int> degrees() const {
      std::vector<int> d;
      for (const auto& g : gens) d.push_back(g.degree);
      return d;
    }
  };

  std::size_t coordinate(int i, const SparseEntry<F>& e) const { return steps_[i - 1].offsets[e.gen] + e.index; }

  Vec<F> densify(int i, const Sparse<F>& s, std::size_t n) const {
    Vec<F> x(n, f_.zero());
    for (const auto& e : s) {
      auto& slot = x[coordinate(i, e)];
      slot = f_.add(slot, e.coeff);
    }
    return x;
  }

  Sparse<F> sparsify(int i, const Vec<F>& x) const {
    Sparse<F> out;
    const auto& offsets = steps_[i - 1].offsets;
    std::size_t g = 0;
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (f_.is_zero(x[c])) continue;
      while (g + 1 < offsets.size() && offsets[g + 1] <= c) ++g;
      out.push_back({std::uint32_t(g), std::uint32_t(c - offsets[g]), x[c]});
    }
    return out;
  }

  Sparse<F> transport(int i, const GeneratorStep& step, const Sparse<F>& s) const {
    const auto& below = steps_[i - 1];
    Sparse<F> out;
    out.reserve(s.size());
    for (const auto& e : s)
      out.push_back({e.gen, cat_.post_compose_table(step, below.gens[e.gen].degree)[e.index], e.coeff});
    return out;
  }

  // Moves the images of every older generator of step i from degree t - 1 to t.
  void advance(int i, int t) {
    for (auto& g : steps_[i].gens) {
      if (g.degree >= t) continue;
      const auto& tree = cat_.hom_tree(g.degree, t);
      if (i == 0) {
        std::vector<Vec<F>> next(tree.size());
        for (auto idx : cat_.hom_tree_order(g.degree, t)) {
          const auto& node = tree[idx];
          const auto& from = node.step.type == GeneratorStep::Type::Raise ? g.dense_images[node.parent] : next[node.parent];
          next[idx] = mul_vec(v_.action(node.step), from);
        }
        g.dense_images = std::move(next);
      } else {
        std::vector<Sparse<F>> next(tree.size());
        for (auto idx : cat_.hom_tree_order(g.degree, t)) {
          const auto& node = tree[idx];
          const auto& from = node.step.type == GeneratorStep::Type::Raise ? g.sparse_images[node.parent] : next[node.parent];
          next[idx] = transport(i, node.step, from);
        }
        g.sparse_images = std::move(next);
      }
    }
  }

  // Images of a new degree-t generator under C(t, t).
  void seed(int i, int t, Generator& g) {
    const auto& tree = cat_.hom_tree(t, t);
    if (i == 0) {
      g.dense_images.assign(tree.size(), {});
      for (auto idx : cat_.hom_tree_order(t, t)) {
        const auto& node = tree[idx];
        g.dense_images[idx] =
            node.parent == HomTreeNode::kRoot ? g.dense : mul_vec(v_.action(node.step), g.dense_images[node.parent]);
      }
    } else {
      g.sparse_images.assign(tree.size(), {});
      for (auto idx : cat_.hom_tree_order(t, t)) {
        const auto& node = tree[idx];
        g.sparse_images[idx] =
            node.parent == HomTreeNode::kRoot ? g.sparse : transport(i, node.step, g.sparse_images[node.parent]);
      }
    }
  }

  /// Column idx of generator g of step i in the target space of dimension n.
  Vec<F> column(int i, const Generator& g, std::size_t idx, std::size_t n) const {
    return i == 0 ? g.dense_images[idx] : densify(i, g.sparse_images[idx], n);
  }

  /// d_i applied to a vector of P^i_t, given sparsely.
  Vec<F> differential(int i, const Sparse<F>& x, std::size_t n) const {
    Vec<F> out(n, f_.zero());
    const auto& st = steps_[i];
    for (const auto& e : x) {
      auto c = column(i, st.gens[e.gen], e.index, n);
      for (std::size_t r = 0; r < n; ++r)
        if (!f_.is_zero(c[r])) f_.sub_mul(out[r], f_.neg(e.coeff), c[r]);
    }
    return out;
  }

  // Action of an endomorphism generator of degree t on the target space of step i.
  Vec<F> act_target(int i, int t, std::uint32_t k, const Vec<F>& x) const {
    GeneratorStep step{GeneratorStep::Type::End, std::uint32_t(t), k};
    if (i == 0) return mul_vec(v_.action(step), x);
    const auto& below = steps_[i - 1];
    Vec<F> y(x.size(), f_.zero());
    for (std::size_t j = 0; j < below.gens.size(); ++j) {
      const auto& table = cat_.post_compose_table(step, below.gens[j].degree);
      const auto off = below.offsets[j];
      for (std::size_t a = 0; a < table.size(); ++a)
        if (!f_.is_zero(x[off + a])) y[off + table[a]] = x[off + a];
    }
    return y;
  }

  // One resolution step at one degree. Returns false when the size cap is hit.
  bool stage(int i, int t) {
    auto& st = steps_[i];
    const int h = v_.horizon();
    const std::size_t target = i == 0 ? v_.dim(t) : steps_[i - 1].dim;
    std::size_t nontop = 0;
    for (const auto& g : st.gens) nontop += cat_.hom_size(g.degree, t);
    if (nontop > opt_.max_dim || target > opt_.max_dim) return false;
    advance(i, t);
    st.offsets.clear();
    for (std::size_t j = 0, off = 0; j < st.gens.size(); ++j) {
      st.offsets.push_back(off);
      off += cat_.hom_size(st.gens[j].degree, t);
    }
    st.nontop_cols = nontop;
    st.top_cols = 0;
    st.top_rank = -1;

    // dim Z^i_t by rank-nullity on the previous differential.
    const std::size_t dim_z = i == 0 ? target : steps_[i - 1].dim - steps_[i - 1].image_dim;
    EchelonSpace<F> span(f_, target);
    for (const auto& g : st.gens) {
      const std::size_t count = i == 0 ? g.dense_images.size() : g.sparse_images.size();
      for (std::size_t idx = 0; idx < count && span.dim() < dim_z; ++idx) span.insert(column(i, g, idx, target));
    }
    st.nontop_rank = span.dim();
    st.dim = nontop;
    st.image_dim = span.dim();
    if (i == opt_.depth && t == h) return true;

    // Greedy choice of new generators, closing each one's C(t,t)-orbit.
    std::vector<Vec<F>> fresh;
    const auto ne = static_cast<std::uint32_t>(cat_.end_generators(t).size());
    auto consider = [&](const Vec<F>& z) {
      if (!span.insert(z)) return;
      fresh.push_back(z);
      std::deque<Vec<F>> queue{z};
      while (!queue.empty() && span.dim() < dim_z) {
        auto x = std::move(queue.front());
        queue.pop_front();
        for (std::uint32_t k = 0; k < ne; ++k) {
          auto y = act_target(i, t, k, x);
          if (span.insert(y)) queue.push_back(std::move(y));
        }
      }
    };
    if (span.dim() < dim_z) {
      if (i == 0) {
        for (std::size_t q = 0; q < target && span.dim() < dim_z; ++q) {
          Vec<F> e(target, f_.zero());
          e[q] = f_.one();
          consider(e);
        }
      } else {
        // Kernel vectors of d_{i-1} at degree t, produced lazily.
        const auto& below = steps_[i - 1];
        const std::size_t rows = i == 1 ? v_.dim(t) : steps_[i - 2].dim;
        KernelSweep<F> sweep(f_, rows, target);
        std::size_t col = 0;
        for (const auto& g : below.gens) {
          const std::size_t count = i == 1 ? g.dense_images.size() : g.sparse_images.size();
          for (std::size_t idx = 0; idx < count && span.dim() < dim_z; ++idx, ++col)
            if (auto z = sweep.feed(col, column(i - 1, g, idx, rows))) consider(*z);
          if (span.dim() >= dim_z) break;
        }
      }
    }
    if (span.dim() != dim_z)
      res_.failures.push_back("step " + std::to_string(i) + " degree " + std::to_string(t) +
                              ": generators do not span the syzygies");
    if (opt_.pad && !st.padded && !fresh.empty()) {
      fresh.push_back(fresh.front());
      st.padded = true;
    }

    const std::size_t first_new = st.gens.size();
    const std::size_t end_size = cat_.hom_size(t, t);
    for (auto& z : fresh) {
      Generator g;
      g.degree = t;
      if (i == 0)
        g.dense = std::move(z);
      else
        g.sparse = sparsify(i, z);
      seed(i, t, g);
      st.offsets.push_back(st.dim);
      st.dim += end_size;
      st.gens.push_back(std::move(g));
    }
    st.top_cols = fresh.size() * end_size;
    st.image_dim = span.dim();

    if (i > 0) {
      const std::size_t rows = i == 1 ? v_.dim(t) : steps_[i - 2].dim;
      for (std::size_t j = first_new; j < st.gens.size(); ++j)
        if (!is_zero_vec(differential(i - 1, st.gens[j].sparse, rows)))
          res_.failures.push_back("d_" + std::to_string(i - 1) + " d_" + std::to_string(i) + " != 0 at degree " +
                                  std::to_string(t));
      top_block_rank(i, t, first_new);
    }
    res_.steps[i].dims.resize(t + 1, 0);
    res_.steps[i].dims[t] = st.dim;
    return true;
  }

  bool is_zero_vec(const Vec<F>& x) const {
    return std::all_of(x.begin(), x.end(), [&](const auto& e) { return f_.is_zero(e); });
  }

  // Rank of the block of d_i from new generators of step i into the top
  // coordinates of P^{i-1}_t.
  void top_block_rank(int i, int t, std::size_t first_new) {
    auto& st = steps_[i];
    const auto& below = steps_[i - 1];
    const std::size_t top_rows = below.dim - below.nontop_cols;
    if (st.top_cols == 0 || top_rows == 0) {
      st.top_rank = 0;
      return;
    }
    if (st.top_cols > opt_.max_dim || top_rows > opt_.max_dim) return;
    EchelonSpace<F> space(f_, top_rows);
    for (std::size_t j = first_new; j < st.gens.size(); ++j)
      for (const auto& img : st.gens[j].sparse_images) {
        if (space.full()) break;
        Vec<F> x(top_rows, f_.zero());
        for (const auto& e : img) {
          if (below.gens[e.gen].degree != t) continue;
          auto& slot = x[coordinate(i, e) - below.nontop_cols];
          slot = f_.add(slot, e.coeff);
        }
        space.insert(x);
      }
    st.top_rank = static_cast<long long>(space.dim());
  }

  const TruncatedModule<F>& v_;
  const Category& cat_;
  F f_;
  ResolutionOptions opt_;
  std::vector<Step> steps_;
  Resolution res_;
};

}  // namespace detail

template <class F>
Resolution resolve(const TruncatedModule<F>& v, ResolutionOptions opt = {}) {
  return detail::Resolver<F>(v, opt).run();
}

// ---------------------------------------------------------------- reports

struct HomologyReport {
  int horizon = -1;
  int depth = 0;
  std::vector<std::vector<long long>> tor;  // tor[i][t] for t <= valid_through[i]
  std::vector<int> valid_through;
  std::vector<int> hd;  // top degree with H_i != 0 on its window, -1 if none
  int gd = -1;
  int reg = -1;         // max of hd_i - i over i <= depth: a lower bound for the regularity
  bool complete = true;  // every H_i known up to the horizon
  std::vector<std::vector<int>> generator_degrees;
  std::vector<std::string> failures;
};

inline HomologyReport report_from(const Resolution& r) {
  HomologyReport out;
  out.horizon = r.horizon;
  out.depth = r.depth;
  out.tor = r.tor;
  out.valid_through = r.valid_through;
  out.failures = r.failures;
  for (int i = 0; i <= r.depth; ++i) {
    int hd = -1;
    for (int t = 0; t < static_cast<int>(r.tor[i].size()); ++t)
      if (r.tor[i][t] != 0) hd = t;
    out.hd.push_back(hd);
    out.reg = i == 0 ? hd : std::max(out.reg, hd - i);
    if (r.valid_through[i] < r.horizon) out.complete = false;
    out.generator_degrees.push_back(r.steps[i].generator_degrees);
  }
  out.gd = out.hd.empty() ? -1 : out.hd[0];
  return out;
}

template <class F>
HomologyReport tor_groups(const TruncatedModule<F>& v, ResolutionOptions opt = {}) {
  return report_from(resolve(v, opt));
}

// ---------------------------------------------------------------- Hilbert fit

struct HilbertFit {
  std::vector<std::size_t> dims;
  int gd = -1;
  bool found = false;
  int onset = -1;
  std::vector<mpq_class> coefficients;  // constant term first, trailing zeros trimmed
  /// -1 for the zero polynomial.
  int degree() const {
    if (coefficients.size() == 1 && coefficients[0] == 0) return -1;
    return static_cast<int>(coefficients.size()) - 1;
  }
  bool matches = false;  // polynomial reproduces every dim from onset to horizon
  bool degree_within_gd() const { return found && degree() <= gd; }
  std::string reason;    // why no fit was found
};

/// Evaluates sum c_k n^k.
inline mpq_class evaluate(const std::vector<mpq_class>& coeffs, long n) {
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
  return acc;
}

/// Least onset n0 from which the differences of order gd + 1 vanish up to
/// the horizon, with n0 + gd + 1 <= horizon so that at least one difference
/// is checked; the polynomial interpolates dims[n0 .. n0 + gd].
inline HilbertFit hilbert_fit(const std::vector<std::size_t>& dims, int gd) {
  HilbertFit fit;
  fit.dims = dims;
  fit.gd = gd;
  const int h = static_cast<int>(dims.size()) - 1;
  const int order = gd + 1;
  if (order > h) {
    fit.reason = "horizon " + std::to_string(h) + " too small for differences of order " + std::to_string(order);
    return fit;
  }
  // diff[m] = order-th forward difference at m, for m + order <= h.
  std::vector<mpz_class> row(dims.begin(), dims.end());
  for (int k = 0; k < order; ++k)
    for (std::size_t m = 0; m + 1 < row.size() - k; ++m) row[m] = row[m + 1] - row[m];
  const int last = h - order;  // differences known at m = 0..last
  int onset = last + 1;
  while (onset > 0 && row[onset - 1] == 0) --onset;
  if (onset > last) {
    fit.reason = "differences of order " + std::to_string(order) + " do not vanish at degree " + std::to_string(last);
    return fit;
  }
  fit.found = true;
  fit.onset = onset;
  // Newton form at onset: H(n) = sum_k Delta^k H(onset) * binom(n - onset, k).
  std::vector<mpq_class> coeffs(1, mpq_class(0));
  std::vector<mpz_class> diffs;
  {
    std::vector<mpz_class> r(dims.begin() + onset, dims.begin() + onset + order);
    for (int k = 0; k < order; ++k) {
      diffs.push_back(r[0]);
      for (std::size_t m = 0; m + 1 < r.size(); ++m) r[m] = r[m + 1] - r[m];
      r.pop_back();
    }
  }
  // basis polynomial binom(n - onset, k) built incrementally.
  std::vector<mpq_class> basis{mpq_class(1)};
  for (int k = 0; k < static_cast<int>(diffs.size()); ++k) {
    if (coeffs.size() < basis.size()) coeffs.resize(basis.size(), mpq_class(0));
    for (std::size_t e = 0; e < basis.size(); ++e) coeffs[e] += mpq_class(diffs[k]) * basis[e];
    // basis <- basis * (n - onset - k) / (k + 1)
    std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
    for (std::size_t e = 0; e < basis.size(); ++e) {
      next[e + 1] += basis[e];
      next[e] -= basis[e] * (onset + k);
    }
    for (auto& c : next) c /= (k + 1);
    basis = std::move(next);
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  fit.coefficients = coeffs;
  fit.matches = true;
  for (int n = onset; n <= h; ++n)
    if (evaluate(coeffs, n) != mpq_class(static_cast<long>(dims[n]))) fit.matches = false;
  return fit;
}

/// "n^2 - n", "1/2*n + 3", "0".
inline std::string polynomial_text(const std::vector<mpq_class>& coeffs) {
  std::string out;
  for (int e = static_cast<int>(coeffs.size()) - 1; e >= 0; --e) {
    mpq_class c = coeffs[e];
    if (c == 0) continue;
    bool negative = c < 0;
    mpq_class a = negative ? mpq_class(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono = e == 0 ? "" : (e == 1 ? "n" : "n^" + std::to_string(e));
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace catrep
