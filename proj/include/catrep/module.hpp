#pragma once

// Truncated C-modules: per-degree dimensions up to a horizon plus the action
// matrices of the stored category generators. Everything else (the action of
// an arbitrary morphism, kernels, quotients, sums) is derived from those.

#include <deque>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "catrep/category.hpp"
#include "catrep/matrix.hpp"

namespace catrep {

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class F>
class TruncatedModule {
 public:
  TruncatedModule(Category cat, F field, std::vector<std::size_t> dims)
      : cat_(std::move(cat)), field_(std::move(field)), dims_(std::move(dims)) {
    const int h = horizon();
    raise_.resize(h > 0 ? h : 0);
    end_.resize(dims_.size());
    for (int t = 0; t <= h; ++t) {
      const auto ne = cat_.end_generators(t).size();
      end_[t].assign(ne, Mat<F>::identity(field_, dims_[t]));
      if (t < h) raise_[t].assign(cat_.raising_generators(t).size(), Mat<F>(field_, dims_[t + 1], dims_[t]));
    }
  }

  static TruncatedModule zero(Category cat, F field, int horizon) {
    return TruncatedModule(std::move(cat), std::move(field), std::vector<std::size_t>(horizon + 1, 0));
  }

  const Category& category() const { return cat_; }
  const F& field() const { return field_; }
  int horizon() const { return static_cast<int>(dims_.size()) - 1; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(int t) const {
    if (t < 0) return 0;
    if (t > horizon()) throw ModuleError("degree " + std::to_string(t) + " above horizon " + std::to_string(horizon()));
    return dims_[t];
  }
  bool is_zero() const {
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
  }

  /// Upper bound on the generating degree known from construction, if any.
  std::optional<int> gd_bound() const { return gd_bound_; }
  void set_gd_bound(std::optional<int> b) { gd_bound_ = b; }

  const Mat<F>& action(const GeneratorStep& step) const {
    return step.type == GeneratorStep::Type::Raise ? raise_.at(step.degree).at(step.index)
                                                   : end_.at(step.degree).at(step.index);
  }
  void set_action(const GeneratorStep& step, Mat<F> m) {
    auto& slot = step.type == GeneratorStep::Type::Raise ? raise_.at(step.degree).at(step.index)
                                                         : end_.at(step.degree).at(step.index);
    if (m.rows() != slot.rows() || m.cols() != slot.cols()) throw ModuleError("action matrix has the wrong shape");
    slot = std::move(m);
  }

  /// Every stored generator step, degree by degree.
  std::vector<GeneratorStep> steps() const {
    std::vector<GeneratorStep> out;
    for (int t = 0; t <= horizon(); ++t) {
      for (std::uint32_t k = 0; k < end_[t].size(); ++k) out.push_back({GeneratorStep::Type::End, std::uint32_t(t), k});
      if (t < horizon())
        for (std::uint32_t k = 0; k < raise_[t].size(); ++k)
          out.push_back({GeneratorStep::Type::Raise, std::uint32_t(t), k});
    }
    return out;
  }

  friend bool operator==(const TruncatedModule& a, const TruncatedModule& b) {
    return a.cat_ == b.cat_ && a.dims_ == b.dims_ && a.raise_ == b.raise_ && a.end_ == b.end_;
  }

 private:
  Category cat_;
  F field_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Mat<F>>> raise_;
  std::vector<std::vector<Mat<F>>> end_;
  std::optional<int> gd_bound_;
};

template <class F>
using ModulePtr = std::shared_ptr<const TruncatedModule<F>>;

template <class F>
ModulePtr<F> share(TruncatedModule<F> m) {
  return std::make_shared<const TruncatedModule<F>>(std::move(m));
}

inline std::uint32_t step_target(const GeneratorStep& s) {
  return s.type == GeneratorStep::Type::Raise ? s.degree + 1 : s.degree;
}

// ---------------------------------------------------------------- actions

/// Matrix of alpha: V_r -> V_s, composed from the canonical word of alpha.
template <class F>
Mat<F> act(const TruncatedModule<F>& v, const Morphism& alpha) {
  if (static_cast<int>(alpha.target) > v.horizon())
    throw ModuleError("act: target degree " + std::to_string(alpha.target) + " above horizon");
  Mat<F> m = Mat<F>::identity(v.field(), v.dim(alpha.source));
  for (const auto& step : v.category().word(alpha)) m = multiply(v.action(step), m);
  return m;
}

template <class F>
Vec<F> act(const TruncatedModule<F>& v, const Morphism& alpha, Vec<F> x) {
  if (static_cast<int>(alpha.target) > v.horizon())
    throw ModuleError("act: target degree " + std::to_string(alpha.target) + " above horizon");
  for (const auto& step : v.category().word(alpha)) x = mul_vec(v.action(step), x);
  return x;
}

/// Same matrix, composed along the breadth-first spanning tree of hom sets
/// instead of the canonical word. Used to test factorization independence.
template <class F>
Mat<F> act_along_tree(const TruncatedModule<F>& v, const Morphism& alpha) {
  const auto& cat = v.category();
  std::vector<GeneratorStep> path;
  std::uint32_t degree = alpha.target;
  std::uint32_t index = static_cast<std::uint32_t>(cat.index_of(alpha));
  while (true) {
    const auto& node = cat.hom_tree(alpha.source, degree)[index];
    if (node.parent == HomTreeNode::kRoot) break;
    path.push_back(node.step);
    index = node.parent;
    degree = node.step.degree;
  }
  Mat<F> m = Mat<F>::identity(v.field(), v.dim(alpha.source));
  for (auto it = path.rbegin(); it != path.rend(); ++it) m = multiply(v.action(*it), m);
  return m;
}

/// Images alpha . x for every alpha in hom(r, t), in hom order, given x in V_r.
/// One matrix-vector product per morphism along the spanning tree.
template <class F>
std::vector<Vec<F>> orbit_images(const TruncatedModule<F>& v, std::uint32_t r, std::uint32_t t, const Vec<F>& x,
                                 const std::vector<Vec<F>>* below = nullptr) {
  const auto& cat = v.category();
  std::vector<Vec<F>> prev_storage;
  const std::vector<Vec<F>>* prev = below;
  if (t > r && prev == nullptr) {
    prev_storage = orbit_images(v, r, t - 1, x);
    prev = &prev_storage;
  }
  const auto& tree = cat.hom_tree(r, t);
  std::vector<Vec<F>> out(tree.size());
  for (auto idx : cat.hom_tree_order(r, t)) {
    const auto& node = tree[idx];
    if (node.parent == HomTreeNode::kRoot)
      out[idx] = x;
    else if (node.step.type == GeneratorStep::Type::Raise)
      out[idx] = mul_vec(v.action(node.step), (*prev)[node.parent]);
    else
      out[idx] = mul_vec(v.action(node.step), out[node.parent]);
  }
  return out;
}

/// Matrices act(alpha) * x for every alpha in hom(r, t), in hom order.
template <class F>
std::vector<Mat<F>> orbit_matrices(const TruncatedModule<F>& v, std::uint32_t r, std::uint32_t t, const Mat<F>& x) {
  const auto& cat = v.category();
  std::vector<Mat<F>> prev;
  if (t > r) prev = orbit_matrices(v, r, t - 1, x);
  if (t < r) return {};
  const auto& tree = cat.hom_tree(r, t);
  std::vector<Mat<F>> out(tree.size());
  for (auto idx : cat.hom_tree_order(r, t)) {
    const auto& node = tree[idx];
    if (node.parent == HomTreeNode::kRoot)
      out[idx] = x;
    else if (node.step.type == GeneratorStep::Type::Raise)
      out[idx] = multiply(v.action(node.step), prev[node.parent]);
    else
      out[idx] = multiply(v.action(node.step), out[node.parent]);
  }
  return out;
}

// ---------------------------------------------------------------- builders

/// Free module on generators of the given degrees, basis (generator, morphism)
/// ordered by generator then canonical hom order.
template <class F>
TruncatedModule<F> free_module(const Category& cat, const F& field, const std::vector<int>& degrees, int horizon) {
  std::vector<std::size_t> dims(horizon + 1, 0);
  for (int t = 0; t <= horizon; ++t)
    for (int d : degrees)
      if (d <= t) dims[t] += cat.hom_size(d, t);
  TruncatedModule<F> m(cat, field, dims);
  for (const auto& step : m.steps()) {
    const int src = step.degree, dst = step_target(step);
    Mat<F> a(field, dims[dst], dims[src]);
    std::size_t off_src = 0, off_dst = 0;
    for (int d : degrees) {
      if (d <= src) {
        const auto& table = cat.post_compose_table(step, d);
        for (std::size_t x = 0; x < table.size(); ++x) a(off_dst + table[x], off_src + x) = field.one();
      }
      if (d <= src) off_src += cat.hom_size(d, src);
      if (d <= dst) off_dst += cat.hom_size(d, dst);
    }
    m.set_action(step, std::move(a));
  }
  m.set_gd_bound(degrees.empty() ? -1 : *std::max_element(degrees.begin(), degrees.end()));
  return m;
}

template <class F>
TruncatedModule<F> free_module(const Category& cat, const F& field, int s, int horizon) {
  return free_module(cat, field, std::vector<int>{s}, horizon);
}

template <class F>
TruncatedModule<F> truncate(const TruncatedModule<F>& v, int horizon) {
  if (horizon > v.horizon()) throw ModuleError("truncate: cannot raise the horizon");
  std::vector<std::size_t> dims(v.dims().begin(), v.dims().begin() + (horizon + 1));
  TruncatedModule<F> out(v.category(), v.field(), dims);
  for (const auto& step : out.steps()) out.set_action(step, v.action(step));
  out.set_gd_bound(v.gd_bound());
  return out;
}

template <class F>
TruncatedModule<F> direct_sum(const TruncatedModule<F>& v, const TruncatedModule<F>& w) {
  if (!(v.category() == w.category())) throw ModuleError("direct_sum: categories differ");
  const int h = std::min(v.horizon(), w.horizon());
  std::vector<std::size_t> dims(h + 1);
  for (int t = 0; t <= h; ++t) dims[t] = v.dim(t) + w.dim(t);
  TruncatedModule<F> out(v.category(), v.field(), dims);
  for (const auto& step : out.steps()) {
    const int s = step.degree, d = step_target(step);
    Mat<F> a(v.field(), dims[d], dims[s]);
    const auto& av = v.action(step);
    const auto& aw = w.action(step);
    for (std::size_t i = 0; i < av.rows(); ++i)
      for (std::size_t j = 0; j < av.cols(); ++j) a(i, j) = av(i, j);
    for (std::size_t i = 0; i < aw.rows(); ++i)
      for (std::size_t j = 0; j < aw.cols(); ++j) a(v.dim(d) + i, v.dim(s) + j) = aw(i, j);
    out.set_action(step, std::move(a));
  }
  if (v.gd_bound() && w.gd_bound()) out.set_gd_bound(std::max(*v.gd_bound(), *w.gd_bound()));
  return out;
}

// ---------------------------------------------------------------- maps

template <class F>
struct ModuleMap {
  ModulePtr<F> domain;
  ModulePtr<F> codomain;
  std::vector<Mat<F>> mats;  // mats[t]: codomain_t x domain_t

  int horizon() const { return static_cast<int>(mats.size()) - 1; }
};

template <class F>
ModuleMap<F> identity_map(const ModulePtr<F>& v) {
  ModuleMap<F> f{v, v, {}};
  for (int t = 0; t <= v->horizon(); ++t) f.mats.push_back(Mat<F>::identity(v->field(), v->dim(t)));
  return f;
}

template <class F>
ModuleMap<F> zero_map(const ModulePtr<F>& v, const ModulePtr<F>& w) {
  ModuleMap<F> f{v, w, {}};
  for (int t = 0; t <= std::min(v->horizon(), w->horizon()); ++t) f.mats.emplace_back(v->field(), w->dim(t), v->dim(t));
  return f;
}

/// g o f on the common horizon.
template <class F>
ModuleMap<F> compose_maps(const ModuleMap<F>& g, const ModuleMap<F>& f) {
  ModuleMap<F> out{f.domain, g.codomain, {}};
  for (int t = 0; t <= std::min(f.horizon(), g.horizon()); ++t) out.mats.push_back(multiply(g.mats[t], f.mats[t]));
  return out;
}

/// First failing naturality square, as a step, or nullopt when f commutes
/// with every stored generator.
template <class F>
std::optional<GeneratorStep> naturality_failure(const ModuleMap<F>& f) {
  const auto& v = *f.domain;
  const auto& w = *f.codomain;
  for (const auto& step : v.steps()) {
    const int s = step.degree, d = step_target(step);
    if (d > f.horizon()) continue;
    if (!(multiply(f.mats[d], v.action(step)) == multiply(w.action(step), f.mats[s]))) return step;
  }
  return std::nullopt;
}

template <class F>
bool is_injective(const ModuleMap<F>& f) {
  for (const auto& m : f.mats)
    if (rank(m) != m.cols()) return false;
  return true;
}

// ---------------------------------------------------------------- submodules

/// Subspaces of an ambient module, one canonical basis per degree up to
/// horizon(). Column k of basis[t] has a 1 in row pivots[t][k] and zeros in
/// the other pivot rows.
template <class F>
struct Submodule {
  ModulePtr<F> ambient;
  std::vector<Mat<F>> basis;
  std::vector<std::vector<std::size_t>> pivots;

  int horizon() const { return static_cast<int>(basis.size()) - 1; }
  std::size_t dim(int t) const { return basis.at(t).cols(); }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& b : basis) d.push_back(b.cols());
    return d;
  }
};

template <class F>
void append_canonical(Submodule<F>& s, const Mat<F>& spanning) {
  auto ech = row_reduce(transpose(spanning));
  Mat<F> b(spanning.field(), spanning.rows(), ech.rank());
  for (std::size_t k = 0; k < ech.rank(); ++k)
    for (std::size_t i = 0; i < spanning.rows(); ++i) b(i, k) = ech.reduced(k, i);
  s.basis.push_back(std::move(b));
  s.pivots.push_back(std::move(ech.pivots));
}

template <class F>
void append_canonical(Submodule<F>& s, const EchelonSpace<F>& space) {
  auto ech = space.rref();
  s.basis.push_back(transpose(ech.reduced));
  s.pivots.push_back(std::move(ech.pivots));
}

template <class F>
Submodule<F> zero_submodule(const ModulePtr<F>& v, int horizon) {
  Submodule<F> s{v, {}, {}};
  for (int t = 0; t <= horizon; ++t) append_canonical(s, Mat<F>(v->field(), v->dim(t), 0));
  return s;
}

template <class F>
Submodule<F> whole_submodule(const ModulePtr<F>& v, int horizon) {
  Submodule<F> s{v, {}, {}};
  for (int t = 0; t <= horizon; ++t) append_canonical(s, Mat<F>::identity(v->field(), v->dim(t)));
  return s;
}

template <class F>
Submodule<F> truncate(const Submodule<F>& s, int horizon) {
  Submodule<F> out{s.ambient, {}, {}};
  for (int t = 0; t <= horizon; ++t) {
    out.basis.push_back(s.basis.at(t));
    out.pivots.push_back(s.pivots.at(t));
  }
  return out;
}

template <class F>
bool same_submodule(const Submodule<F>& a, const Submodule<F>& b, int upto) {
  for (int t = 0; t <= upto; ++t)
    if (!(a.basis.at(t) == b.basis.at(t))) return false;
  return true;
}

template <class F>
bool contains_submodule(const Submodule<F>& big, const Submodule<F>& small, int upto) {
  for (int t = 0; t <= upto; ++t)
    if (rank(hstack(big.basis.at(t), small.basis.at(t))) != big.dim(t)) return false;
  return true;
}

/// Coordinates of the columns of y in the canonical basis; throws when a
/// column lies outside the span.
template <class F>
Mat<F> coordinates(const Submodule<F>& s, int t, const Mat<F>& y) {
  const auto& b = s.basis.at(t);
  const auto& piv = s.pivots.at(t);
  Mat<F> x = select_rows(y, std::span<const std::size_t>(piv));
  if (!(multiply(b, x) == y)) throw ModuleError("vector outside the submodule at degree " + std::to_string(t));
  return x;
}

template <class F>
Submodule<F> kernel_submodule(const ModuleMap<F>& f) {
  Submodule<F> s{f.domain, {}, {}};
  for (const auto& m : f.mats) append_canonical(s, kernel_basis(m));
  return s;
}

template <class F>
Submodule<F> image_submodule(const ModuleMap<F>& f) {
  Submodule<F> s{f.codomain, {}, {}};
  for (const auto& m : f.mats) append_canonical(s, m);
  return s;
}

/// Degreewise preimage f^{-1}(s) on min(f, s) horizons.
template <class F>
Submodule<F> preimage(const ModuleMap<F>& f, const Submodule<F>& s) {
  Submodule<F> out{f.domain, {}, {}};
  const int h = std::min(f.horizon(), s.horizon());
  for (int t = 0; t <= h; ++t) {
    // v with f v in span(B): kernel of (projection onto complement) o f.
    const auto& b = s.basis[t];
    const auto& piv = s.pivots[t];
    std::vector<bool> is_pivot(b.rows(), false);
    for (auto p : piv) is_pivot[p] = true;
    const auto& fm = f.mats[t];
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < b.rows(); ++i)
      if (!is_pivot[i]) rest.push_back(i);
    Mat<F> proj(fm.field(), rest.size(), fm.cols());
    // residue coordinates: y[q] - sum_k y[p_k] b(q, k)
    for (std::size_t r = 0; r < rest.size(); ++r)
      for (std::size_t j = 0; j < fm.cols(); ++j) {
        auto acc = fm(rest[r], j);
        for (std::size_t k = 0; k < piv.size(); ++k)
          if (!fm.field().is_zero(fm(piv[k], j)) && !fm.field().is_zero(b(rest[r], k)))
            fm.field().sub_mul(acc, fm(piv[k], j), b(rest[r], k));
        proj(r, j) = acc;
      }
    append_canonical(out, kernel_basis(proj));
  }
  return out;
}

/// Smallest submodule containing the given vectors (columns of gens[t] at
/// degree t) on degrees 0..horizon.
template <class F>
Submodule<F> generated_submodule(const ModulePtr<F>& v, const std::vector<Mat<F>>& gens, int horizon) {
  const auto& cat = v->category();
  const F& f = v->field();
  Submodule<F> s{v, {}, {}};
  for (int t = 0; t <= horizon; ++t) {
    EchelonSpace<F> space(f, v->dim(t));
    std::deque<Vec<F>> queue;
    auto push = [&](const Vec<F>& x) {
      if (space.insert(x)) queue.push_back(x);
    };
    if (t > 0)
      for (std::uint32_t k = 0; k < cat.raising_generators(t - 1).size(); ++k) {
        const auto& a = v->action({GeneratorStep::Type::Raise, std::uint32_t(t - 1), k});
        const auto& prev = s.basis[t - 1];
        for (std::size_t j = 0; j < prev.cols(); ++j) push(mul_vec(a, prev.column(j)));
      }
    if (t < static_cast<int>(gens.size()))
      for (std::size_t j = 0; j < gens[t].cols(); ++j) push(gens[t].column(j));
    const auto ne = cat.end_generators(t).size();
    while (!queue.empty() && !space.full()) {
      auto x = std::move(queue.front());
      queue.pop_front();
      for (std::uint32_t k = 0; k < ne; ++k) push(mul_vec(v->action({GeneratorStep::Type::End, std::uint32_t(t), k}), x));
    }
    append_canonical(s, space);
  }
  return s;
}

/// (mV)_t: the span of all positive-degree morphisms applied to V, which is
/// the C(t,t)-closure of the raising images of V_{t-1}.
template <class F>
EchelonSpace<F> decomposable_space(const TruncatedModule<F>& v, int t) {
  const auto& cat = v.category();
  EchelonSpace<F> space(v.field(), v.dim(t));
  if (t == 0) return space;
  std::deque<Vec<F>> queue;
  auto push = [&](const Vec<F>& x) {
    if (space.insert(x)) queue.push_back(x);
  };
  for (std::uint32_t k = 0; k < cat.raising_generators(t - 1).size() && !space.full(); ++k) {
    const auto& a = v.action({GeneratorStep::Type::Raise, std::uint32_t(t - 1), k});
    for (std::size_t j = 0; j < a.cols() && !space.full(); ++j) push(a.column(j));
  }
  const auto ne = cat.end_generators(t).size();
  while (!queue.empty() && !space.full()) {
    auto x = std::move(queue.front());
    queue.pop_front();
    for (std::uint32_t k = 0; k < ne; ++k) push(mul_vec(v.action({GeneratorStep::Type::End, std::uint32_t(t), k}), x));
  }
  return space;
}

/// Largest degree t <= horizon with V_t != (mV)_t, or -1.
template <class F>
int visible_generating_degree(const TruncatedModule<F>& v) {
  int gd = -1;
  for (int t = 0; t <= v.horizon(); ++t)
    if (decomposable_space(v, t).dim() < v.dim(t)) gd = t;
  return gd;
}

/// The submodule realized as a module, with its inclusion map.
template <class F>
std::pair<ModulePtr<F>, ModuleMap<F>> realize(const Submodule<F>& s) {
  const auto& v = *s.ambient;
  TruncatedModule<F> m(v.category(), v.field(), s.dims());
  for (const auto& step : m.steps()) {
    const int src = step.degree, dst = step_target(step);
    m.set_action(step, coordinates(s, dst, multiply(v.action(step), s.basis[src])));
  }
  auto mp = share(std::move(m));
  ModuleMap<F> incl{mp, s.ambient, s.basis};
  return {mp, incl};
}

template <class F>
std::pair<ModulePtr<F>, ModuleMap<F>> kernel_of_map(const ModuleMap<F>& f) {
  return realize(kernel_submodule(f));
}

template <class F>
std::pair<ModulePtr<F>, ModuleMap<F>> image_of_map(const ModuleMap<F>& f) {
  return realize(image_submodule(f));
}

/// V / S on the horizon of S. The quotient basis is the standard basis
/// vectors outside the pivot rows of S.
template <class F>
std::pair<ModulePtr<F>, ModuleMap<F>> quotient(const Submodule<F>& s) {
  const auto& v = *s.ambient;
  const F& f = v.field();
  const int h = s.horizon();
  std::vector<Mat<F>> proj(h + 1);
  std::vector<std::vector<std::size_t>> rest(h + 1);
  std::vector<std::size_t> dims(h + 1);
  for (int t = 0; t <= h; ++t) {
    const auto& b = s.basis[t];
    std::vector<bool> is_pivot(b.rows(), false);
    for (auto p : s.pivots[t]) is_pivot[p] = true;
    for (std::size_t i = 0; i < b.rows(); ++i)
      if (!is_pivot[i]) rest[t].push_back(i);
    dims[t] = rest[t].size();
    Mat<F> p(f, dims[t], b.rows());
    for (std::size_t r = 0; r < rest[t].size(); ++r) {
      p(r, rest[t][r]) = f.one();
      for (std::size_t k = 0; k < s.pivots[t].size(); ++k) p(r, s.pivots[t][k]) = f.neg(b(rest[t][r], k));
    }
    proj[t] = std::move(p);
  }
  TruncatedModule<F> q(v.category(), f, dims);
  for (const auto& step : q.steps()) {
    const int src = step.degree, dst = step_target(step);
    const auto& a = v.action(step);
    if (!multiply(proj[dst], multiply(a, s.basis[src])).is_zero())
      throw ModuleError("quotient: subspace is not a submodule at degree " + std::to_string(src));
    q.set_action(step, multiply(proj[dst], select_columns(a, std::span<const std::size_t>(rest[src]))));
  }
  q.set_gd_bound(v.gd_bound());
  auto qp = share(std::move(q));
  return {qp, ModuleMap<F>{s.ambient, qp, std::move(proj)}};
}

template <class F>
std::pair<ModulePtr<F>, ModuleMap<F>> quotient_by(const ModuleMap<F>& incl) {
  if (!is_injective(incl)) throw ModuleError("quotient_by: map is not injective");
  return quotient(image_submodule(incl));
}

// ---------------------------------------------------------------- checks

/// Samples composable pairs and compares act(b o a) with act(b) act(a), and
/// the word-based action with the spanning-tree action. Returns a witness
/// description on failure.
template <class F>
std::optional<std::string> functoriality_failure(const TruncatedModule<F>& v, std::mt19937_64& rng, int samples) {
  const auto& cat = v.category();
  const int h = v.horizon();
  if (h < 0) return std::nullopt;
  for (int i = 0; i < samples; ++i) {
    std::uint32_t r = rng() % (h + 1);
    std::uint32_t s = r + rng() % (h - r + 1);
    std::uint32_t t = s + rng() % (h - s + 1);
    const auto& ha = cat.hom(r, s);
    const auto& hb = cat.hom(s, t);
    const auto& a = ha[rng() % ha.size()];
    const auto& b = hb[rng() % hb.size()];
    if (!(act(v, cat.compose(b, a)) == multiply(act(v, b), act(v, a))))
      return "act(b o a) != act(b) act(a) for a = " + encode(a, cat) + ", b = " + encode(b, cat);
    if (!(act(v, a) == act_along_tree(v, a))) return "two factorizations of " + encode(a, cat) + " disagree";
  }
  for (int t = 0; t <= h; ++t)
    if (!(act(v, cat.identity(t)) == Mat<F>::identity(v.field(), v.dim(t))))
      return "identity does not act as the identity at degree " + std::to_string(t);
  return std::nullopt;
}

}  // namespace catrep
