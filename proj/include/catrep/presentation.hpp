#pragma once

// Finite presentations and their text format:
//
//   catrep-presentation 1
//   category oi
//   group Z/2            (FI_G and OI_G only)
//   field fp:101         (optional)
//   horizon 6            (optional)
//   gen a deg 1
//   rel 2: 1*1->2:[2]@a + -3/2*1->2:[1]@a
//
// Blank lines and lines starting with '#' are ignored. Coefficients are kept
// as rationals and mapped into the working field when a module is built.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catrep/category.hpp"
#include "catrep/field.hpp"
#include "catrep/module.hpp"

namespace catrep {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct PresentationGenerator {
  std::string name;
  int degree = 0;
};

struct PresentationTerm {
  mpq_class coefficient;
  Morphism morphism;
  std::size_t generator = 0;
};

struct PresentationRelation {
  int degree = 0;
  std::vector<PresentationTerm> terms;
};

struct Presentation {
  Category category{Kind::OI};
  std::optional<FieldSpec> field;
  std::optional<int> horizon;
  std::vector<PresentationGenerator> generators;
  std::vector<PresentationRelation> relations;

  int max_generator_degree() const;
};

/// Header values that replace those in the file (command-line flags).
struct PresentationOverrides {
  std::optional<Kind> kind;
  std::optional<std::string> group;
  std::optional<FieldSpec> field;
  std::optional<int> horizon;
};

Presentation parse_presentation(std::string_view text, const PresentationOverrides& overrides = {});
Presentation read_presentation(const std::string& path, const PresentationOverrides& overrides = {});

/// Canonical text: like terms merged, zero terms dropped, terms sorted by
/// generator then hom order, relations kept in input order.
std::string write_presentation(const Presentation& p);
Presentation normalized(const Presentation& p);

/// Free presentation of M(s_1) + ... + M(s_k).
Presentation free_presentation(const Category& cat, const std::vector<int>& degrees);

template <class F>
struct PresentedModule {
  ModulePtr<F> module;
  ModulePtr<F> cover;
  ModuleMap<F> projection;  // cover -> module
};

/// Cokernel of the relations, computed degreewise up to horizon.
template <class F>
PresentedModule<F> from_presentation(const Presentation& p, const F& field, int horizon) {
  const auto& cat = p.category;
  std::vector<int> degrees;
  for (const auto& g : p.generators) degrees.push_back(g.degree);
  auto cover = share(free_module(cat, field, degrees, horizon));

  // offset[t][j]: first coordinate of generator j inside cover_t.
  std::vector<std::vector<std::size_t>> offset(horizon + 1, std::vector<std::size_t>(degrees.size(), 0));
  for (int t = 0; t <= horizon; ++t) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      offset[t][j] = off;
      if (degrees[j] <= t) off += cat.hom_size(degrees[j], t);
    }
  }

  // Images alpha . r of every relation, as sparse (generator, hom index, coefficient) lists.
  struct Entry {
    std::size_t gen;
    std::uint32_t index;
    typename F::Element coeff;
  };
  using Sparse = std::vector<Entry>;
  std::vector<std::vector<Sparse>> current(p.relations.size());

  Submodule<F> rel{cover, {}, {}};
  for (int t = 0; t <= horizon; ++t) {
    EchelonSpace<F> space(field, cover->dim(t));
    for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
      const auto& r = p.relations[ri];
      if (r.degree > t) continue;
      std::vector<Sparse> images;
      if (r.degree == t) {
        images.assign(cat.hom_size(t, t), {});
        Sparse base;
        for (const auto& term : r.terms) {
          auto c = field.from_rational(term.coefficient);
          if (!field.is_zero(c)) base.push_back({term.generator, std::uint32_t(cat.index_of(term.morphism)), c});
        }
        const auto& tree = cat.hom_tree(t, t);
        for (auto idx : cat.hom_tree_order(t, t)) {
          const auto& node = tree[idx];
          if (node.parent == HomTreeNode::kRoot) {
            images[idx] = base;
            continue;
          }
          Sparse moved;
          for (const auto& e : images[node.parent])
            moved.push_back({e.gen, cat.post_compose_table(node.step, degrees[e.gen])[e.index], e.coeff});
          images[idx] = std::move(moved);
        }
      } else {
        const auto& tree = cat.hom_tree(r.degree, t);
        images.assign(tree.size(), {});
        for (auto idx : cat.hom_tree_order(r.degree, t)) {
          const auto& node = tree[idx];
          const auto& from = node.step.type == GeneratorStep::Type::Raise ? current[ri][node.parent] : images[node.parent];
          Sparse moved;
          for (const auto& e : from)
            moved.push_back({e.gen, cat.post_compose_table(node.step, degrees[e.gen])[e.index], e.coeff});
          images[idx] = std::move(moved);
        }
      }
      for (const auto& img : images) {
        if (space.full()) break;
        Vec<F> x(cover->dim(t), field.zero());
        for (const auto& e : img) {
          auto& slot = x[offset[t][e.gen] + e.index];
          slot = field.add(slot, e.coeff);
        }
        space.insert(x);
      }
      current[ri] = std::move(images);
    }
    append_canonical(rel, space);
  }
  auto [module, proj] = quotient(rel);
  auto m = std::const_pointer_cast<TruncatedModule<F>>(module);
  m->set_gd_bound(p.generators.empty() ? -1 : std::min(horizon, p.max_generator_degree()));
  proj.codomain = module;
  return {module, cover, proj};
}

}  // namespace catrep
