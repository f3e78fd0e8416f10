#pragma once

// Combinatorial kernels for FI, OI, FI_G and OI_G.
//
// Objects are the integers s >= 0 standing for [s] = {1, ..., s}. A morphism
// r -> s is an injection [r] -> [s] (strictly increasing for OI kinds), plus a
// label in G for each source point in the decorated kinds. Composition of
// decorated morphisms follows
//
//   (f2, g2) o (f1, g1) = (f2 o f1, i -> g2(f1(i)) * g1(i)).
//
// The degree-one self-embedding and the witnesses of mu are fixed as follows:
//   OI, OI_G: embed(f)(1) = 1, embed(f)(i + 1) = f(i) + 1, new label identity;
//             mu_witness(s) = (i -> i + 1).
//   FI, FI_G: embed(f) = f extended by r + 1 -> s + 1, new label identity;
//             mu_witness(s) = standard inclusion [s] -> [s + 1].

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace catrep {

class CategoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite group given either as Z/m or by an explicit multiplication table.
class Group {
 public:
  static Group cyclic(std::uint32_t order);
  /// table[a][b] = a * b. Group axioms are checked.
  static Group from_table(std::vector<std::vector<std::uint32_t>> table);
  /// "Z/m", "cyclic:m" or "table:r0;r1;..." with space separated rows.
  static Group parse(std::string_view text);

  std::uint32_t order() const { return order_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const;
  bool is_cyclic_spec() const { return table_.empty(); }

  /// A generating set, chosen greedily in element order.
  const std::vector<std::uint32_t>& generators() const { return generators_; }
  /// Indices into generators() in application order: left-multiplying the
  /// identity by them in turn yields g.
  const std::vector<std::uint32_t>& word(std::uint32_t g) const { return words_.at(g); }

  std::string spec() const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  Group() = default;
  void finish();

  std::uint32_t order_ = 1;
  std::uint32_t identity_ = 0;
  std::vector<std::vector<std::uint32_t>> table_;  // empty for cyclic
  std::vector<std::uint32_t> generators_;
  std::vector<std::vector<std::uint32_t>> words_;
};

enum class Kind { FI, OI, FI_G, OI_G };

std::string kind_name(Kind kind);
Kind parse_kind(std::string_view text);

struct Morphism {
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  std::vector<std::uint32_t> images;  // 1-based values in [1, target]
  std::vector<std::uint32_t> labels;  // empty unless decorated

  auto operator<=>(const Morphism&) const = default;
};

/// One stored generator of the category: either a degree-raising morphism
/// degree -> degree + 1 or an endomorphism of degree.
struct GeneratorStep {
  enum class Type : std::uint8_t { Raise, End };
  Type type = Type::Raise;
  std::uint32_t degree = 0;
  std::uint32_t index = 0;

  auto operator<=>(const GeneratorStep&) const = default;
};

/// Spanning-tree entry for hom(r, s): the morphism equals
/// generator(step) o hom(r, step.degree)[parent]. The root is the identity
/// (r == s) and has parent == kRoot.
struct HomTreeNode {
  static constexpr std::uint32_t kRoot = 0xffffffffu;
  GeneratorStep step;
  std::uint32_t parent = kRoot;
};

class Category {
 public:
  explicit Category(Kind kind, std::optional<Group> group = std::nullopt, std::string provenance = {});

  Kind kind() const { return kind_; }
  bool decorated() const { return kind_ == Kind::FI_G || kind_ == Kind::OI_G; }
  bool order_preserving() const { return kind_ == Kind::OI || kind_ == Kind::OI_G; }
  const Group* group() const { return group_ ? &*group_ : nullptr; }
  const std::string& provenance() const { return provenance_; }
  std::string name() const { return kind_name(kind_); }
  std::uint32_t label_count() const { return group_ ? group_->order() : 1; }

  /// Every morphism r -> s exactly once, lexicographic on images then labels.
  const std::vector<Morphism>& hom(std::uint32_t r, std::uint32_t s) const;
  std::size_t hom_size(std::uint32_t r, std::uint32_t s) const;
  std::size_t index_of(const Morphism& m) const;

  bool valid(const Morphism& m) const;
  Morphism identity(std::uint32_t s) const;
  Morphism compose(const Morphism& beta, const Morphism& alpha) const;
  Morphism embed(const Morphism& alpha) const;
  Morphism mu_witness(std::uint32_t s) const;
  /// (beta, gamma) with gamma o beta = alpha, gamma: s-1 -> s an order-preserving
  /// map skipping the least value missed by alpha, labels carried by beta.
  std::pair<Morphism, Morphism> factor_through_predecessor(const Morphism& alpha) const;

  const std::vector<Morphism>& end_generators(std::uint32_t s) const;
  const std::vector<Morphism>& raising_generators(std::uint32_t r) const;
  const Morphism& generator(const GeneratorStep& step) const;
  /// Generators whose composition (first element applied first) is alpha.
  std::vector<GeneratorStep> word(const Morphism& alpha) const;
  /// For each basis morphism of hom(s, step.degree), the index in
  /// hom(s, target of step) of generator o morphism.
  const std::vector<std::uint32_t>& post_compose_table(const GeneratorStep& step, std::uint32_t s) const;
  /// Entries indexed like hom(r, s); parents come earlier in breadth-first order().
  const std::vector<HomTreeNode>& hom_tree(std::uint32_t r, std::uint32_t s) const;
  /// Indices of hom(r, s) such that every parent precedes its children.
  const std::vector<std::uint32_t>& hom_tree_order(std::uint32_t r, std::uint32_t s) const;

  friend bool operator==(const Category& a, const Category& b) {
    return a.kind_ == b.kind_ && a.group_ == b.group_;
  }

 private:
  struct Cache;

  void check_valid(const Morphism& m, const char* what) const;
  std::vector<Morphism> enumerate(std::uint32_t r, std::uint32_t s) const;
  std::vector<GeneratorStep> permutation_word(const std::vector<std::uint32_t>& perm) const;
  std::vector<GeneratorStep> label_word(std::uint32_t degree, std::uint32_t slot, std::uint32_t element) const;

  Kind kind_;
  std::optional<Group> group_;
  std::string provenance_;
  std::shared_ptr<Cache> cache_;
};

/// "r->s:[i1,...,ir](g1,...,gr)"; labels omitted for FI and OI.
std::string encode(const Morphism& m, const Category& cat);
Morphism parse_morphism(std::string_view text, const Category& cat);

}  // namespace catrep
