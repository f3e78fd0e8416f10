#include "catrep/category.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace catrep {

// ---------------------------------------------------------------- Group

Group Group::cyclic(std::uint32_t order) {
  if (order == 0) throw CategoryError("cyclic group order must be positive");
  Group g;
  g.order_ = order;
  g.identity_ = 0;
  g.finish();
  return g;
}

Group Group::from_table(std::vector<std::vector<std::uint32_t>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw CategoryError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw CategoryError("group table must be square");
    for (auto x : row)
      if (x >= n) throw CategoryError("group table entry out of range");
  }
  std::optional<std::uint32_t> identity;
  for (std::uint32_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw CategoryError("group table has no identity element");
  for (std::uint32_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::uint32_t b = 0; b < n; ++b) has_inverse |= table[a][b] == *identity;
    if (!has_inverse) throw CategoryError("group table: element " + std::to_string(a) + " has no inverse");
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw CategoryError("group table is not associative");
  }
  Group g;
  g.order_ = static_cast<std::uint32_t>(n);
  g.identity_ = *identity;
  g.table_ = std::move(table);
  g.finish();
  return g;
}

Group Group::parse(std::string_view text) {
  auto parse_uint = [&](std::string_view digits) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw CategoryError("malformed group spec '" + std::string(text) + "'");
    return v;
  };
  if (text.starts_with("Z/")) return cyclic(parse_uint(text.substr(2)));
  if (text.starts_with("cyclic:")) return cyclic(parse_uint(text.substr(7)));
  if (text.starts_with("table:")) {
    std::vector<std::vector<std::uint32_t>> table;
    std::stringstream rows{std::string(text.substr(6))};
    std::string row;
    while (std::getline(rows, row, ';')) {
      std::stringstream cells(row);
      std::vector<std::uint32_t> r;
      std::string cell;
      while (cells >> cell) r.push_back(parse_uint(cell));
      table.push_back(std::move(r));
    }
    return from_table(std::move(table));
  }
  throw CategoryError("group spec must be Z/m, cyclic:m or table:...; got '" + std::string(text) + "'");
}

std::uint32_t Group::multiply(std::uint32_t a, std::uint32_t b) const {
  if (table_.empty()) return (a + b) % order_;
  return table_[a][b];
}

std::uint32_t Group::inverse(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order_; ++b)
    if (multiply(a, b) == identity_) return b;
  throw CategoryError("element without inverse");
}

void Group::finish() {
  // Greedy generators: add the first element outside the subgroup generated so far.
  std::vector<bool> reached(order_, false);
  reached[identity_] = true;
  auto close = [&] {
    std::deque<std::uint32_t> queue;
    for (std::uint32_t x = 0; x < order_; ++x)
      if (reached[x]) queue.push_back(x);
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto g : generators_) {
        auto y = multiply(g, x);
        if (!reached[y]) {
          reached[y] = true;
          queue.push_back(y);
        }
      }
    }
  };
  for (std::uint32_t x = 0; x < order_; ++x) {
    if (reached[x]) continue;
    generators_.push_back(x);
    close();
  }
  // Shortest words by breadth-first search over left multiplication.
  words_.assign(order_, {});
  std::vector<bool> seen(order_, false);
  seen[identity_] = true;
  std::deque<std::uint32_t> queue{identity_};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (std::uint32_t k = 0; k < generators_.size(); ++k) {
      auto y = multiply(generators_[k], x);
      if (seen[y]) continue;
      seen[y] = true;
      words_[y] = words_[x];
      words_[y].push_back(k);
      queue.push_back(y);
    }
  }
}

std::string Group::spec() const {
  if (table_.empty()) return "Z/" + std::to_string(order_);
  std::string out = "table:";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < table_[i].size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(table_[i][j]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Kind

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::FI: return "fi";
    case Kind::OI: return "oi";
    case Kind::FI_G: return "fi_g";
    case Kind::OI_G: return "oi_g";
  }
  return "?";
}

Kind parse_kind(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "fi") return Kind::FI;
  if (t == "oi") return Kind::OI;
  if (t == "fi_g" || t == "fig") return Kind::FI_G;
  if (t == "oi_g" || t == "oig") return Kind::OI_G;
  throw CategoryError("unknown category kind '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- Category

struct Category::Cache {
  std::mutex mutex;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const std::vector<Morphism>>> homs;
  std::map<std::uint32_t, std::shared_ptr<const std::vector<Morphism>>> ends;
  std::map<std::uint32_t, std::shared_ptr<const std::vector<Morphism>>> raises;
  std::map<std::pair<GeneratorStep, std::uint32_t>, std::shared_ptr<const std::vector<std::uint32_t>>> tables;
  struct Tree {
    std::vector<HomTreeNode> nodes;
    std::vector<std::uint32_t> order;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Tree>> trees;
};

Category::Category(Kind kind, std::optional<Group> group, std::string provenance)
    : kind_(kind), group_(std::move(group)), provenance_(std::move(provenance)),
      cache_(std::make_shared<Cache>()) {
  bool needs_group = kind == Kind::FI_G || kind == Kind::OI_G;
  if (needs_group && !group_) throw CategoryError(kind_name(kind) + " requires a group");
  if (!needs_group && group_) throw CategoryError(kind_name(kind) + " does not carry a group");
}

std::vector<Morphism> Category::enumerate(std::uint32_t r, std::uint32_t s) const {
  std::vector<Morphism> out;
  if (r > s) return out;
  std::vector<std::vector<std::uint32_t>> image_lists;
  std::vector<std::uint32_t> current;
  std::vector<bool> used(s + 1, false);
  // Lexicographic enumeration of injective (or increasing) sequences.
  auto rec = [&](auto&& self) -> void {
    if (current.size() == r) {
      image_lists.push_back(current);
      return;
    }
    std::uint32_t start = order_preserving() && !current.empty() ? current.back() + 1 : 1;
    for (std::uint32_t v = start; v <= s; ++v) {
      if (used[v]) continue;
      used[v] = true;
      current.push_back(v);
      self(self);
      current.pop_back();
      used[v] = false;
    }
  };
  rec(rec);

  std::vector<std::vector<std::uint32_t>> label_lists;
  if (decorated()) {
    std::vector<std::uint32_t> labels(r, 0);
    const auto n = group_->order();
    while (true) {
      label_lists.push_back(labels);
      std::size_t pos = r;
      while (pos > 0 && labels[pos - 1] + 1 == n) labels[--pos] = 0;
      if (pos == 0) break;
      ++labels[pos - 1];
    }
  } else {
    label_lists.emplace_back();
  }
  out.reserve(image_lists.size() * label_lists.size());
  for (const auto& images : image_lists)
    for (const auto& labels : label_lists) out.push_back(Morphism{r, s, images, labels});
  return out;
}

const std::vector<Morphism>& Category::hom(std::uint32_t r, std::uint32_t s) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->homs.find({r, s});
    if (it != cache_->homs.end()) return *it->second;
  }
  auto built = std::make_shared<const std::vector<Morphism>>(enumerate(r, s));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->homs.emplace(std::make_pair(r, s), std::move(built));
  return *it->second;
}

std::size_t Category::hom_size(std::uint32_t r, std::uint32_t s) const { return hom(r, s).size(); }

std::size_t Category::index_of(const Morphism& m) const {
  const auto& set = hom(m.source, m.target);
  auto it = std::lower_bound(set.begin(), set.end(), m);
  if (it == set.end() || *it != m) throw CategoryError("morphism " + encode(m, *this) + " is not in the hom set");
  return static_cast<std::size_t>(it - set.begin());
}

bool Category::valid(const Morphism& m) const {
  if (m.images.size() != m.source || m.source > m.target) return false;
  std::vector<bool> used(m.target + 1, false);
  for (std::size_t i = 0; i < m.images.size(); ++i) {
    auto v = m.images[i];
    if (v < 1 || v > m.target || used[v]) return false;
    used[v] = true;
    if (order_preserving() && i > 0 && m.images[i - 1] >= v) return false;
  }
  if (decorated()) {
    if (m.labels.size() != m.source) return false;
    for (auto g : m.labels)
      if (g >= group_->order()) return false;
  } else if (!m.labels.empty()) {
    return false;
  }
  return true;
}

void Category::check_valid(const Morphism& m, const char* what) const {
  if (!valid(m)) throw CategoryError(std::string(what) + ": invalid morphism for " + name());
}

Morphism Category::identity(std::uint32_t s) const {
  Morphism m{s, s, std::vector<std::uint32_t>(s), {}};
  std::iota(m.images.begin(), m.images.end(), 1u);
  if (decorated()) m.labels.assign(s, group_->identity());
  return m;
}

Morphism Category::compose(const Morphism& beta, const Morphism& alpha) const {
  if (beta.source != alpha.target)
    throw CategoryError("compose: endpoints do not match (" + encode(beta, *this) + " after " +
                        encode(alpha, *this) + ")");
  Morphism out{alpha.source, beta.target, std::vector<std::uint32_t>(alpha.source), {}};
  for (std::size_t i = 0; i < alpha.source; ++i) out.images[i] = beta.images[alpha.images[i] - 1];
  if (decorated()) {
    out.labels.resize(alpha.source);
    for (std::size_t i = 0; i < alpha.source; ++i)
      out.labels[i] = group_->multiply(beta.labels[alpha.images[i] - 1], alpha.labels[i]);
  }
  return out;
}

Morphism Category::embed(const Morphism& alpha) const {
  Morphism out{alpha.source + 1, alpha.target + 1, {}, {}};
  const auto e = decorated() ? group_->identity() : 0u;
  if (order_preserving()) {
    out.images.push_back(1);
    for (auto v : alpha.images) out.images.push_back(v + 1);
    if (decorated()) {
      out.labels.push_back(e);
      out.labels.insert(out.labels.end(), alpha.labels.begin(), alpha.labels.end());
    }
  } else {
    out.images = alpha.images;
    out.images.push_back(alpha.target + 1);
    if (decorated()) {
      out.labels = alpha.labels;
      out.labels.push_back(e);
    }
  }
  return out;
}

Morphism Category::mu_witness(std::uint32_t s) const {
  Morphism m{s, s + 1, std::vector<std::uint32_t>(s), {}};
  for (std::uint32_t i = 0; i < s; ++i) m.images[i] = order_preserving() ? i + 2 : i + 1;
  if (decorated()) m.labels.assign(s, group_->identity());
  return m;
}

std::pair<Morphism, Morphism> Category::factor_through_predecessor(const Morphism& alpha) const {
  check_valid(alpha, "factor_through_predecessor");
  if (alpha.target <= alpha.source)
    throw CategoryError("factor_through_predecessor needs target > source");
  const auto s = alpha.target;
  std::vector<bool> hit(s + 1, false);
  for (auto v : alpha.images) hit[v] = true;
  std::uint32_t skipped = 1;
  while (hit[skipped]) ++skipped;

  Morphism gamma{s - 1, s, {}, {}};
  for (std::uint32_t v = 1; v <= s; ++v)
    if (v != skipped) gamma.images.push_back(v);
  if (decorated()) gamma.labels.assign(s - 1, group_->identity());

  Morphism beta{alpha.source, s - 1, {}, alpha.labels};
  for (auto v : alpha.images) beta.images.push_back(v < skipped ? v : v - 1);
  return {beta, gamma};
}

const std::vector<Morphism>& Category::end_generators(std::uint32_t s) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->ends.find(s);
    if (it != cache_->ends.end()) return *it->second;
  }
  std::vector<Morphism> gens;
  if (!order_preserving()) {
    for (std::uint32_t k = 1; k < s; ++k) {
      auto m = identity(s);
      std::swap(m.images[k - 1], m.images[k]);
      gens.push_back(std::move(m));
    }
  }
  if (decorated()) {
    // FI_G: slot 1 only, conjugation by transpositions reaches the rest.
    std::uint32_t slots = order_preserving() ? s : std::min<std::uint32_t>(s, 1);
    for (std::uint32_t slot = 1; slot <= slots; ++slot) {
      for (auto x : group_->generators()) {
        auto m = identity(s);
        m.labels[slot - 1] = x;
        gens.push_back(std::move(m));
      }
    }
  }
  auto built = std::make_shared<const std::vector<Morphism>>(std::move(gens));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->ends.emplace(s, std::move(built));
  return *it->second;
}

const std::vector<Morphism>& Category::raising_generators(std::uint32_t r) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->raises.find(r);
    if (it != cache_->raises.end()) return *it->second;
  }
  std::vector<Morphism> gens;
  if (order_preserving()) {
    // Cofaces skipping j = r+1, r, ..., 1: canonical hom order.
    for (std::uint32_t j = r + 1; j >= 1; --j) {
      Morphism m{r, r + 1, {}, {}};
      for (std::uint32_t v = 1; v <= r + 1; ++v)
        if (v != j) m.images.push_back(v);
      if (decorated()) m.labels.assign(r, group_->identity());
      gens.push_back(std::move(m));
    }
  } else {
    gens.push_back(mu_witness(r));
  }
  auto built = std::make_shared<const std::vector<Morphism>>(std::move(gens));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->raises.emplace(r, std::move(built));
  return *it->second;
}

const Morphism& Category::generator(const GeneratorStep& step) const {
  const auto& list = step.type == GeneratorStep::Type::Raise ? raising_generators(step.degree)
                                                             : end_generators(step.degree);
  return list.at(step.index);
}

std::vector<GeneratorStep> Category::label_word(std::uint32_t degree, std::uint32_t slot,
                                                std::uint32_t element) const {
  std::vector<GeneratorStep> steps;
  const auto ngens = static_cast<std::uint32_t>(group_->generators().size());
  const auto& w = group_->word(element);
  if (order_preserving()) {
    for (auto k : w) steps.push_back({GeneratorStep::Type::End, degree, (slot - 1) * ngens + k});
    return steps;
  }
  // Conjugate the slot-1 label by the cycle 1 -> 2 -> ... -> slot.
  const std::uint32_t label_base = degree - 1;  // transpositions come first
  for (std::uint32_t k = slot - 1; k >= 1; --k) steps.push_back({GeneratorStep::Type::End, degree, k - 1});
  for (auto k : w) steps.push_back({GeneratorStep::Type::End, degree, label_base + k});
  for (std::uint32_t k = 1; k < slot; ++k) steps.push_back({GeneratorStep::Type::End, degree, k - 1});
  return steps;
}

std::vector<GeneratorStep> Category::permutation_word(const std::vector<std::uint32_t>& perm) const {
  // Peel descents from the right: perm = s_{k_m} o ... o s_{k_1}.
  std::vector<GeneratorStep> steps;
  auto cur = perm;
  const auto n = static_cast<std::uint32_t>(cur.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t k = 1; k < n; ++k) {
      if (cur[k - 1] > cur[k]) {
        std::swap(cur[k - 1], cur[k]);
        steps.push_back({GeneratorStep::Type::End, n, k - 1});
        changed = true;
        break;
      }
    }
  }
  return steps;
}

std::vector<GeneratorStep> Category::word(const Morphism& alpha) const {
  check_valid(alpha, "word");
  std::vector<GeneratorStep> steps;
  const auto e = decorated() ? group_->identity() : 0u;

  if (order_preserving()) {
    std::vector<GeneratorStep> raises;
    Morphism cur = alpha;
    while (cur.target > cur.source) {
      auto [beta, gamma] = factor_through_predecessor(cur);
      std::uint32_t skipped = 1;
      while (skipped <= gamma.source && gamma.images[skipped - 1] == skipped) ++skipped;
      const std::uint32_t d = gamma.source;
      raises.push_back({GeneratorStep::Type::Raise, d, d + 1 - skipped});
      cur = std::move(beta);
    }
    if (decorated())
      for (std::uint32_t i = 1; i <= alpha.source; ++i)
        if (alpha.labels[i - 1] != e) {
          auto w = label_word(alpha.source, i, alpha.labels[i - 1]);
          steps.insert(steps.end(), w.begin(), w.end());
        }
    steps.insert(steps.end(), raises.rbegin(), raises.rend());
    return steps;
  }

  const auto r = alpha.source, s = alpha.target;
  for (std::uint32_t d = r; d < s; ++d) steps.push_back({GeneratorStep::Type::Raise, d, 0});
  if (decorated())
    for (std::uint32_t i = 1; i <= r; ++i)
      if (alpha.labels[i - 1] != e) {
        auto w = label_word(s, i, alpha.labels[i - 1]);
        steps.insert(steps.end(), w.begin(), w.end());
      }
  std::vector<std::uint32_t> perm = alpha.images;
  std::vector<bool> hit(s + 1, false);
  for (auto v : alpha.images) hit[v] = true;
  for (std::uint32_t v = 1; v <= s; ++v)
    if (!hit[v]) perm.push_back(v);
  auto pw = permutation_word(perm);
  steps.insert(steps.end(), pw.begin(), pw.end());
  return steps;
}

const std::vector<std::uint32_t>& Category::post_compose_table(const GeneratorStep& step, std::uint32_t s) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->tables.find({step, s});
    if (it != cache_->tables.end()) return *it->second;
  }
  const auto& gen = generator(step);
  const auto& domain = hom(s, gen.source);
  std::vector<std::uint32_t> table(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i)
    table[i] = static_cast<std::uint32_t>(index_of(compose(gen, domain[i])));
  auto built = std::make_shared<const std::vector<std::uint32_t>>(std::move(table));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->tables.emplace(std::make_pair(step, s), std::move(built));
  return *it->second;
}

namespace {

template <class Cache, class Build>
const auto& tree_lookup(Cache& cache, std::uint32_t r, std::uint32_t s, Build&& build) {
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.trees.find({r, s});
    if (it != cache.trees.end()) return *it->second;
  }
  auto built = build();
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.trees.emplace(std::make_pair(r, s), std::move(built));
  return *it->second;
}

}  // namespace

const std::vector<HomTreeNode>& Category::hom_tree(std::uint32_t r, std::uint32_t s) const {
  hom_tree_order(r, s);
  std::lock_guard lock(cache_->mutex);
  return cache_->trees.at({r, s})->nodes;
}

const std::vector<std::uint32_t>& Category::hom_tree_order(std::uint32_t r, std::uint32_t s) const {
  const auto& tree = tree_lookup(*cache_, r, s, [&] {
    auto out = std::make_shared<Cache::Tree>();
    const auto n = hom_size(r, s);
    out->nodes.assign(n, HomTreeNode{});
    std::vector<bool> seen(n, false);
    std::deque<std::uint32_t> queue;
    auto visit = [&](std::uint32_t y, GeneratorStep step, std::uint32_t parent) {
      if (seen[y]) return;
      seen[y] = true;
      out->nodes[y] = HomTreeNode{step, parent};
      out->order.push_back(y);
      queue.push_back(y);
    };
    if (r == s) {
      visit(static_cast<std::uint32_t>(index_of(identity(s))), {}, HomTreeNode::kRoot);
    } else if (r < s) {
      const auto prev = hom_size(r, s - 1);
      const auto nraise = static_cast<std::uint32_t>(raising_generators(s - 1).size());
      for (std::uint32_t x = 0; x < prev; ++x)
        for (std::uint32_t k = 0; k < nraise; ++k) {
          GeneratorStep step{GeneratorStep::Type::Raise, s - 1, k};
          visit(post_compose_table(step, r)[x], step, x);
        }
    }
    const auto nend = static_cast<std::uint32_t>(end_generators(s).size());
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (std::uint32_t k = 0; k < nend; ++k) {
        GeneratorStep step{GeneratorStep::Type::End, s, k};
        visit(post_compose_table(step, r)[x], step, x);
      }
    }
    if (out->order.size() != n) throw CategoryError("stored generators do not reach all of hom(" +
                                                    std::to_string(r) + "," + std::to_string(s) + ")");
    return std::shared_ptr<const Cache::Tree>(std::move(out));
  });
  return tree.order;
}

// ---------------------------------------------------------------- text form

std::string encode(const Morphism& m, const Category& cat) {
  std::string out = std::to_string(m.source) + "->" + std::to_string(m.target) + ":[";
  for (std::size_t i = 0; i < m.images.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m.images[i]);
  }
  out += ']';
  if (cat.decorated()) {
    out += '(';
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(m.labels[i]);
    }
    out += ')';
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}
  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw CategoryError("morphism '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }
  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }
  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  std::uint32_t number() {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  std::vector<std::uint32_t> list(char open, char close) {
    std::vector<std::uint32_t> out;
    expect(std::string_view(&open, 1));
    if (accept(close)) return out;
    do out.push_back(number());
    while (accept(','));
    expect(std::string_view(&close, 1));
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Morphism parse_morphism(std::string_view text, const Category& cat) {
  Cursor c(text);
  Morphism m;
  m.source = c.number();
  c.expect("->");
  m.target = c.number();
  c.expect(":");
  m.images = c.list('[', ']');
  if (c.peek('(')) {
    if (!cat.decorated()) c.fail("labels given for undecorated category " + cat.name());
    m.labels = c.list('(', ')');
  } else if (cat.decorated()) {
    c.fail("labels required for " + cat.name());
  }
  if (!c.done()) c.fail("trailing characters");
  if (!cat.valid(m)) throw CategoryError("morphism '" + std::string(text) + "' is not a valid " + cat.name() + " morphism");
  return m;
}

}  // namespace catrep
