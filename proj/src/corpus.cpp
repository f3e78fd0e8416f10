#include "catrep/corpus.hpp"

#include <algorithm>

namespace catrep {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

mpq_class coefficient(const FieldSpec& field, std::mt19937_64& rng, const CorpusOptions& opt) {
  if (!field.rational) return mpq_class(static_cast<long>(std::uniform_int_distribution<std::uint32_t>(1, field.prime - 1)(rng)));
  int c = uniform(rng, 1, opt.max_rational_coefficient);
  return mpq_class(uniform(rng, 0, 1) ? c : -c);
}

}  // namespace

Presentation random_presentation(const Category& cat, const FieldSpec& field, std::mt19937_64& rng,
                                 const CorpusOptions& opt) {
  Presentation p;
  p.category = cat;
  p.field = field;
  const int ngens = uniform(rng, 1, opt.max_generators);
  for (int j = 0; j < ngens; ++j)
    p.generators.push_back({"g" + std::to_string(j + 1), uniform(rng, 0, opt.max_generator_degree)});
  const int nrels = uniform(rng, 0, opt.max_relations);
  for (int r = 0; r < nrels; ++r) {
    const auto& anchor = p.generators[uniform(rng, 0, ngens - 1)];
    PresentationRelation rel;
    rel.degree = anchor.degree + (uniform(rng, 0, 3) > 0 ? 1 : 0);
    const bool same_degree = rel.degree == anchor.degree;
    std::vector<std::size_t> usable;
    for (std::size_t j = 0; j < p.generators.size(); ++j)
      if (p.generators[j].degree <= rel.degree) usable.push_back(j);
    const int nterms = uniform(rng, same_degree ? std::min(2, opt.max_terms) : 1, opt.max_terms);
    for (int k = 0; k < nterms; ++k) {
      auto j = usable[uniform(rng, 0, static_cast<int>(usable.size()) - 1)];
      const auto& hom = cat.hom(p.generators[j].degree, rel.degree);
      PresentationTerm term;
      term.generator = j;
      term.morphism = hom[uniform(rng, 0, static_cast<int>(hom.size()) - 1)];
      term.coefficient = coefficient(field, rng, opt);
      rel.terms.push_back(std::move(term));
    }
    p.relations.push_back(std::move(rel));
  }
  return p;
}

std::vector<Presentation> random_corpus(const Category& cat, const FieldSpec& field, std::uint64_t seed, int count,
                                        const CorpusOptions& opt) {
  std::mt19937_64 rng(seed);
  std::vector<Presentation> out;
  for (int i = 0; i < count; ++i) out.push_back(random_presentation(cat, field, rng, opt));
  return out;
}

}  // namespace catrep
