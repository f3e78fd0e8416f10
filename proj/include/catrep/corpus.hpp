#pragma once

// Seeded random presentations for the fuzz and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "catrep/field.hpp"
#include "catrep/presentation.hpp"

namespace catrep {

struct CorpusOptions {
  int max_generators = 3;
  int max_generator_degree = 3;
  int max_relations = 4;
  int max_terms = 3;
  int max_rational_coefficient = 5;  // |c| bound over Q
};

/// One presentation. Each relation is anchored at a generator of degree d and
/// lives in degree d + 1 (probability 3/4) or d, where it gets at least two
/// terms; terms use generators of degree at most the relation degree.
/// Coefficients are uniform in F_p^* for prime fields and small nonzero
/// integers over Q.
Presentation random_presentation(const Category& cat, const FieldSpec& field, std::mt19937_64& rng,
                                 const CorpusOptions& opt = {});

/// count presentations drawn from one generator seeded with seed.
std::vector<Presentation> random_corpus(const Category& cat, const FieldSpec& field, std::uint64_t seed, int count,
                                        const CorpusOptions& opt = {});

}  // namespace catrep
