#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pgd/closure.hpp"
#include "pgd/corpus.hpp"
#include "pgd/symcore.hpp"

namespace pgd::testing {

inline std::shared_ptr<const PartialGroupoid> share(PartialGroupoid pg) {
  return std::make_shared<const PartialGroupoid>(std::move(pg));
}

inline std::shared_ptr<const FiniteGroup> group(const std::string& name) {
  auto g = std::make_shared<FiniteGroup>(FiniteGroup::named(name));
  g->label = name;
  return g;
}

inline int edge(const PartialGroupoid& pg, const std::string& name) { return pg.find_edge(name).value(); }

inline Bits bits_of(int n, const std::vector<int>& points) {
  Bits b(n);
  for (int p : points) b.set(p);
  return b;
}

// Generators of random sizes, with the empty set reachable about half the time.
inline ClosureSpace random_space(std::mt19937& rng, int max_points = 7, int max_gens = 6) {
  int n = std::uniform_int_distribution<int>(1, max_points)(rng);
  int m = std::uniform_int_distribution<int>(0, max_gens)(rng);
  std::vector<Bits> gens;
  for (int g = 0; g < m; ++g) {
    Bits b(n);
    for (int p = 0; p < n; ++p)
      if (std::bernoulli_distribution(0.55)(rng)) b.set(p);
    gens.push_back(b);
  }
  return ClosureSpace(n, gens);
}

// Order convexity on n collinear points: closed sets are intervals.
inline ClosureSpace line(int n) {
  std::vector<Bits> gens;
  for (int k = 0; k < n; ++k) {
    Bits prefix(n), suffix(n);
    for (int p = 0; p <= k; ++p) prefix.set(p);
    for (int p = k; p < n; ++p) suffix.set(p);
    gens.push_back(prefix);
    gens.push_back(suffix);
  }
  return ClosureSpace(n, gens);
}

// Largest set of points whose singleton family has empty core, by exhaustive search.
inline int brute_helly(const ClosureSpace& cs) {
  int n = cs.size();
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Bits> fam;
    for (int p = 0; p < n; ++p)
      if (mask >> p & 1) fam.push_back(bits_of(n, {p}));
    if (static_cast<int>(fam.size()) > best && cs.is_helly_independent(fam)) best = static_cast<int>(fam.size());
  }
  return best;
}

inline std::vector<Bits> random_family(std::mt19937& rng, int n, int size) {
  std::vector<Bits> fam;
  for (int i = 0; i < size; ++i) {
    Bits b(n);
    for (int p = 0; p < n; ++p)
      if (std::bernoulli_distribution(0.4)(rng)) b.set(p);
    fam.push_back(b);
  }
  return fam;
}

}  // namespace pgd::testing
