#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgd/action.hpp"
#include "pgd/symcore.hpp"
#include "pgd/symset.hpp"

namespace pgd {

// A named example. Spiny families carry a partial groupoid; every family carries a symmetric
// (or simplicial) set, and edgy simplicial-only families carry an EdgySet.
struct Presentation {
  std::string spec;
  std::shared_ptr<const PartialGroupoid> pg;
  SymSetPtr symset;
  std::shared_ptr<const EdgySet> edgy;
  bool spiny() const { return pg != nullptr; }
};

// NA: the front faces 012, 023 and back faces 013, 123 of a 3-simplex glued along the spine,
// with two distinct 03 edges "0>3F" and "0>3B".
PartialGroupoid make_na();
// Functions [k] -> [n] with image of at most m+1 elements.
PartialGroupoid make_skeleton(int m, int n);
PartialGroupoid make_boundary(int n);
PartialGroupoid make_spine(int n);
PartialGroupoid make_representable(int n);
// Chaotic groupoid on the given number of objects.
PartialGroupoid make_chaotic(int objects);
// Discrete groupoid: identities only.
PartialGroupoid make_discrete(int objects);
// Commuting tuples of a group as a symmetric subset of BG.
PartialGroupoid make_bcom(std::shared_ptr<const FiniteGroup> g);
// Image L_S(G) of the ambient restriction of the regular action to `subset`.
Transporter make_lsg(std::shared_ptr<const FiniteGroup> g, const std::vector<int>& subset);
// Random subset of the regular G-set of the given size.
Transporter make_random_lsg(std::shared_ptr<const FiniteGroup> g, int size, unsigned seed);
// Punctured Weyl group of a root system such as "A2".
Transporter make_punctured_weyl(const std::string& root_system);

// Specs: "na", "na-reduced", "representable:n", "skeleton:m,n", "boundary:n", "spine:n", "sphere:n",
// "simplicial-sphere:n", "bcom:G", "bcom-monoid", "nerve:chaotic:k", "nerve:discrete:k", "group:G",
// "lsg:G:k" (first k points), "lsg:G:k:seed" (random k points), "weyl:A2", "empty".
Presentation make(const std::string& spec);

// Whether (f, g, h) classifies an embedding of NA: [f|g], [g|h], [g∘f|h], [f|h∘g] are simplices
// and h∘(g∘f) != (h∘g)∘f.
bool na_universal_check(const PartialGroupoid& pg, int f, int g, int h);
// All words (f, g, h) passing na_universal_check.
std::vector<std::vector<int>> na_embeddings(const PartialGroupoid& pg);

struct QuotientCheck {
  bool map_ok = false;
  bool surjective = false;
  std::vector<std::string> problems;
  bool ok() const { return map_ok && surjective; }
};
// q : NA -> boundary(3) identifying the two 03 edges, replayed on all simplices up to max_dim.
QuotientCheck na_quotient_check(int max_dim = 3);

// Instances used by the cross-check suites.
std::vector<std::string> corpus_specs();

}  // namespace pgd
