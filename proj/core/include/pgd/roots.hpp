#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgd/action.hpp"
#include "pgd/common.hpp"
#include "pgd/groups.hpp"

namespace pgd {

// Crystallographic root system with coordinates doubled so every root is integral.
struct RootSystem {
  char type = 'A';
  int rank = 0;
  int dim = 0;
  std::vector<std::vector<long long>> roots;
  std::vector<int> simple;                // root indices of alpha_1..alpha_rank
  std::vector<int> positive;              // root indices of the positive roots, by height
  std::vector<std::vector<int>> coeffs;   // root -> coefficients over the base
  std::vector<int> negation;              // root -> index of its negative
  std::vector<int> pos_index;             // root -> position among positives or -1

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
  int num_roots() const { return static_cast<int>(roots.size()); }
  int num_positive() const { return static_cast<int>(positive.size()); }
  long long dot(int a, int b) const;
  std::optional<int> find(const std::vector<long long>& v) const;
  // Root index of a + b, if a root.
  std::optional<int> sum(int a, int b) const;
  // Coefficient vector over the base, e.g. "1,2,1".
  std::string coeff_label(int root) const;
  // Coordinates in the orthonormal basis, e.g. "a1+a2" or "1/2(+-+-)".
  std::string coord_label(int root) const;
  // Permutation of all roots induced by the reflection in the given root.
  std::vector<int> reflection(int root) const;
  // Positive position of the root with the given base coefficients.
  std::optional<int> positive_with_coeffs(const std::vector<int>& c) const;
};

// Types A1-A8, B2-B8, C2-C8, D3-D8, E6-E8, F4, G2.
RootSystem build_root_system(char type, int rank);
RootSystem parse_root_system(const std::string& name);
std::vector<std::string> validate_root_system(const RootSystem& rs);

struct WeylGroup {
  std::shared_ptr<FiniteGroup> group;  // permutations of all roots, named by reduced words
  int longest = -1;
  std::vector<Bits> inversions;  // element -> N(w) over positives
  std::vector<int> length;       // element -> word length from the enumeration
  int simple_reflection(int i) const { return simple_[i]; }
  std::vector<int> simple_;
};

// Throws BudgetExceeded when |W| exceeds the budget.
WeylGroup weyl_enumerate(const RootSystem& rs, std::size_t budget = 100'000);

// Subsets of positives are Bits indexed by position among positives.
bool in_cone_R(const RootSystem& rs, const Bits& a, int pos);
Bits cone_R(const RootSystem& rs, const Bits& a);
Bits cone_Z(const RootSystem& rs, const Bits& a);
bool is_abelian(const RootSystem& rs, const Bits& a);
// Every subset is cone_R-closed; equivalently the set and each cocardinality-1 subset are.
bool is_really_abelian(const RootSystem& rs, const Bits& a);

struct BoundedMax {
  int lower = 0;
  int upper = 0;
  bool exact() const { return lower == upper; }
  std::vector<int> witness;   // positive positions realizing the lower bound
  std::string provenance;     // "searched", "lower+upper-bound", "bounded"
};

BoundedMax max_abelian(const RootSystem& rs, std::size_t budget = 2'000'000'000);
// Really abelian maximum; the abelian maximum is an upper bound and named free sets seed the lower bound.
BoundedMax max_really_abelian(const RootSystem& rs, std::size_t budget = 50'000'000, bool long_running = false);

struct NamedSet {
  std::string name;
  int expected = 0;
  std::vector<int> members;  // positive positions
  bool free = false;
};
// Gamma sets for E6/E7/E8 and the six-set for F4; empty for other types.
std::vector<NamedSet> named_free_sets(const RootSystem& rs);
std::vector<NamedSet> verify_named_free_sets(const RootSystem& rs);

struct PuncturedWeyl {
  WeylGroup weyl;
  PartialGroupAction action;  // W acting partially on the positive roots
};
PuncturedWeyl punctured_weyl(const RootSystem& rs, std::size_t budget = 100'000);
// Domain of a group word acting successively, vertex `skip` left unchecked (-1 checks all).
Bits weyl_word_domain(const RootSystem& rs, const WeylGroup& w, const std::vector<int>& word, int skip = -1);
// The word as simplex faces: d_i merges letters i and i+1 (1-based), d_n drops the last letter.
std::vector<int> weyl_word_face(const WeylGroup& w, const std::vector<int>& word, int i);

// The length-16 word in C3 with domains of faces d1, d5, d10, d16.
struct C3Example {
  std::vector<int> word;  // group elements
  std::vector<std::pair<int, Bits>> face_domains;
  Bits word_domain;
};
C3Example c3_example(const RootSystem& c3, const WeylGroup& w);

struct TableRow {
  std::string name;
  int expected = 0;
  int value = 0;   // lower bound when not exact
  int upper = 0;
  std::string provenance;
  bool exact() const { return value == upper; }
};
// Closed-form table values; names like "A3", "B4", "A1xA1".
int degree_formula(const std::string& name);
int abelian_formula(const std::string& name);
std::vector<TableRow> degree_table(const std::vector<std::string>& names, bool long_running = false);
std::vector<TableRow> abelian_table(const std::vector<std::string>& names, bool long_running = false);

}  // namespace pgd
