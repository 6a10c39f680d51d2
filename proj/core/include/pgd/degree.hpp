#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgd/action.hpp"
#include "pgd/closure.hpp"
#include "pgd/segal.hpp"
#include "pgd/symcore.hpp"

namespace pgd {

enum class DegreeMethod { Helly, Brute, Both };
DegreeMethod parse_method(const std::string& s);
std::string to_string(DegreeMethod m);

struct DegreeOptions {
  DegreeMethod method = DegreeMethod::Helly;
  // Brute window; -1 means degree + dimension + 2.
  int n_max = -1;
  // Upper limit on the brute window, -1 for none.
  int n_max_cap = -1;
  // User action; must agree with the canonical action when both are available.
  std::optional<CharacteristicAction> action;
  bool compare_canonical = true;
  std::size_t helly_budget = 200'000'000;
  std::size_t canonical_budget = 5'000'000;
  // Star budget for the canonical action built only to cross-check another action.
  std::size_t compare_budget = 5'000;
};

struct FiberHelly {
  int object = 0;
  int points = 0;
  int h = 0;
};

struct DegreeReport {
  int degree = 0;
  DegreeMethod method = DegreeMethod::Helly;
  bool empty = false;
  bool groupoid = false;
  bool group = false;
  int dimension = 0;
  std::string action_source;  // "native", "canonical", "user"
  int carrier_size = 0;
  // Helly number of the whole action space; -1 when the empty set is not closed.
  int helly_number = -1;
  bool empty_not_closed = false;
  std::vector<FiberHelly> fibers;
  // Critical family of 1-simplex domains at one object: its edges and their domains.
  int critical_object = -1;
  std::vector<int> critical_edges;
  std::vector<Bits> critical_family;
  // Starry word of length degree built from the critical family: a failure at degree - 1.
  std::optional<SegalWitness> helly_witness;
  bool brute_run = false;
  int brute_degree = 0;
  int brute_n_max = 0;
  std::optional<SegalWitness> brute_witness;
  bool agree = true;
  bool canonical_compared = false;
};

// Brute and Helly verdicts are compared into `agree`. Throws MathError when a supplied action and the
// canonical action give different Helly numbers.
DegreeReport degree(std::shared_ptr<const PartialGroupoid> pg, const DegreeOptions& opt = {});

// Helly number of the action space, sup over fibers, and a critical family of edge domains.
struct HellyDegree {
  int h = -1;
  bool empty_not_closed = false;
  std::vector<FiberHelly> fibers;
  int fiber_sup = 0;
  int object = -1;
  std::vector<int> edges;
  std::vector<Bits> family;
};
HellyDegree helly_degree(const CharacteristicAction& a, std::size_t budget = 200'000'000);

// Turns a critical family of edge domains at one object into a failing starry word.
SegalWitness critical_word(const PartialGroupoid& pg, int object, const std::vector<int>& edges);

struct BoundCheck {
  bool ok = false;
  int degree = 0;
  int dimension = 0;
};
BoundCheck degree_bound_check(std::shared_ptr<const PartialGroupoid> pg);

struct ReductionCheck {
  bool ok = false;
  int degree = 0;
  int reduced_degree = 0;
  std::string note;
};
// For groupoids the reduction has degree 2 when at least two objects carry non-identity edges.
ReductionCheck reduction_invariance_check(std::shared_ptr<const PartialGroupoid> pg);

struct FunctionLemmaReport {
  int r = 0;
  int s = 0;
  std::size_t families = 0;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
};
// Every coherent family of classes [f_i] : S \ i -> R over a (2r-1)-subset I has exactly one class [f]
// with [f^i] = [f_i]; trivial (non-surjective) functions form one class.
FunctionLemmaReport function_lemma_check(int r, int s);

struct SphereReport {
  int n = 0;
  bool witness_replays = false;
  SegalWitness witness;
  bool generic_pass = false;
  int generic_n_max = 0;
  std::size_t families_checked = 0;
  bool simplicial_pass = false;
  std::vector<FunctionLemmaReport> lemma;
  bool pass() const;
};
// Lower-bound witness, lower (4n-1)-Segal up to n_max and the function lemma for |R| = 3, |S| in {6, 7}.
SphereReport sphere_degree_check(int n, int n_max, bool run_lemma = true);
// The family (x_0..x_{2n-1}) with no filler; for n = 1 the family (01, 01) at I = {0, 2}.
SegalWitness sphere_witness(int n);
bool replay_sphere_witness(int n, const SegalWitness& w);

}  // namespace pgd
