#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgd/common.hpp"

namespace pgd {

struct HellyResult {
  int h = 0;
  std::vector<int> witness;  // an independent set of points of size h
  bool via_free_sets = false;
};

struct CriticalResult {
  int size = 0;
  std::vector<Bits> family;
};

struct FreeSetResult {
  int size = 0;
  std::vector<int> witness;
};

// Finite closure space: closed sets are the ground set and all intersections of generators.
class ClosureSpace {
 public:
  ClosureSpace() = default;
  ClosureSpace(int n, std::vector<Bits> generators, std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::vector<Bits>& generators() const { return gens_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Bits empty_set() const { return Bits(n_); }
  Bits full_set() const;
  Bits from_points(const std::vector<int>& points) const;

  Bits closure(const Bits& a) const;
  bool is_closed(const Bits& a) const { return closure(a) == a; }
  bool empty_closed() const { return closure(empty_set()).none(); }

  // Intersection of cl(union of all members but one); cl(empty) for families of size <= 1.
  Bits core(const std::vector<Bits>& family) const;
  bool is_helly_independent(const std::vector<Bits>& family) const { return core(family).none(); }
  // Throws EmptyNotClosed when cl(empty) is nonempty.
  HellyResult helly(std::size_t budget = 200'000'000, bool allow_fast_path = true) const;
  int helly_number() const { return helly().h; }
  // Same value by a search over generator families; fast when generators are few.
  HellyResult helly_by_generators(std::size_t budget = 200'000'000) const;

  bool is_helly_critical(const std::vector<Bits>& family) const;
  CriticalResult max_critical(std::size_t budget = 20'000'000) const;
  int max_critical_size() const { return max_critical().size; }

  std::vector<Bits> f_map(const std::vector<Bits>& family) const;
  std::vector<Bits> g_map(const std::vector<Bits>& family) const;

  // All closed sets, sorted; throws BudgetExceeded beyond the budget.
  std::vector<Bits> closed_sets(std::size_t budget = 1'000'000) const;
  bool is_convex_geometry(std::size_t budget = 1'000'000) const;
  bool is_free(const Bits& a) const;
  FreeSetResult max_free_set(std::size_t budget = 200'000'000) const;

  ClosureSpace subspace(const Bits& u) const;
  static ClosureSpace disjoint_union(const ClosureSpace& a, const ClosureSpace& b);
  // Merges points lying in exactly the same generators; class_of maps old point -> new point.
  ClosureSpace canonicalized(std::vector<int>* class_of = nullptr) const;

 private:
  int n_ = 0;
  std::vector<Bits> gens_;
  std::vector<std::string> labels_;
};

std::vector<int> to_points(const Bits& b);

}  // namespace pgd
