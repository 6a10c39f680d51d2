#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pgd/common.hpp"

namespace pgd {

// Finite group on elements 0..order-1. mul(a, b) means "apply b, then a".
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::string> names, const std::vector<std::vector<int>>& table);
  // Closure of permutation generators; perms act on 0..degree-1.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                       std::size_t budget = 100000);
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);
  static FiniteGroup alternating(int n);
  static FiniteGroup dihedral(int n);  // order 2n
  static FiniteGroup quaternion();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // "S3", "D4", "Q8", "C6", "A4", "C2xC2", ...
  static FiniteGroup named(const std::string& name);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[a]; }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;
  bool is_abelian() const;
  // Element permutations when built from permutations.
  bool has_permutations() const { return !perms_.empty(); }
  const std::vector<int>& permutation(int a) const { return perms_[a]; }
  std::optional<int> find_permutation(const std::vector<int>& p) const;
  // Replaces element names; sizes must match.
  void set_names(std::vector<std::string> names);
  std::vector<std::vector<int>> table() const;
  std::string label;

 private:
  void finish();
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::string> names_;
  std::vector<int> table_;  // order*order, empty when products are computed from perms
  std::vector<int> inverse_;
  std::vector<std::vector<int>> perms_;
  std::unordered_map<std::vector<int>, int, VectorHash> perm_index_;
};

// Composition of permutations: (a*b)[i] = a[b[i]].
std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace pgd
