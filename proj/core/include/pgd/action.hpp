#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgd/closure.hpp"
#include "pgd/symcore.hpp"
#include "pgd/symset.hpp"

namespace pgd {

// A groupoid over a partial groupoid given by per-edge partial injections on a carrier.
struct CharacteristicAction {
  std::shared_ptr<const PartialGroupoid> base;
  std::vector<std::string> carrier;
  std::vector<int> anchor;                 // point -> object
  std::vector<std::vector<int>> edge_map;  // edge -> point -> image or -1

  int size() const { return static_cast<int>(carrier.size()); }
  Bits domain(int edge) const;
  Bits fiber(int object) const;
  // Points on which the simplex with this top row acts.
  Bits star_domain(int object, std::span<const int> top) const;
  // Successive action of a spine word.
  std::optional<int> act_word(std::span<const int> spine, int x) const;
  Bits word_domain(std::span<const int> spine) const;
  // Closure space on the carrier generated by the edge domains.
  ClosureSpace closure_space() const;
  NativeAction to_native() const;
  static CharacteristicAction from_native(std::shared_ptr<const PartialGroupoid> base, const NativeAction& n);
};

struct ActionCheckOptions {
  bool characteristic = true;  // false: skip the simplex <-> nonempty domain checks
  bool exhaustive = false;     // enumerate all non-simplex star sets instead of sampling
  std::size_t simplex_budget = 2'000'000;
  int samples = 2000;
  unsigned seed = 7;
};

std::vector<std::string> validate_action(const CharacteristicAction& a, const ActionCheckOptions& opt = {});

// Components indexed by (object, star set); edge h sends vertex i to vertex j when h = f_ij.
CharacteristicAction canonical_action(std::shared_ptr<const PartialGroupoid> pg, std::size_t budget = 5'000'000);

struct PartialGroupAction {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> maps;  // element -> point -> image or -1
  int size() const { return static_cast<int>(carrier.size()); }
  Bits domain(int g) const;
};

struct GSet {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> act;  // element -> point -> image
};

std::vector<std::string> validate_partial_group_action(const PartialGroupAction& pa);
PartialGroupAction ambient_restriction(const GSet& g, const std::vector<int>& subset);

struct Transporter {
  std::shared_ptr<const PartialGroupoid> groupoid;  // objects S, edges (g, x) : x -> g.x
  std::shared_ptr<const PartialGroupoid> image;     // L_S(G), group-embedded
  CharacteristicAction action;
};

// Throws MathError("empty partial group") when no element acts.
Transporter transporter(const PartialGroupAction& pa, const std::string& label);

// Multiplication: carrier L_1, anchor = target, h acts f -> h∘f when [f|h] is a 2-simplex.
CharacteristicAction multiplication_action(std::shared_ptr<const PartialGroupoid> pg);
// Conjugation: carrier = loops, f acts u -> f∘u∘f^-1 when [f^-1|u|f] is a 3-simplex.
CharacteristicAction conjugation_action(std::shared_ptr<const PartialGroupoid> pg);
// Edgewise subdivision tw(L) as a symmetric set.
std::shared_ptr<const SymSet> subdivision(std::shared_ptr<const PartialGroupoid> pg);

// cj(L): simplices [g_n|..|g_1|u|f_1|..|f_n] of L with g_i = f_i^-1, acted on through tw.
class ConjugationSet : public SymSet {
 public:
  explicit ConjugationSet(std::shared_ptr<const PartialGroupoid> pg);
  std::string name() const override { return "cj(" + pg_->label + ")"; }
  std::vector<Simplex> simplices(int n) const override;
  Simplex act(const Fn& alpha, int n, const Simplex& x) const override { return tw_.act(alpha, n, x); }
  // The unprimed half, an n-simplex of L.
  Simplex right(int n, const Simplex& x) const;

 private:
  std::shared_ptr<const PartialGroupoid> pg_;
  SubdivisionSet tw_;
};

// p : E -> X is star injective when simplices of E sharing vertex 0 have distinct images.
std::vector<std::string> check_star_injective(const SymSet& e, const std::function<Simplex(int, const Simplex&)>& p,
                                              int max_dim);

// Star injectivity of dec_bot L -> L and cj(L) -> L, and spininess of tw(L), up to max_dim.
std::vector<std::string> validate_self_actions(std::shared_ptr<const PartialGroupoid> pg, int max_dim);

}  // namespace pgd
