#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgd/symcore.hpp"
#include "pgd/symset.hpp"

namespace pgd {

enum class SegalKind { LowerOdd, LowerEven, UpperEven, UpperOdd };

// LowerOdd(k) is lower (2k-1)-Segal, LowerEven(k) lower 2k, UpperEven(k) upper 2k,
// UpperOdd(k) upper (2k+1). All use gapped sets of cardinality k+1.
struct SegalVariant {
  SegalKind kind = SegalKind::LowerOdd;
  int k = 1;
  bool excludes_bottom() const { return kind == SegalKind::LowerEven || kind == SegalKind::UpperOdd; }
  bool excludes_top() const { return kind == SegalKind::UpperEven || kind == SegalKind::UpperOdd; }
  std::string to_string() const;
  static SegalVariant parse(const std::string& name, int k);
};

struct GappedSet {
  int ambient = 0;
  std::vector<int> members;
};

std::vector<GappedSet> gapped_subsets(int n, int size, const SegalVariant& v);

struct FaceLift {
  int index = 0;
  std::vector<int> lift;  // edge ids or simplex payload
};

struct SegalWitness {
  int n = 0;
  std::vector<int> I;
  std::vector<int> word;  // spine word, starry word or face payloads
  std::vector<FaceLift> faces;
  std::string reason;  // "missing filler", "non-unique filler", "word does not lift"
  int fillers = 0;
};

struct SegalResult {
  bool pass = true;
  int n_max = 0;
  std::optional<SegalWitness> witness;
  std::size_t families_checked = 0;
};

struct GenericOptions {
  // For LowerOdd only: restrict to gapped sets containing 0 and n.
  bool endpoint_reduction = false;
  // For symmetric sets: check one gapped set per dimension, the rest are its permutations.
  bool symmetric_reduction = false;
  int n_min = 0;
  std::size_t budget = 200'000'000;
};

// Unique-filler check over compatible families (x_i), d_i x_j = d_{j-1} x_i for i < j in I.
SegalResult check_segal_generic(const SymSet& x, const SegalVariant& v, int n_max, const GenericOptions& opt = {});

// Starry-word check: a non-simplex star set with at least k+1 faces that are simplices fails.
SegalResult check_lower_segal_spiny(const PartialGroupoid& pg, int k, int n_max, std::size_t budget = 500'000'000);

struct WordOptions {
  bool endpoint_reduction = false;
  std::size_t budget = 200'000'000;
};

// Spine-word check on edgy simplicial sets: a word outside X_n whose faces d_i (i in a gapped I
// of size k+1) are defined and lie in X_{n-1} fails.
SegalResult check_lower_segal_words(const EdgySet& x, int k, int n_max, const WordOptions& opt = {});

// Inner face d_i of a spine word; nullopt when the needed composite is undefined.
std::optional<std::vector<int>> word_face(const EdgySet& x, const std::vector<int>& w, int i);

// Replays a witness: faces lift and the word does not.
bool replay_spiny_witness(const PartialGroupoid& pg, const SegalWitness& w);
bool replay_word_witness(const EdgySet& x, const SegalWitness& w);

// Least k in [1, k_max] whose spiny check passes up to n_max, with the failure at k-1.
struct BruteDegree {
  int degree = 0;
  int n_max = 0;
  std::optional<SegalWitness> witness;  // failure at degree-1
};
BruteDegree brute_degree(const PartialGroupoid& pg, int n_max, int k_max);

}  // namespace pgd
