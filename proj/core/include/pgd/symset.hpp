#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pgd/symcore.hpp"

namespace pgd {

// Payload of a simplex; its meaning is fixed by the owning presentation.
using Simplex = std::vector<int>;
// A function [m] -> [n] stored as its values, length m+1.
using Fn = std::vector<int>;

Fn compose_fn(const Fn& alpha, const Fn& beta);  // alpha after beta
Fn identity_fn(int n);
Fn coface(int i, int n);       // d^i : [n-1] -> [n], skips i
Fn codegeneracy(int i, int n);  // s^i : [n+1] -> [n], hits i twice
bool is_monotone(const Fn& alpha);
bool is_surjective(const Fn& alpha, int n);

class SymSet {
 public:
  virtual ~SymSet() = default;
  virtual std::string name() const = 0;
  // False for simplicial-only presentations: act then accepts monotone functions only.
  virtual bool symmetric() const { return true; }
  // Largest dimension of a nondegenerate simplex, -1 when unknown.
  virtual int dimension() const { return -1; }
  // All n-simplices, degenerate ones included, in a fixed order.
  virtual std::vector<Simplex> simplices(int n) const = 0;
  // x is an n-simplex, alpha : [m] -> [n]; returns alpha^* x.
  virtual Simplex act(const Fn& alpha, int n, const Simplex& x) const = 0;

  Simplex face(int i, int n, const Simplex& x) const { return act(coface(i, n), n, x); }
  Simplex degeneracy(int i, int n, const Simplex& x) const { return act(codegeneracy(i, n), n, x); }
  bool is_nondegenerate(int n, const Simplex& x) const;
};

using SymSetPtr = std::shared_ptr<const SymSet>;

// Word-presented symmetric set. Payload of an n-simplex: (object, t1..tn), the top row.
class PgSymSet : public SymSet {
 public:
  explicit PgSymSet(std::shared_ptr<const PartialGroupoid> pg) : pg_(std::move(pg)) {}
  std::string name() const override { return pg_->label; }
  int dimension() const override { return pg_->dimension(); }
  std::vector<Simplex> simplices(int n) const override;
  Simplex act(const Fn& alpha, int n, const Simplex& x) const override;
  const PartialGroupoid& pg() const { return *pg_; }

 private:
  std::shared_ptr<const PartialGroupoid> pg_;
};

// Symmetric sphere: surjections [m] -> [n] plus a basepoint {-1} in each dimension.
// The simplicial variant keeps monotone surjections only.
class SphereSet : public SymSet {
 public:
  SphereSet(int n, bool symmetric = true) : n_(n), symmetric_(symmetric) {}
  std::string name() const override;
  bool symmetric() const override { return symmetric_; }
  int dimension() const override { return n_; }
  std::vector<Simplex> simplices(int m) const override;
  Simplex act(const Fn& alpha, int m, const Simplex& x) const override;

 private:
  int n_;
  bool symmetric_;
};

// Functions [k] -> [n] whose image has at most m+1 elements (sk_m of the representable).
class SkeletonSet : public SymSet {
 public:
  SkeletonSet(int m, int n) : m_(m), n_(n) {}
  std::string name() const override;
  int dimension() const override { return m_; }
  std::vector<Simplex> simplices(int k) const override;
  Simplex act(const Fn& alpha, int k, const Simplex& x) const override;

 private:
  int m_, n_;
};

// (dec_bot X)_n = X_{n+1} along alpha -> 0 * alpha.
class DecBotSet : public SymSet {
 public:
  explicit DecBotSet(SymSetPtr base) : base_(std::move(base)) {}
  std::string name() const override { return "dec_bot(" + base_->name() + ")"; }
  bool symmetric() const override { return base_->symmetric(); }
  int dimension() const override { return base_->dimension(); }
  std::vector<Simplex> simplices(int n) const override { return base_->simplices(n + 1); }
  Simplex act(const Fn& alpha, int n, const Simplex& x) const override;

 private:
  SymSetPtr base_;
};

// (dec_top X)_n = X_{n+1} along alpha -> alpha * top.
class DecTopSet : public SymSet {
 public:
  explicit DecTopSet(SymSetPtr base) : base_(std::move(base)) {}
  std::string name() const override { return "dec_top(" + base_->name() + ")"; }
  bool symmetric() const override { return base_->symmetric(); }
  int dimension() const override { return base_->dimension(); }
  std::vector<Simplex> simplices(int n) const override { return base_->simplices(n + 1); }
  Simplex act(const Fn& alpha, int n, const Simplex& x) const override;

 private:
  SymSetPtr base_;
};

// Opposite: alpha acts as reverse . alpha . reverse.
class OppositeSet : public SymSet {
 public:
  explicit OppositeSet(SymSetPtr base) : base_(std::move(base)) {}
  std::string name() const override { return "op(" + base_->name() + ")"; }
  bool symmetric() const override { return base_->symmetric(); }
  int dimension() const override { return base_->dimension(); }
  std::vector<Simplex> simplices(int n) const override { return base_->simplices(n); }
  Simplex act(const Fn& alpha, int n, const Simplex& x) const override;

 private:
  SymSetPtr base_;
};

// Edgewise subdivision: tw(X)_n = X_{2n+1} along the doubling [n] -> [n]^op * [n].
class SubdivisionSet : public SymSet {
 public:
  explicit SubdivisionSet(SymSetPtr base) : base_(std::move(base)) {}
  std::string name() const override { return "tw(" + base_->name() + ")"; }
  bool symmetric() const override { return base_->symmetric(); }
  std::vector<Simplex> simplices(int n) const override { return base_->simplices(2 * n + 1); }
  Simplex act(const Fn& alpha, int n, const Simplex& x) const override;
  // Doubling of alpha : [m] -> [n] to [2m+1] -> [2n+1].
  static Fn double_fn(const Fn& alpha, int n);

 private:
  SymSetPtr base_;
};

struct FiniteMonoid {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int identity = 0;
  int order() const { return static_cast<int>(names.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  bool commute(int a, int b) const { return table[a][b] == table[b][a]; }
  static FiniteMonoid from_group(const FiniteGroup& g);
  // {1, e, f} with xy = x for x, y in {e, f}: generated by two non-commuting idempotents.
  static FiniteMonoid left_zero_band();
};

// Interface for the word-based Segal check on edgy simplicial sets.
class EdgySet {
 public:
  virtual ~EdgySet() = default;
  virtual std::string name() const = 0;
  virtual int num_edges() const = 0;
  virtual std::string edge_name(int e) const = 0;
  virtual int src(int e) const = 0;
  virtual int tgt(int e) const = 0;
  // g∘f when [f|g] is a 2-simplex, else -1.
  virtual int compose(int f, int g) const = 0;
  virtual bool is_simplex(std::span<const int> spine) const = 0;
  // Spine words of all n-simplices (n >= 1).
  virtual void for_each_simplex(int n, const std::function<void(const std::vector<int>&)>& visit) const = 0;
};

class PgEdgy : public EdgySet {
 public:
  explicit PgEdgy(std::shared_ptr<const PartialGroupoid> pg) : pg_(std::move(pg)) {}
  std::string name() const override { return pg_->label; }
  int num_edges() const override { return pg_->num_edges(); }
  std::string edge_name(int e) const override { return pg_->edge_name(e); }
  int src(int e) const override { return pg_->src(e); }
  int tgt(int e) const override { return pg_->tgt(e); }
  int compose(int f, int g) const override { return pg_->compose(f, g); }
  bool is_simplex(std::span<const int> spine) const override { return pg_->spine_is_simplex(spine); }
  void for_each_simplex(int n, const std::function<void(const std::vector<int>&)>& visit) const override;

 private:
  std::shared_ptr<const PartialGroupoid> pg_;
};

// B_com M: commuting tuples of a monoid. Simplicial only unless M is a group.
// Payload of an n-simplex is its spine (m1..mn); composites multiply as m2*m1.
class BComMonoid : public SymSet, public EdgySet {
 public:
  BComMonoid(FiniteMonoid m, std::string label) : m_(std::move(m)), label_(std::move(label)) {}
  std::string name() const override { return label_; }
  bool symmetric() const override { return false; }
  std::vector<Simplex> simplices(int n) const override;
  Simplex act(const Fn& alpha, int n, const Simplex& x) const override;

  int num_edges() const override { return m_.order(); }
  std::string edge_name(int e) const override { return m_.names[e]; }
  int src(int) const override { return 0; }
  int tgt(int) const override { return 0; }
  int compose(int f, int g) const override { return m_.commute(f, g) ? m_.mul(g, f) : -1; }
  bool is_simplex(std::span<const int> spine) const override;
  void for_each_simplex(int n, const std::function<void(const std::vector<int>&)>& visit) const override;
  const FiniteMonoid& monoid() const { return m_; }

 private:
  FiniteMonoid m_;
  std::string label_;
};

// Materializes a finite spiny symmetric set as a partial groupoid, reading simplices up to max_dim.
PartialGroupoid to_partial_groupoid(const SymSet& x, int max_dim, const std::string& label);

// Checks act(alpha . beta) = act(beta) . act(alpha) and unit laws on sampled data; returns violations.
std::vector<std::string> check_operator_identities(const SymSet& x, int max_dim, int samples, unsigned seed);

}  // namespace pgd
