#include "pgd/closure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace pgd {

std::vector<int> to_points(const Bits& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

ClosureSpace::ClosureSpace(int n, std::vector<Bits> generators, std::vector<std::string> labels)
    : n_(n), gens_(std::move(generators)), labels_(std::move(labels)) {
  for (const auto& g : gens_)
    if (static_cast<int>(g.size()) != n_) throw FormatError("generator size does not match ground set");
  if (labels_.empty())
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
}

Bits ClosureSpace::full_set() const {
  Bits b(n_);
  b.set();
  return b;
}

Bits ClosureSpace::from_points(const std::vector<int>& points) const {
  Bits b(n_);
  for (int p : points) b.set(p);
  return b;
}

Bits ClosureSpace::closure(const Bits& a) const {
  Bits out = full_set();
  for (const auto& g : gens_)
    if (a.is_subset_of(g)) out &= g;
  return out;
}

Bits ClosureSpace::core(const std::vector<Bits>& family) const {
  if (family.size() <= 1) return closure(empty_set());
  Bits out = full_set();
  for (std::size_t i = 0; i < family.size(); ++i) {
    Bits u = empty_set();
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) u |= family[j];
    out &= closure(u);
    if (out.none()) break;
  }
  return out;
}

HellyResult ClosureSpace::helly(std::size_t budget, bool allow_fast_path) const {
  if (!empty_closed()) throw EmptyNotClosed();
  HellyResult res;
  if (n_ == 0) return res;
  if (allow_fast_path) {
    try {
      if (closed_sets(20000).size() <= 20000 && is_convex_geometry(20000)) {
        auto fs = max_free_set(budget);
        res.h = fs.size;
        res.witness = fs.witness;
        res.via_free_sets = true;
        return res;
      }
    } catch (const BudgetExceeded&) {
    }
  }
  if (gens_.size() <= static_cast<std::size_t>(n_)) return helly_by_generators(budget);
  std::vector<int> cur, best;
  std::size_t work = 0;
  // cur is independent; each candidate keeps it independent when added.
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& cands) {
    if (cur.size() > best.size()) best = cur;
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
      if (cur.size() + (cands.size() - idx) <= best.size()) return;
      if (++work > budget) throw BudgetExceeded("Helly search budget exceeded");
      int x = cands[idx];
      cur.push_back(x);
      std::vector<Bits> fam;
      for (int p : cur) fam.push_back(from_points({p}));
      if (core(fam).none()) {
        Bits cl = closure(from_points(cur));
        std::vector<int> next;
        for (std::size_t j = idx + 1; j < cands.size(); ++j)
          if (!cl.test(cands[j])) next.push_back(cands[j]);
        rec(next);
      }
      cur.pop_back();
    }
  };
  std::vector<int> all;
  for (int i = 0; i < n_; ++i) all.push_back(i);
  rec(all);
  res.h = static_cast<int>(best.size());
  res.witness = best;
  return res;
}

// A maximum critical family refines to one of generators, and families whose cocardinality-1 meets
// are nonempty are closed under subfamilies, so the search runs over generator sets.
HellyResult ClosureSpace::helly_by_generators(std::size_t budget) const {
  if (!empty_closed()) throw EmptyNotClosed();
  HellyResult res;
  if (n_ == 0) return res;
  int m = static_cast<int>(gens_.size());
  std::vector<int> cur;
  std::vector<Bits> best_excl;
  std::size_t work = 0;
  std::function<void(int, const Bits&, const std::vector<Bits>&)> rec = [&](int start, const Bits& meet,
                                                                           const std::vector<Bits>& excl) {
    if (meet.none()) {
      if (excl.size() > best_excl.size()) best_excl = excl;
      return;
    }
    for (int g = start; g < m; ++g) {
      if (static_cast<int>(cur.size()) + 1 + (m - g - 1) <= static_cast<int>(best_excl.size())) return;
      if (++work > budget) throw BudgetExceeded("Helly search budget exceeded");
      const Bits& gen = gens_[g];
      if (meet.is_subset_of(gen)) continue;
      std::vector<Bits> next;
      next.reserve(excl.size() + 1);
      bool ok = true;
      for (std::size_t i = 0; ok && i < excl.size(); ++i) {
        Bits e = excl[i] & gen;
        if (e.none()) ok = false;
        next.push_back(std::move(e));
      }
      if (!ok) continue;
      next.push_back(meet);
      cur.push_back(g);
      rec(g + 1, meet & gen, next);
      cur.pop_back();
    }
  };
  rec(0, full_set(), {});
  if (best_excl.empty()) {
    res.h = 1;
    res.witness = {0};
    return res;
  }
  res.h = static_cast<int>(best_excl.size());
  for (const auto& e : best_excl) res.witness.push_back(static_cast<int>(e.find_first()));
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

bool ClosureSpace::is_helly_critical(const std::vector<Bits>& family) const {
  Bits all = full_set();
  for (const auto& a : family) all &= a;
  if (all.any()) return false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    Bits m = full_set();
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) m &= family[j];
    if (m.none()) return false;
  }
  return true;
}

CriticalResult ClosureSpace::max_critical(std::size_t budget) const {
  if (!empty_closed()) throw EmptyNotClosed();
  CriticalResult res;
  if (n_ == 0) return res;
  auto closed = closed_sets(budget);
  std::vector<int> cur;
  std::vector<Bits> partial;  // partial[i] = meet of cur without member i
  std::size_t work = 0;
  std::function<void(std::size_t, const Bits&)> rec = [&](std::size_t start, const Bits& meet) {
    for (std::size_t c = start; c < closed.size(); ++c) {
      if (++work > budget) throw BudgetExceeded("critical family search budget exceeded");
      const Bits& b = closed[c];
      bool ok = true;
      for (const auto& p : partial)
        if (!(p & b).any()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      Bits next = meet & b;
      if (next.none()) {
        if (static_cast<int>(cur.size()) + 1 > res.size) {
          res.size = static_cast<int>(cur.size()) + 1;
          res.family.clear();
          for (int i : cur) res.family.push_back(closed[i]);
          res.family.push_back(b);
        }
        continue;
      }
      auto saved = partial;
      for (auto& p : partial) p &= b;
      partial.push_back(meet);
      cur.push_back(static_cast<int>(c));
      rec(c + 1, next);
      cur.pop_back();
      partial = std::move(saved);
    }
  };
  rec(0, full_set());
  return res;
}

std::vector<Bits> ClosureSpace::f_map(const std::vector<Bits>& family) const {
  std::vector<Bits> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    Bits u = empty_set();
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) u |= family[j];
    out.push_back(closure(u));
  }
  return out;
}

std::vector<Bits> ClosureSpace::g_map(const std::vector<Bits>& family) const {
  std::vector<Bits> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    Bits m = full_set();
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) m &= family[j];
    out.push_back(m);
  }
  return out;
}

std::vector<Bits> ClosureSpace::closed_sets(std::size_t budget) const {
  std::set<Bits> seen{full_set()};
  std::vector<Bits> frontier{full_set()};
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& c : frontier)
      for (const auto& g : gens_) {
        Bits m = c & g;
        if (seen.insert(m).second) {
          if (seen.size() > budget) throw BudgetExceeded("closed-set lattice budget exceeded");
          next.push_back(m);
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool ClosureSpace::is_convex_geometry(std::size_t budget) const {
  if (!empty_closed()) return false;
  for (const auto& c : closed_sets(budget)) {
    for (int x = 0; x < n_; ++x) {
      if (c.test(x)) continue;
      Bits cx = c;
      cx.set(x);
      Bits clx = closure(cx);
      for (int y = 0; y < n_; ++y) {
        if (y == x || c.test(y) || !clx.test(y)) continue;
        Bits cy = c;
        cy.set(y);
        if (closure(cy).test(x)) return false;
      }
    }
  }
  return true;
}

bool ClosureSpace::is_free(const Bits& a) const {
  if (!is_closed(a)) return false;
  for (auto i = a.find_first(); i != Bits::npos; i = a.find_next(i)) {
    Bits rest = a;
    rest.reset(i);
    if (closure(rest).test(i)) return false;
  }
  return true;
}

FreeSetResult ClosureSpace::max_free_set(std::size_t budget) const {
  FreeSetResult res;
  if (!empty_closed()) return res;
  std::vector<int> cur;
  std::size_t work = 0;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) > res.size) {
      res.size = static_cast<int>(cur.size());
      res.witness = cur;
    }
    for (int x = start; x < n_; ++x) {
      if (static_cast<int>(cur.size()) + (n_ - x) <= res.size) return;
      if (++work > budget) throw BudgetExceeded("free-set search budget exceeded");
      cur.push_back(x);
      if (is_free(from_points(cur))) rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return res;
}

ClosureSpace ClosureSpace::subspace(const Bits& u) const {
  auto pts = to_points(u);
  int m = static_cast<int>(pts.size());
  std::vector<Bits> gens;
  std::vector<std::string> labels;
  for (int p : pts) labels.push_back(labels_[p]);
  for (const auto& g : gens_) {
    Bits t(m);
    for (int i = 0; i < m; ++i)
      if (g.test(pts[i])) t.set(i);
    gens.push_back(t);
  }
  return ClosureSpace(m, std::move(gens), std::move(labels));
}

ClosureSpace ClosureSpace::disjoint_union(const ClosureSpace& a, const ClosureSpace& b) {
  int n = a.size() + b.size();
  std::vector<Bits> gens;
  std::vector<std::string> labels;
  for (const auto& l : a.labels_) labels.push_back("0:" + l);
  for (const auto& l : b.labels_) labels.push_back("1:" + l);
  for (const auto& g : a.gens_) {
    Bits t(n);
    for (int i = 0; i < a.size(); ++i)
      if (g.test(i)) t.set(i);
    for (int i = 0; i < b.size(); ++i) t.set(a.size() + i);
    gens.push_back(t);
  }
  for (const auto& g : b.gens_) {
    Bits t(n);
    for (int i = 0; i < a.size(); ++i) t.set(i);
    for (int i = 0; i < b.size(); ++i)
      if (g.test(i)) t.set(a.size() + i);
    gens.push_back(t);
  }
  return ClosureSpace(n, std::move(gens), std::move(labels));
}

ClosureSpace ClosureSpace::canonicalized(std::vector<int>* class_of) const {
  std::map<std::vector<char>, int> trace_id;
  std::vector<int> cls(n_);
  std::vector<std::string> labels;
  for (int p = 0; p < n_; ++p) {
    std::vector<char> trace(gens_.size());
    for (std::size_t g = 0; g < gens_.size(); ++g) trace[g] = gens_[g].test(p) ? 1 : 0;
    auto [it, fresh] = trace_id.emplace(trace, static_cast<int>(trace_id.size()));
    if (fresh) labels.push_back(labels_[p]);
    cls[p] = it->second;
  }
  int m = static_cast<int>(trace_id.size());
  std::vector<Bits> gens;
  std::set<Bits> seen;
  for (const auto& g : gens_) {
    Bits t(m);
    for (int p = 0; p < n_; ++p)
      if (g.test(p)) t.set(cls[p]);
    if (seen.insert(t).second) gens.push_back(t);
  }
  if (class_of) *class_of = cls;
  return ClosureSpace(m, std::move(gens), std::move(labels));
}

}  // namespace pgd
