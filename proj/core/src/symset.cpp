#include "pgd/symset.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace pgd {

Fn compose_fn(const Fn& alpha, const Fn& beta) {
  Fn out(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) out[i] = alpha[beta[i]];
  return out;
}

Fn identity_fn(int n) {
  Fn out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = i;
  return out;
}

Fn coface(int i, int n) {
  Fn out;
  for (int j = 0; j <= n; ++j)
    if (j != i) out.push_back(j);
  return out;
}

Fn codegeneracy(int i, int n) {
  Fn out;
  for (int j = 0; j <= n + 1; ++j) out.push_back(j <= i ? j : j - 1);
  return out;
}

bool is_monotone(const Fn& alpha) { return std::is_sorted(alpha.begin(), alpha.end()); }

bool is_surjective(const Fn& alpha, int n) {
  std::vector<char> hit(n + 1, 0);
  for (int v : alpha)
    if (v >= 0 && v <= n) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool SymSet::is_nondegenerate(int n, const Simplex& x) const {
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      if (!symmetric() && std::abs(i - j) != 1) continue;
      Fn c = identity_fn(n);
      c[j] = i;
      if (act(c, n, x) == x) return false;
    }
  return true;
}

namespace {

// Visits (object, top row) for every n-simplex of a partial groupoid.
void for_each_top_row(const PartialGroupoid& pg, int n,
                      const std::function<void(int, const std::vector<int>&)>& visit) {
  for (int a = 0; a < pg.num_objects(); ++a) {
    if (n == 0) {
      visit(a, {});
      continue;
    }
    pg.for_each_star(a, n, [&](const std::vector<int>& star) {
      std::vector<int> letters{pg.identity(a)};
      letters.insert(letters.end(), star.begin(), star.end());
      std::vector<int> word(n);
      std::vector<int> used(letters.size(), 0);
      int covered = 0;
      int need = static_cast<int>(star.size());
      std::function<void(int)> rec = [&](int pos) {
        if (need - covered > n - pos) return;
        if (pos == n) {
          visit(a, word);
          return;
        }
        for (std::size_t l = 0; l < letters.size(); ++l) {
          word[pos] = letters[l];
          bool fresh = l > 0 && used[l] == 0;
          ++used[l];
          if (fresh) ++covered;
          rec(pos + 1);
          --used[l];
          if (fresh) --covered;
        }
      };
      rec(0);
      return true;
    });
  }
}

void for_each_fn(int m, int n, const std::function<void(const Fn&)>& visit, bool monotone) {
  Fn f(m + 1, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos > m) {
      visit(f);
      return;
    }
    int lo = monotone && pos > 0 ? f[pos - 1] : 0;
    for (int v = lo; v <= n; ++v) {
      f[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
}

int image_size(const Fn& f) {
  std::vector<int> s(f);
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

}  // namespace

std::vector<Simplex> PgSymSet::simplices(int n) const {
  std::vector<Simplex> out;
  for_each_top_row(*pg_, n, [&](int a, const std::vector<int>& top) {
    Simplex s{a};
    s.insert(s.end(), top.begin(), top.end());
    out.push_back(std::move(s));
  });
  return out;
}

Simplex PgSymSet::act(const Fn& alpha, int n, const Simplex& x) const {
  const PartialGroupoid& pg = *pg_;
  int a = x[0];
  auto row = [&](int i) { return i == 0 ? pg.identity(a) : x[i]; };
  (void)n;
  int base = row(alpha[0]);
  Simplex y{pg.tgt(base)};
  int back = pg.inverse(base);
  for (std::size_t j = 1; j < alpha.size(); ++j) {
    int e = pg.compose(back, row(alpha[j]));
    if (e < 0) throw MathError("matrix entry undefined in " + pg.label);
    y.push_back(e);
  }
  return y;
}

std::string SphereSet::name() const { return std::string(symmetric_ ? "sphere:" : "simplicial-sphere:") + std::to_string(n_); }

std::vector<Simplex> SphereSet::simplices(int m) const {
  std::vector<Simplex> out{Simplex{-1}};
  for_each_fn(m, n_, [&](const Fn& f) {
    if (is_surjective(f, n_)) out.push_back(f);
  }, !symmetric_);
  return out;
}

Simplex SphereSet::act(const Fn& alpha, int, const Simplex& x) const {
  if (x.size() == 1 && x[0] < 0) return x;
  Fn y = compose_fn(x, alpha);
  if (!is_surjective(y, n_)) return Simplex{-1};
  return y;
}

std::string SkeletonSet::name() const { return "skeleton:" + std::to_string(m_) + "," + std::to_string(n_); }

std::vector<Simplex> SkeletonSet::simplices(int k) const {
  std::vector<Simplex> out;
  for_each_fn(k, n_, [&](const Fn& f) {
    if (image_size(f) <= m_ + 1) out.push_back(f);
  }, false);
  return out;
}

Simplex SkeletonSet::act(const Fn& alpha, int, const Simplex& x) const { return compose_fn(x, alpha); }

Simplex DecBotSet::act(const Fn& alpha, int n, const Simplex& x) const {
  Fn up{0};
  for (int v : alpha) up.push_back(v + 1);
  return base_->act(up, n + 1, x);
}

Simplex DecTopSet::act(const Fn& alpha, int n, const Simplex& x) const {
  Fn up = alpha;
  up.push_back(n + 1);
  return base_->act(up, n + 1, x);
}

Simplex OppositeSet::act(const Fn& alpha, int n, const Simplex& x) const {
  int m = static_cast<int>(alpha.size()) - 1;
  Fn r(alpha.size());
  for (int i = 0; i <= m; ++i) r[i] = n - alpha[m - i];
  return base_->act(r, n, x);
}

Fn SubdivisionSet::double_fn(const Fn& alpha, int n) {
  int m = static_cast<int>(alpha.size()) - 1;
  Fn out(2 * m + 2);
  for (int p = 0; p <= 2 * m + 1; ++p) {
    if (p <= m)
      out[p] = n - alpha[m - p];
    else
      out[p] = alpha[p - m - 1] + n + 1;
  }
  return out;
}

Simplex SubdivisionSet::act(const Fn& alpha, int n, const Simplex& x) const {
  return base_->act(double_fn(alpha, n), 2 * n + 1, x);
}

FiniteMonoid FiniteMonoid::from_group(const FiniteGroup& g) {
  FiniteMonoid m;
  m.names = g.names();
  m.identity = g.identity();
  m.table.assign(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) m.table[a][b] = g.mul(a, b);
  return m;
}

FiniteMonoid FiniteMonoid::left_zero_band() {
  FiniteMonoid m;
  m.names = {"1", "e", "f"};
  m.identity = 0;
  m.table = {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
  return m;
}

void PgEdgy::for_each_simplex(int n, const std::function<void(const std::vector<int>&)>& visit) const {
  for_each_top_row(*pg_, n, [&](int a, const std::vector<int>& top) { visit(pg_->spine_from_top(a, top)); });
}

bool BComMonoid::is_simplex(std::span<const int> spine) const {
  for (std::size_t i = 0; i < spine.size(); ++i)
    for (std::size_t j = i + 1; j < spine.size(); ++j)
      if (!m_.commute(spine[i], spine[j])) return false;
  return true;
}

void BComMonoid::for_each_simplex(int n, const std::function<void(const std::vector<int>&)>& visit) const {
  std::vector<int> t;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(t.size()) == n) {
      visit(t);
      return;
    }
    for (int x = 0; x < m_.order(); ++x) {
      bool ok = true;
      for (int y : t)
        if (!m_.commute(x, y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      t.push_back(x);
      rec();
      t.pop_back();
    }
  };
  rec();
}

std::vector<Simplex> BComMonoid::simplices(int n) const {
  std::vector<Simplex> out;
  for_each_simplex(n, [&](const std::vector<int>& t) { out.push_back(t); });
  return out;
}

Simplex BComMonoid::act(const Fn& alpha, int, const Simplex& x) const {
  if (!is_monotone(alpha)) throw MathError("B_com of a monoid is simplicial only");
  Simplex y;
  for (std::size_t j = 1; j < alpha.size(); ++j) {
    int p = m_.identity;
    for (int i = alpha[j - 1] + 1; i <= alpha[j]; ++i) p = m_.mul(x[i - 1], p);
    y.push_back(p);
  }
  return y;
}

PartialGroupoid to_partial_groupoid(const SymSet& x, int max_dim, const std::string& label) {
  PartialGroupoid pg;
  pg.label = label;
  std::map<Simplex, int> obj, edge;
  for (const auto& s : x.simplices(0)) obj.emplace(s, pg.add_object(format_ints(s)));
  auto vertex = [&](int i, int n, const Simplex& s) { return obj.at(x.act(Fn{i}, n, s)); };
  for (const auto& s : x.simplices(1)) edge.emplace(s, pg.add_edge(format_ints(s), vertex(0, 1, s), vertex(1, 1, s)));
  auto edge_of = [&](int i, int j, int n, const Simplex& s) { return edge.at(x.act(Fn{i, j}, n, s)); };
  for (const auto& [s, a] : obj) pg.set_identity(a, edge_of(0, 0, 0, s));
  for (const auto& [s, e] : edge)
    if (!pg.is_identity(e)) pg.set_inverse(e, edge_of(1, 0, 1, s));
  if (max_dim >= 2)
    for (const auto& s : x.simplices(2)) pg.add_composite(edge_of(0, 1, 2, s), edge_of(1, 2, 2, s), edge_of(0, 2, 2, s));
  std::map<std::vector<int>, Simplex> seen;
  for (int n = 1; n <= max_dim; ++n) {
    for (const auto& s : x.simplices(n)) {
      std::vector<int> key{vertex(0, n, s)};
      for (int j = 1; j <= n; ++j) key.push_back(edge_of(0, j, n, s));
      auto [it, fresh] = seen.emplace(key, s);
      if (!fresh && it->second != s) throw MathError(x.name() + " is not spiny");
      std::vector<int> top(key.begin() + 1, key.end());
      if (pg.is_nondegenerate(key[0], top)) pg.add_star(key[0], top);
    }
  }
  pg.finalize();
  return pg;
}

std::vector<std::string> check_operator_identities(const SymSet& x, int max_dim, int samples, unsigned seed) {
  std::vector<std::string> out;
  std::mt19937 rng(seed);
  auto rand_fn = [&](int m, int n) {
    Fn f(m + 1);
    for (auto& v : f) v = std::uniform_int_distribution<int>(0, n)(rng);
    if (!x.symmetric()) std::sort(f.begin(), f.end());
    return f;
  };
  std::vector<std::vector<Simplex>> cells(max_dim + 1);
  for (int n = 0; n <= max_dim; ++n) cells[n] = x.simplices(n);
  for (int t = 0; t < samples; ++t) {
    int n = std::uniform_int_distribution<int>(0, max_dim)(rng);
    if (cells[n].empty()) continue;
    const Simplex& s = cells[n][std::uniform_int_distribution<std::size_t>(0, cells[n].size() - 1)(rng)];
    int m = std::uniform_int_distribution<int>(0, max_dim)(rng);
    int p = std::uniform_int_distribution<int>(0, max_dim)(rng);
    Fn alpha = rand_fn(m, n), beta = rand_fn(p, m);
    if (x.act(compose_fn(alpha, beta), n, s) != x.act(beta, m, x.act(alpha, n, s)))
      out.push_back("act(alpha.beta) != act(beta).act(alpha) on " + format_ints(s) + " with alpha=" + format_ints(alpha) +
                    " beta=" + format_ints(beta));
    if (x.act(identity_fn(n), n, s) != s) out.push_back("act(id) != id on " + format_ints(s));
    Simplex img = x.act(alpha, n, s);
    auto all = cells[m];
    if (std::find(all.begin(), all.end(), img) == all.end())
      out.push_back("act(alpha) leaves the simplex set on " + format_ints(s));
    if (n >= 2) {
      int j = std::uniform_int_distribution<int>(1, n)(rng);
      int i = std::uniform_int_distribution<int>(0, j - 1)(rng);
      if (x.face(i, n - 1, x.face(j, n, s)) != x.face(j - 1, n - 1, x.face(i, n, s)))
        out.push_back("d_i d_j != d_{j-1} d_i on " + format_ints(s));
    }
    if (n >= 1) {
      int i = std::uniform_int_distribution<int>(0, n)(rng);
      if (x.face(i, n + 1, x.degeneracy(i, n, s)) != s || x.face(i + 1, n + 1, x.degeneracy(i, n, s)) != s)
        out.push_back("d_i s_i != id on " + format_ints(s));
    }
  }
  return out;
}

}  // namespace pgd
