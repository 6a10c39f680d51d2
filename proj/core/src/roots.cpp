#include "pgd/roots.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "pgd/lp.hpp"

namespace pgd {
namespace {

using Vec = std::vector<long long>;

Vec unit(int dim, int i, long long c) {
  Vec v(dim, 0);
  v[i] = c;
  return v;
}

Vec add(const Vec& a, const Vec& b, long long cb = 1) {
  Vec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + cb * b[i];
  return v;
}

// Doubled coordinates of +-a_i +-a_j.
void pairs(int dim, int upto, std::vector<Vec>& out) {
  for (int i = 0; i < upto; ++i)
    for (int j = i + 1; j < upto; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) out.push_back(add(unit(dim, i, 2 * si), unit(dim, j, 2 * sj)));
}

Vec half(const std::vector<int>& signs) {
  Vec v;
  for (int s : signs) v.push_back(s);
  return v;
}

Vec half_str(const std::string& s) {
  std::vector<int> signs;
  for (char c : s) signs.push_back(c == '+' ? 1 : -1);
  return half(signs);
}

Vec diff(int dim, int i, int j) { return add(unit(dim, i, 2), unit(dim, j, -2)); }
Vec plus2(int dim, int i, int j) { return add(unit(dim, i, 2), unit(dim, j, 2)); }

void e8_roots(std::vector<Vec>& roots, std::vector<Vec>& base) {
  pairs(8, 8, roots);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    std::vector<int> signs(8);
    for (int i = 0; i < 8; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
    roots.push_back(half(signs));
  }
  base = {half_str("+------+"), diff(8, 6, 7), diff(8, 5, 6), plus2(8, 6, 7),
          diff(8, 4, 5),        diff(8, 3, 4), diff(8, 2, 3), diff(8, 1, 2)};
}

long long dot_vec(const Vec& a, const Vec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Solves base * c = v exactly; nullopt if v is not in the span.
struct BaseSolver {
  std::vector<int> rows;
  std::vector<std::vector<mpq_class>> inv;  // rank x rank
  const std::vector<Vec>* base = nullptr;

  explicit BaseSolver(const std::vector<Vec>& b) : base(&b) {
    int rank = static_cast<int>(b.size());
    int dim = static_cast<int>(b.front().size());
    // Pick rows greedily so the square submatrix is invertible.
    std::vector<std::vector<mpq_class>> chosen;
    for (int r = 0; r < dim && static_cast<int>(rows.size()) < rank; ++r) {
      std::vector<mpq_class> row(rank);
      for (int k = 0; k < rank; ++k) row[k] = mpq_class(static_cast<long>(b[k][r]));
      auto test = chosen;
      test.push_back(row);
      if (matrix_rank(test) == static_cast<int>(test.size())) {
        chosen = test;
        rows.push_back(r);
      }
    }
    if (static_cast<int>(rows.size()) != rank) throw MathError("base is not linearly independent");
    inv = invert(chosen);
  }

  static int matrix_rank(std::vector<std::vector<mpq_class>> m) {
    int rank = 0;
    int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
      int piv = -1;
      for (int r = rank; r < static_cast<int>(m.size()); ++r)
        if (m[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[piv], m[rank]);
      for (int r = 0; r < static_cast<int>(m.size()); ++r) {
        if (r == rank || m[r][c] == 0) continue;
        mpq_class f = m[r][c] / m[rank][c];
        for (int k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
      }
      ++rank;
    }
    return rank;
  }

  static std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<mpq_class>> id(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    for (int c = 0; c < n; ++c) {
      int piv = c;
      while (m[piv][c] == 0) ++piv;
      std::swap(m[piv], m[c]);
      std::swap(id[piv], id[c]);
      mpq_class p = m[c][c];
      for (int k = 0; k < n; ++k) {
        m[c][k] /= p;
        id[c][k] /= p;
      }
      for (int r = 0; r < n; ++r) {
        if (r == c || m[r][c] == 0) continue;
        mpq_class f = m[r][c];
        for (int k = 0; k < n; ++k) {
          m[r][k] -= f * m[c][k];
          id[r][k] -= f * id[c][k];
        }
      }
    }
    return id;
  }

  std::optional<std::vector<int>> solve(const Vec& v) const {
    int rank = static_cast<int>(rows.size());
    std::vector<mpq_class> c(rank, 0);
    for (int i = 0; i < rank; ++i)
      for (int k = 0; k < rank; ++k) c[i] += inv[i][k] * mpq_class(static_cast<long>(v[rows[k]]));
    std::vector<int> out(rank);
    for (int i = 0; i < rank; ++i) {
      if (c[i].get_den() != 1) return std::nullopt;
      out[i] = static_cast<int>(c[i].get_num().get_si());
    }
    Vec check(v.size(), 0);
    for (int i = 0; i < rank; ++i) check = add(check, (*base)[i], out[i]);
    if (check != v) return std::nullopt;
    return out;
  }
};

int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace

long long RootSystem::dot(int a, int b) const { return dot_vec(roots[a], roots[b]); }

std::optional<int> RootSystem::find(const std::vector<long long>& v) const {
  for (int i = 0; i < num_roots(); ++i)
    if (roots[i] == v) return i;
  return std::nullopt;
}

std::optional<int> RootSystem::sum(int a, int b) const {
  std::vector<int> c(rank);
  for (int i = 0; i < rank; ++i) c[i] = coeffs[a][i] + coeffs[b][i];
  bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
  bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
  if (!nonneg && !nonpos) return std::nullopt;
  return find(add(roots[a], roots[b]));
}

std::optional<int> RootSystem::positive_with_coeffs(const std::vector<int>& c) const {
  for (int p = 0; p < num_positive(); ++p)
    if (coeffs[positive[p]] == c) return p;
  return std::nullopt;
}

std::string RootSystem::coeff_label(int root) const {
  std::vector<std::string> parts;
  for (int c : coeffs[root]) parts.push_back(std::to_string(c));
  return join(parts, ",");
}

std::string RootSystem::coord_label(int root) const {
  const auto& v = roots[root];
  bool halves = std::all_of(v.begin(), v.end(), [](long long x) { return x == 1 || x == -1; });
  if (halves && dim > 1) {
    std::string s = "a(";
    for (long long x : v) s += x > 0 ? '+' : '-';
    return s + ")";
  }
  std::string s;
  for (int i = 0; i < dim; ++i) {
    long long c = v[i];
    if (c == 0) continue;
    if (c % 2) return "?";
    c /= 2;
    if (c > 0 && !s.empty()) s += "+";
    if (c == -1)
      s += "-";
    else if (c != 1)
      s += std::to_string(c);
    s += "a" + std::to_string(i + 1);
  }
  return s;
}

std::vector<int> RootSystem::reflection(int r) const {
  std::vector<int> perm(num_roots());
  long long rr = dot(r, r);
  for (int i = 0; i < num_roots(); ++i) {
    long long k = 2 * dot(i, r);
    if (k % rr) throw MathError("root system is not crystallographic");
    auto j = find(add(roots[i], roots[r], -(k / rr)));
    if (!j) throw MathError("reflection does not preserve the roots");
    perm[i] = *j;
  }
  return perm;
}

RootSystem build_root_system(char type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  std::vector<Vec> roots, base;
  auto bad = [&] { return FormatError("unsupported root system " + std::string(1, type) + std::to_string(rank)); };
  switch (type) {
    case 'A': {
      if (rank < 1 || rank > 8) throw bad();
      int d = rank + 1;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) roots.push_back(diff(d, i, j));
      for (int i = 0; i < rank; ++i) base.push_back(diff(d, i, i + 1));
      break;
    }
    case 'B':
    case 'C':
    case 'D': {
      if (rank < (type == 'D' ? 3 : 2) || rank > 8) throw bad();
      int d = rank;
      pairs(d, d, roots);
      if (type != 'D')
        for (int i = 0; i < d; ++i)
          for (int s : {1, -1}) roots.push_back(unit(d, i, (type == 'B' ? 2 : 4) * s));
      for (int i = 0; i + 1 < d; ++i) base.push_back(diff(d, i, i + 1));
      if (type == 'B') base.push_back(unit(d, d - 1, 2));
      if (type == 'C') base.push_back(unit(d, d - 1, 4));
      if (type == 'D') base.push_back(plus2(d, d - 2, d - 1));
      break;
    }
    case 'G': {
      if (rank != 2) throw bad();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          roots.push_back(diff(3, i, j));
          int k = 3 - i - j;
          Vec v = unit(3, i, 4);
          v[j] -= 2;
          v[k] -= 2;
          if (j < k) {
            roots.push_back(v);
            Vec w(3);
            for (int t = 0; t < 3; ++t) w[t] = -v[t];
            roots.push_back(w);
          }
        }
      Vec b2 = {-4, 2, 2};
      base = {diff(3, 0, 1), b2};
      break;
    }
    case 'F': {
      if (rank != 4) throw bad();
      pairs(4, 4, roots);
      for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) roots.push_back(unit(4, i, 2 * s));
      for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> signs(4);
        for (int i = 0; i < 4; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
        roots.push_back(half(signs));
      }
      base = {diff(4, 1, 2), diff(4, 2, 3), unit(4, 3, 2), half_str("+---")};
      break;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw bad();
      e8_roots(roots, base);
      if (rank <= 7) {
        Vec n = plus2(8, 0, 1);
        std::erase_if(roots, [&](const Vec& v) { return dot_vec(v, n) != 0; });
        base.resize(7);
      }
      if (rank == 6) {
        Vec n = diff(8, 1, 2);
        std::erase_if(roots, [&](const Vec& v) { return dot_vec(v, n) != 0; });
        base.resize(6);
      }
      break;
    }
    default:
      throw bad();
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  rs.roots = roots;
  rs.dim = static_cast<int>(roots.front().size());
  BaseSolver solver(base);
  for (const auto& v : roots) {
    auto c = solver.solve(v);
    if (!c) throw MathError("root outside the integral span of the base in " + rs.name());
    rs.coeffs.push_back(*c);
  }
  for (const auto& b : base) rs.simple.push_back(*rs.find(b));
  rs.negation.resize(roots.size());
  for (int i = 0; i < rs.num_roots(); ++i) {
    Vec neg(rs.dim);
    for (int t = 0; t < rs.dim; ++t) neg[t] = -roots[i][t];
    auto j = rs.find(neg);
    if (!j) throw MathError("root system not closed under negation");
    rs.negation[i] = *j;
  }
  for (int i = 0; i < rs.num_roots(); ++i) {
    const auto& c = rs.coeffs[i];
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) rs.positive.push_back(i);
  }
  auto height = [&](int i) { return std::accumulate(rs.coeffs[i].begin(), rs.coeffs[i].end(), 0); };
  std::sort(rs.positive.begin(), rs.positive.end(), [&](int a, int b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return rs.coeffs[a] > rs.coeffs[b];
  });
  rs.pos_index.assign(rs.num_roots(), -1);
  for (int p = 0; p < rs.num_positive(); ++p) rs.pos_index[rs.positive[p]] = p;
  return rs;
}

RootSystem parse_root_system(const std::string& name) {
  if (name.size() < 2) throw FormatError("bad root system name: " + name);
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw FormatError("bad root system name: " + name);
  } catch (const std::logic_error&) {
    throw FormatError("bad root system name: " + name);
  }
  return build_root_system(t, r);
}

std::vector<std::string> validate_root_system(const RootSystem& rs) {
  std::vector<std::string> out;
  for (int i = 0; i < rs.num_roots(); ++i) {
    for (int j = 0; j < rs.num_roots(); ++j) {
      if (i == j || rs.negation[i] == j) continue;
      // R1: no other multiples. Proportional vectors have |<u,v>|^2 = |u|^2 |v|^2.
      long long d = rs.dot(i, j);
      if (d * d == rs.dot(i, i) * rs.dot(j, j)) out.push_back("multiple roots on one line: " + rs.coord_label(i));
    }
    const auto& c = rs.coeffs[i];
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos) out.push_back("mixed-sign coefficients for " + rs.coord_label(i));
  }
  for (int i = 0; i < rs.num_roots(); ++i) {
    try {
      rs.reflection(i);
    } catch (const MathError& e) {
      out.push_back(std::string(e.what()) + " at " + rs.coord_label(i));
    }
  }
  if (2 * rs.num_positive() != rs.num_roots()) out.push_back("positive roots are not half of the roots");
  return out;
}

WeylGroup weyl_enumerate(const RootSystem& rs, std::size_t budget) {
  WeylGroup w;
  std::vector<std::vector<int>> gens;
  for (int s : rs.simple) gens.push_back(rs.reflection(s));
  w.group = std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(gens, budget));
  auto& g = *w.group;
  g.label = "W(" + rs.name() + ")";
  for (const auto& p : gens) w.simple_.push_back(*g.find_permutation(p));
  int n = g.order();
  std::vector<std::string> names(n);
  w.length.assign(n, -1);
  names[g.identity()] = "1";
  w.length[g.identity()] = 0;
  // Elements are listed in breadth-first order of left multiplication by generators.
  for (int a = 0; a < n; ++a) {
    if (w.length[a] < 0) throw MathError("Weyl enumeration order is not breadth-first");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int b = g.mul(w.simple_[i], a);
      if (w.length[b] >= 0) continue;
      w.length[b] = w.length[a] + 1;
      names[b] = "s" + std::to_string(i + 1) + (a == g.identity() ? "" : names[a]);
    }
  }
  g.set_names(names);
  int np = rs.num_positive();
  for (int a = 0; a < n; ++a) {
    Bits inv(np);
    const auto& perm = g.permutation(a);
    for (int p = 0; p < np; ++p)
      if (rs.pos_index[perm[rs.positive[p]]] < 0) inv.set(p);
    if (static_cast<int>(inv.count()) == np) w.longest = a;
    w.inversions.push_back(std::move(inv));
  }
  return w;
}

bool in_cone_R(const RootSystem& rs, const Bits& a, int pos) {
  if (a.test(pos)) return true;
  std::vector<std::vector<long long>> cols;
  for (auto i = a.find_first(); i != Bits::npos; i = a.find_next(i)) cols.push_back(rs.roots[rs.positive[i]]);
  if (cols.empty()) return false;
  return in_cone(cols, rs.roots[rs.positive[pos]]);
}

Bits cone_Z(const RootSystem& rs, const Bits& a) {
  Bits out = a;
  bool grew = true;
  while (grew) {
    grew = false;
    auto pts = to_points(out);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        auto s = rs.sum(rs.positive[pts[i]], rs.positive[pts[j]]);
        if (s && rs.pos_index[*s] >= 0 && !out.test(rs.pos_index[*s])) {
          out.set(rs.pos_index[*s]);
          grew = true;
        }
      }
  }
  return out;
}

Bits cone_R(const RootSystem& rs, const Bits& a) {
  Bits out = cone_Z(rs, a);
  for (int p = 0; p < rs.num_positive(); ++p)
    if (!out.test(p) && in_cone_R(rs, a, p)) out.set(p);
  return out;
}

bool is_abelian(const RootSystem& rs, const Bits& a) {
  auto pts = to_points(a);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (rs.sum(rs.positive[pts[i]], rs.positive[pts[j]])) return false;
  return true;
}

namespace {

bool cone_closed(const RootSystem& rs, const Bits& a) {
  for (int p = 0; p < rs.num_positive(); ++p)
    if (!a.test(p) && in_cone_R(rs, a, p)) return false;
  return true;
}

// No-sum graph on positives as adjacency bitsets.
std::vector<Bits> abelian_graph(const RootSystem& rs) {
  int n = rs.num_positive();
  std::vector<Bits> adj(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !rs.sum(rs.positive[i], rs.positive[j])) adj[i].set(j);
  return adj;
}

// Greedy colouring bound, then branch in reverse colour order.
class MaxClique {
 public:
  MaxClique(const std::vector<Bits>& adj, std::size_t budget) : adj_(adj), budget_(budget) {}

  std::vector<int> run(int initial_best = 0) {
    best_size_ = initial_best;
    Bits all(adj_.size());
    all.set();
    std::vector<int> cur;
    expand(cur, all);
    return best_;
  }

 private:
  void colour(const Bits& p, std::vector<int>& order, std::vector<int>& bound) {
    Bits left = p;
    int c = 0;
    while (left.any()) {
      ++c;
      Bits q = left;
      while (q.any()) {
        int v = static_cast<int>(q.find_first());
        q.reset(v);
        q &= ~adj_[v];
        left.reset(v);
        order.push_back(v);
        bound.push_back(c);
      }
    }
  }

  void expand(std::vector<int>& cur, Bits p) {
    if (++work_ > budget_) throw BudgetExceeded("clique search budget exceeded");
    std::vector<int> order, bound;
    colour(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(cur.size()) + bound[i] <= best_size_) return;
      int v = order[i];
      cur.push_back(v);
      Bits np = p & adj_[v];
      if (np.none()) {
        if (static_cast<int>(cur.size()) > best_size_) {
          best_size_ = static_cast<int>(cur.size());
          best_ = cur;
        }
      } else {
        expand(cur, np);
      }
      cur.pop_back();
      p.reset(v);
    }
  }

  const std::vector<Bits>& adj_;
  std::size_t budget_;
  std::size_t work_ = 0;
  int best_size_ = 0;
  std::vector<int> best_;
};

}  // namespace

bool is_really_abelian(const RootSystem& rs, const Bits& a) {
  if (!is_abelian(rs, a)) return false;
  if (!cone_closed(rs, a)) return false;
  for (auto i = a.find_first(); i != Bits::npos; i = a.find_next(i)) {
    Bits rest = a;
    rest.reset(i);
    if (!cone_closed(rs, rest)) return false;
  }
  return true;
}

BoundedMax max_abelian(const RootSystem& rs, std::size_t budget) {
  BoundedMax res;
  auto adj = abelian_graph(rs);
  MaxClique mc(adj, budget);
  auto w = mc.run();
  std::sort(w.begin(), w.end());
  res.lower = res.upper = static_cast<int>(w.size());
  res.witness = w;
  res.provenance = "searched";
  return res;
}

BoundedMax max_really_abelian(const RootSystem& rs, std::size_t budget, bool long_running) {
  BoundedMax res;
  int n = rs.num_positive();
  bool large = rs.type == 'E' && rs.rank == 8;
  if (large && !long_running) {
    // Upper bound from the clique search is skipped; only the named sets are checked.
    res.upper = n;
    for (const auto& s : verify_named_free_sets(rs))
      if (s.free && static_cast<int>(s.members.size()) > res.lower) {
        res.lower = static_cast<int>(s.members.size());
        res.witness = s.members;
      }
    res.provenance = "bounded";
    return res;
  }
  auto ab = max_abelian(rs);
  res.upper = ab.lower;
  for (const auto& s : verify_named_free_sets(rs))
    if (s.free && static_cast<int>(s.members.size()) > res.lower) {
      res.lower = static_cast<int>(s.members.size());
      res.witness = s.members;
    }
  if (res.lower == res.upper) {
    res.provenance = "lower+upper-bound";
    return res;
  }
  if (rs.type == 'E') {
    res.provenance = "bounded";
    return res;
  }
  auto adj = abelian_graph(rs);
  std::map<Bits, bool> closed_memo;
  auto closed = [&](const Bits& a) {
    auto it = closed_memo.find(a);
    if (it != closed_memo.end()) return it->second;
    bool c = cone_closed(rs, a);
    closed_memo.emplace(a, c);
    return c;
  };
  std::vector<int> cur;
  std::size_t work = 0;
  Bits cur_bits(n);
  std::function<void(const Bits&)> rec = [&](const Bits& cand) {
    if (static_cast<int>(cur.size()) > res.lower) {
      res.lower = static_cast<int>(cur.size());
      res.witness = cur;
    }
    if (res.lower == res.upper) return;
    Bits left = cand;
    for (auto x = left.find_first(); x != Bits::npos; x = left.find_next(x)) {
      if (static_cast<int>(cur.size() + left.count()) <= res.lower) return;
      if (++work > budget) throw BudgetExceeded("really abelian search budget exceeded");
      int v = static_cast<int>(x);
      Bits next = cur_bits;
      next.set(v);
      bool ok = closed(next);
      for (std::size_t i = 0; ok && i < cur.size(); ++i) {
        Bits rest = next;
        rest.reset(cur[i]);
        ok = closed(rest);
      }
      if (ok) {
        cur.push_back(v);
        cur_bits.set(v);
        Bits nc = left & adj[v];
        nc.reset(v);
        for (auto y = nc.find_first(); y != Bits::npos && static_cast<int>(y) <= v; y = nc.find_next(y)) nc.reset(y);
        rec(nc);
        cur_bits.reset(v);
        cur.pop_back();
        if (res.lower == res.upper) return;
      }
      left.reset(v);
    }
  };
  Bits all(n);
  all.set();
  rec(all);
  res.upper = res.lower;
  std::sort(res.witness.begin(), res.witness.end());
  res.provenance = "searched";
  return res;
}

std::vector<NamedSet> named_free_sets(const RootSystem& rs) {
  std::vector<NamedSet> out;
  auto pos_of = [&](const Vec& v) {
    auto r = rs.find(v);
    if (!r || rs.pos_index[*r] < 0) throw MathError("named root is not positive in " + rs.name());
    return rs.pos_index[*r];
  };
  if (rs.type == 'F') {
    NamedSet s{"F4 six-set", 6, {}, false};
    s.members = {pos_of(unit(4, 0, 2)),       pos_of(plus2(4, 0, 1)),  pos_of(plus2(4, 0, 2)),
                 pos_of(plus2(4, 0, 3)),      pos_of(half_str("+++-")), pos_of(half_str("++++"))};
    out.push_back(s);
  }
  if (rs.type == 'E' && rs.rank == 6) {
    NamedSet s{"Gamma6", 16, {}, false};
    for (int p = 0; p < rs.num_positive(); ++p) {
      const auto& c = rs.coeffs[rs.positive[p]];
      if ((c[0] == 0 || c[0] == 1) && c[5] == 1) s.members.push_back(p);
    }
    out.push_back(s);
  }
  if (rs.type == 'E' && rs.rank == 7) {
    NamedSet s{"Gamma7", 27, {}, false};
    // Coefficient 1 on alpha_7, the end of the long arm.
    for (int p = 0; p < rs.num_positive(); ++p)
      if (rs.coeffs[rs.positive[p]][6] == 1) s.members.push_back(p);
    out.push_back(s);
  }
  if (rs.type == 'E' && rs.rank == 8) {
    NamedSet s{"Gamma8", 36, {}, false};
    for (int i = 1; i < 8; ++i) {
      s.members.push_back(pos_of(plus2(8, 0, i)));
      s.members.push_back(pos_of(diff(8, 0, i)));
    }
    // Half roots with first sign + and zero or two further minus signs.
    for (int p = 0; p < rs.num_positive(); ++p) {
      const auto& v = rs.roots[rs.positive[p]];
      bool halves = std::all_of(v.begin(), v.end(), [](long long x) { return x == 1 || x == -1; });
      if (!halves || v[0] != 1) continue;
      int minus = static_cast<int>(std::count(v.begin(), v.end(), -1));
      if (minus == 0 || minus == 2) s.members.push_back(p);
    }
    out.push_back(s);
  }
  for (auto& s : out) std::sort(s.members.begin(), s.members.end());
  return out;
}

std::vector<NamedSet> verify_named_free_sets(const RootSystem& rs) {
  auto sets = named_free_sets(rs);
  for (auto& s : sets) {
    Bits b(rs.num_positive());
    for (int p : s.members) b.set(p);
    s.free = is_really_abelian(rs, b);
  }
  return sets;
}

PuncturedWeyl punctured_weyl(const RootSystem& rs, std::size_t budget) {
  PuncturedWeyl pw;
  pw.weyl = weyl_enumerate(rs, budget);
  const auto& g = *pw.weyl.group;
  pw.action.group = pw.weyl.group;
  for (int p = 0; p < rs.num_positive(); ++p) pw.action.carrier.push_back(rs.coeff_label(rs.positive[p]));
  pw.action.maps.assign(g.order(), std::vector<int>(rs.num_positive(), -1));
  for (int a = 0; a < g.order(); ++a) {
    const auto& perm = g.permutation(a);
    for (int p = 0; p < rs.num_positive(); ++p) pw.action.maps[a][p] = rs.pos_index[perm[rs.positive[p]]];
  }
  return pw;
}

Bits weyl_word_domain(const RootSystem& rs, const WeylGroup& w, const std::vector<int>& word, int skip) {
  Bits out(rs.num_positive());
  for (int p = 0; p < rs.num_positive(); ++p) {
    int x = rs.positive[p];
    bool ok = true;
    for (std::size_t j = 0; j < word.size() && ok; ++j) {
      x = w.group->permutation(word[j])[x];
      if (static_cast<int>(j) + 1 != skip && rs.pos_index[x] < 0) ok = false;
    }
    if (ok) out.set(p);
  }
  return out;
}

std::vector<int> weyl_word_face(const WeylGroup& w, const std::vector<int>& word, int i) {
  int n = static_cast<int>(word.size());
  if (i < 0 || i > n) throw FormatError("face index out of range");
  if (i == 0) return {word.begin() + 1, word.end()};
  if (i == n) return {word.begin(), word.end() - 1};
  std::vector<int> out(word.begin(), word.begin() + (i - 1));
  out.push_back(w.group->mul(word[i], word[i - 1]));
  out.insert(out.end(), word.begin() + (i + 1), word.end());
  return out;
}

C3Example c3_example(const RootSystem& c3, const WeylGroup& w) {
  if (c3.type != 'C' || c3.rank != 3) throw FormatError("the worked example lives in C3");
  C3Example ex;
  for (int s : {3, 3, 2, 3, 2, 2, 3, 1, 3, 2, 2, 3, 2, 1, 3, 2}) ex.word.push_back(w.simple_reflection(s - 1));
  for (int i : {1, 5, 10, 16}) ex.face_domains.emplace_back(i, weyl_word_domain(c3, w, weyl_word_face(w, ex.word, i)));
  ex.word_domain = weyl_word_domain(c3, w, ex.word);
  return ex;
}

namespace {

std::vector<std::pair<char, int>> components(const std::string& name) {
  std::vector<std::pair<char, int>> out;
  std::size_t start = 0;
  while (start <= name.size()) {
    auto end = name.find('x', start);
    if (end == std::string::npos) end = name.size();
    auto part = name.substr(start, end - start);
    if (part.size() < 2) throw FormatError("bad root system name: " + name);
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    int r = 0;
    try {
      r = std::stoi(part.substr(1));
    } catch (const std::logic_error&) {
      throw FormatError("bad root system name: " + name);
    }
    out.emplace_back(t, r);
    start = end + 1;
  }
  return out;
}

int degree_formula_one(char t, int n) {
  switch (t) {
    case 'A': return (n + 1) * (n + 1) / 4;
    case 'B':
    case 'C': return binom2(n) + 1;
    case 'D': return binom2(n);
    case 'G': return 2;
    case 'F': return 6;
    case 'E': return n == 6 ? 16 : n == 7 ? 27 : 36;
  }
  throw FormatError("unsupported type");
}

int abelian_formula_one(char t, int n) {
  switch (t) {
    case 'A': return (n + 1) * (n + 1) / 4;
    case 'B': return n <= 3 ? 2 * n - 1 : binom2(n) + 1;
    case 'C': return binom2(n + 1);
    case 'D': return binom2(n);
    case 'G': return 3;
    case 'F': return 9;
    case 'E': return n == 6 ? 16 : n == 7 ? 27 : 36;
  }
  throw FormatError("unsupported type");
}

std::vector<TableRow> table(const std::vector<std::string>& names, bool abelian, bool long_running) {
  std::vector<TableRow> rows;
  for (const auto& name : names) {
    TableRow row;
    row.name = name;
    std::set<std::string> prov;
    for (auto [t, r] : components(name)) {
      row.expected += abelian ? abelian_formula_one(t, r) : degree_formula_one(t, r);
      auto rs = build_root_system(t, r);
      if (!abelian && r == 1) {
        // The punctured Weyl group of A1 is the trivial group.
        row.value += 1;
        row.upper += 1;
        prov.insert("searched");
        continue;
      }
      BoundedMax m;
      if (abelian && t == 'E' && r == 8 && !long_running) {
        m.upper = rs.num_positive();
        for (const auto& s : named_free_sets(rs))
          if (is_abelian(rs, [&] {
                Bits b(rs.num_positive());
                for (int p : s.members) b.set(p);
                return b;
              }()))
            m.lower = static_cast<int>(s.members.size());
        m.provenance = "bounded";
      } else {
        m = abelian ? max_abelian(rs) : max_really_abelian(rs, 50'000'000, long_running);
      }
      row.value += m.lower;
      row.upper += m.upper;
      prov.insert(m.provenance);
    }
    row.provenance = prov.count("bounded") ? "bounded" : prov.count("lower+upper-bound") ? "lower+upper-bound" : "searched";
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int degree_formula(const std::string& name) {
  int s = 0;
  for (auto [t, r] : components(name)) s += degree_formula_one(t, r);
  return s;
}

int abelian_formula(const std::string& name) {
  int s = 0;
  for (auto [t, r] : components(name)) s += abelian_formula_one(t, r);
  return s;
}

std::vector<TableRow> degree_table(const std::vector<std::string>& names, bool long_running) {
  return table(names, false, long_running);
}

std::vector<TableRow> abelian_table(const std::vector<std::string>& names, bool long_running) {
  return table(names, true, long_running);
}

}  // namespace pgd
