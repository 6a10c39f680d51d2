#include "pgd/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <deque>
#include <numeric>
#include <sstream>
#include <thread>

namespace pgd {

int thread_count() {
  if (const char* env = std::getenv("PGD_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string format_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

namespace {

std::string cycle_name(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

void FiniteGroup::finish() {
  identity_ = -1;
  for (int a = 0; a < order_; ++a) {
    bool ok = true;
    for (int b = 0; b < order_ && ok; ++b) ok = mul(a, b) == b && mul(b, a) == b;
    if (ok) {
      identity_ = a;
      break;
    }
  }
  if (identity_ < 0) throw FormatError("group table has no identity");
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw FormatError("group element without inverse: " + names_[a]);
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names, const std::vector<std::vector<int>>& table) {
  FiniteGroup g;
  g.order_ = static_cast<int>(table.size());
  if (g.order_ == 0) throw FormatError("empty group");
  if (names.empty()) {
    for (int i = 0; i < g.order_; ++i) names.push_back("g" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != g.order_) throw FormatError("group names/table size mismatch");
  g.names_ = std::move(names);
  g.table_.resize(static_cast<std::size_t>(g.order_) * g.order_);
  for (int a = 0; a < g.order_; ++a) {
    if (static_cast<int>(table[a].size()) != g.order_) throw FormatError("group table is not square");
    for (int b = 0; b < g.order_; ++b) {
      int c = table[a][b];
      if (c < 0 || c >= g.order_) throw FormatError("group table entry out of range");
      g.table_[static_cast<std::size_t>(a) * g.order_ + b] = c;
    }
  }
  for (int a = 0; a < g.order_; ++a)
    for (int b = 0; b < g.order_; ++b)
      for (int c = 0; c < g.order_; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw FormatError("group table is not associative");
  g.finish();
  return g;
}

std::optional<int> FiniteGroup::find_permutation(const std::vector<int>& p) const {
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

void FiniteGroup::set_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != order_) throw FormatError("name count does not match group order");
  names_ = std::move(names);
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators, std::size_t budget) {
  if (generators.empty()) throw FormatError("no permutation generators");
  std::size_t degree = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw FormatError("permutation generators of different degrees");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < degree; ++i)
      if (sorted[i] != static_cast<int>(i)) throw FormatError("generator is not a permutation");
  }
  FiniteGroup g;
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  g.perms_.push_back(id);
  g.perm_index_.emplace(id, 0);
  for (std::size_t head = 0; head < g.perms_.size(); ++head) {
    for (const auto& s : generators) {
      std::vector<int> q = compose_perm(s, g.perms_[head]);
      if (g.perm_index_.count(q)) continue;
      if (g.perms_.size() >= budget) throw BudgetExceeded("group order exceeds budget");
      g.perm_index_.emplace(q, static_cast<int>(g.perms_.size()));
      g.perms_.push_back(std::move(q));
    }
  }
  g.order_ = static_cast<int>(g.perms_.size());
  for (const auto& p : g.perms_) g.names_.push_back(cycle_name(p));
  if (g.order_ <= 4096) {
    g.table_.resize(static_cast<std::size_t>(g.order_) * g.order_);
    for (int a = 0; a < g.order_; ++a)
      for (int b = 0; b < g.order_; ++b)
        g.table_[static_cast<std::size_t>(a) * g.order_ + b] = g.perm_index_.at(compose_perm(g.perms_[a], g.perms_[b]));
  }
  g.identity_ = 0;
  g.inverse_.resize(g.order_);
  for (int a = 0; a < g.order_; ++a) {
    std::vector<int> inv(degree);
    for (std::size_t i = 0; i < degree; ++i) inv[g.perms_[a][i]] = static_cast<int>(i);
    g.inverse_[a] = g.perm_index_.at(inv);
  }
  return g;
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  return perm_index_.at(compose_perm(perms_[a], perms_[b]));
}

std::optional<int> FiniteGroup::find(const std::string& name) const {
  for (int i = 0; i < order_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw FormatError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "1" : (a == 1 ? "a" : "a^" + std::to_string(a)));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  FiniteGroup g = from_table(names, t);
  g.label = "C" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1) throw FormatError("symmetric group degree must be positive");
  std::vector<std::vector<int>> gens;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  if (n == 1) gens.push_back(id);
  if (n >= 2) {
    std::vector<int> t = id;
    std::swap(t[0], t[1]);
    gens.push_back(t);
  }
  if (n >= 3) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
  }
  FiniteGroup g = from_permutations(gens);
  g.label = "S" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::alternating(int n) {
  std::vector<std::vector<int>> gens;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  for (int i = 2; i < n; ++i) {
    std::vector<int> c = id;
    c[0] = 1;
    c[1] = i;
    c[i] = 0;
    gens.push_back(c);
  }
  if (gens.empty()) gens.push_back(id);
  FiniteGroup g = from_permutations(gens);
  g.label = "A" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 2) throw FormatError("dihedral parameter must be at least 2");
  std::vector<int> r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  if (n == 2) {
    // Klein four group acting on four points.
    FiniteGroup g = from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}});
    g.label = "D2";
    return g;
  }
  FiniteGroup g = from_permutations({r, s});
  g.label = "D" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::quaternion() {
  // Elements (sign, unit) with unit in {1,i,j,k}; index = 2*unit + (sign<0).
  const int mt[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  const char* units[4] = {"1", "i", "j", "k"};
  std::vector<std::string> names;
  for (int u = 0; u < 4; ++u) {
    names.push_back(units[u]);
    names.push_back(std::string("-") + units[u]);
  }
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sa = (a % 2) ? -1 : 1, sb = (b % 2) ? -1 : 1;
      int u = mt[ua][ub][0];
      int s = mt[ua][ub][1] * sa * sb;
      t[a][b] = 2 * u + (s < 0 ? 1 : 0);
    }
  FiniteGroup g = from_table(names, t);
  g.label = "Q8";
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order() * b.order();
  std::vector<std::string> names;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) names.push_back("(" + a.name(x / b.order()) + "," + b.name(x % b.order()) + ")");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
  FiniteGroup g = from_table(names, t);
  g.label = a.label + "x" + b.label;
  return g;
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  auto x = name.find('x');
  if (x != std::string::npos) {
    FiniteGroup g = direct_product(named(name.substr(0, x)), named(name.substr(x + 1)));
    g.label = name;
    return g;
  }
  if (name == "Q8") return quaternion();
  if (name.size() >= 2) {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (...) {
      throw FormatError("unknown group: " + name);
    }
    switch (name[0]) {
      case 'C': return cyclic(n);
      case 'S': return symmetric(n);
      case 'A': return alternating(n);
      case 'D': return dihedral(n);
      default: break;
    }
  }
  throw FormatError("unknown group: " + name);
}

}  // namespace pgd
