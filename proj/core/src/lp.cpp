#include "pgd/lp.hpp"

#include <gmpxx.h>

#include <climits>
#include <numeric>
#include <stdexcept>
#include <type_traits>

namespace pgd {
namespace {

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

struct Frac {
  long long num = 0;
  long long den = 1;
  Frac() = default;
  Frac(long long n) : num(n) {}
  Frac(long long n, long long d) : num(n), den(d) { norm(); }
  void norm() {
    if (den < 0) {
      if (num == LLONG_MIN || den == LLONG_MIN) throw Overflow{};
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    long long g = std::gcd(a.den, b.den);
    long long l = checked_mul(a.den / g, b.den);
    return Frac(checked_add(checked_mul(a.num, l / a.den), -checked_mul(b.num, l / b.den)), l);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    long long g1 = std::gcd(a.num, b.den), g2 = std::gcd(b.num, a.den);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Frac(checked_mul(a.num / g1, b.num / g2), checked_mul(a.den / g2, b.den / g1));
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num == 0) throw std::domain_error("division by zero");
    return a * Frac(b.den, b.num);
  }
  int sign() const { return (num > 0) - (num < 0); }
};

int sign_of(const Frac& f) { return f.sign(); }
int sign_of(const mpq_class& q) { return sgn(q); }

template <class Q>
Q make(long long v) {
  if constexpr (std::is_same_v<Q, mpq_class>)
    return mpq_class(static_cast<long>(v));
  else
    return Q(v);
}

template <class Q>
bool feasible(const std::vector<std::vector<long long>>& columns, const std::vector<long long>& target) {
  const int rows = static_cast<int>(target.size());
  const int m = static_cast<int>(columns.size());
  // Tableau columns: m structural, rows artificial, then rhs.
  const int width = m + rows + 1;
  std::vector<std::vector<Q>> t(rows, std::vector<Q>(width, make<Q>(0)));
  for (int i = 0; i < rows; ++i) {
    long long s = target[i] < 0 ? -1 : 1;
    for (int j = 0; j < m; ++j) t[i][j] = make<Q>(s * columns[j][i]);
    t[i][m + i] = make<Q>(1);
    t[i][width - 1] = make<Q>(s * target[i]);
  }
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = m + i;
  // Phase-1 reduced costs: minus the column sums over artificial rows.
  std::vector<Q> cost(width, make<Q>(0));
  for (int j = 0; j < width; ++j) {
    if (j >= m && j < m + rows) continue;
    Q s(0);
    for (int i = 0; i < rows; ++i) s = s - t[i][j];
    cost[j] = s;
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < m + rows; ++j)
      if (sign_of(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Q best(0);
    for (int i = 0; i < rows; ++i) {
      if (sign_of(t[i][enter]) <= 0) continue;
      Q ratio = t[i][width - 1] / t[i][enter];
      if (leave < 0 || sign_of(ratio - best) < 0 || (sign_of(ratio - best) == 0 && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded phase-1 cannot happen; guard only
    Q piv = t[leave][enter];
    for (int j = 0; j < width; ++j) t[leave][j] = t[leave][j] / piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || sign_of(t[i][enter]) == 0) continue;
      Q f = t[i][enter];
      for (int j = 0; j < width; ++j)
        if (sign_of(t[leave][j]) != 0) t[i][j] = t[i][j] - f * t[leave][j];
    }
    Q f = cost[enter];
    for (int j = 0; j < width; ++j)
      if (sign_of(t[leave][j]) != 0) cost[j] = cost[j] - f * t[leave][j];
    basis[leave] = enter;
  }
  return sign_of(cost[width - 1]) == 0;
}

}  // namespace

bool in_cone_gmp(const std::vector<std::vector<long long>>& columns, const std::vector<long long>& target) {
  return feasible<mpq_class>(columns, target);
}

bool in_cone(const std::vector<std::vector<long long>>& columns, const std::vector<long long>& target) {
  try {
    return feasible<Frac>(columns, target);
  } catch (const Overflow&) {
    return feasible<mpq_class>(columns, target);
  }
}

}  // namespace pgd
