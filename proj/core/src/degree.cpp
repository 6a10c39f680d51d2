#include "pgd/degree.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pgd/symset.hpp"

namespace pgd {

DegreeMethod parse_method(const std::string& s) {
  if (s == "helly") return DegreeMethod::Helly;
  if (s == "brute") return DegreeMethod::Brute;
  if (s == "both") return DegreeMethod::Both;
  throw FormatError("unknown method: " + s);
}

std::string to_string(DegreeMethod m) {
  switch (m) {
    case DegreeMethod::Helly: return "helly";
    case DegreeMethod::Brute: return "brute";
    case DegreeMethod::Both: return "both";
  }
  return "?";
}

namespace {

// One edge per family member: dom(g_i) holds every witness point but x_i, and the meet is empty.
bool refine_to_edges(const CharacteristicAction& a, int object, const std::vector<int>& points,
                     std::vector<int>& edges, std::vector<Bits>& family) {
  const auto& pg = *a.base;
  int h = static_cast<int>(points.size());
  std::vector<std::vector<int>> options(h);
  std::vector<Bits> doms(pg.num_edges());
  for (int g : pg.edges_from(object)) doms[g] = a.domain(g);
  for (int i = 0; i < h; ++i)
    for (int g : pg.edges_from(object)) {
      bool ok = !doms[g].test(points[i]);
      for (int j = 0; ok && j < h; ++j)
        if (j != i && !doms[g].test(points[j])) ok = false;
      if (ok) options[i].push_back(g);
    }
  std::vector<int> pick(h, -1);
  std::function<bool(int, const Bits&)> rec = [&](int i, const Bits& meet) {
    if (i == h) return meet.none();
    for (int g : options[i]) {
      pick[i] = g;
      if (rec(i + 1, meet & doms[g])) return true;
    }
    return false;
  };
  if (!rec(0, a.fiber(object))) return false;
  edges = pick;
  family.clear();
  for (int g : pick) family.push_back(doms[g]);
  return true;
}

int brute_window(const DegreeOptions& opt, int deg, int dim) {
  int n = opt.n_max > 0 ? opt.n_max : deg + dim + 2;
  if (opt.n_max_cap > 0) n = std::min(n, opt.n_max_cap);
  return n;
}

}  // namespace

HellyDegree helly_degree(const CharacteristicAction& a, std::size_t budget) {
  HellyDegree out;
  auto cs = a.closure_space();
  try {
    out.h = cs.canonicalized().helly(budget).h;
  } catch (const EmptyNotClosed&) {
    out.empty_not_closed = true;
  }
  const auto& pg = *a.base;
  int best_obj = -1;
  std::vector<int> best_points;
  for (int obj = 0; obj < pg.num_objects(); ++obj) {
    Bits fib = a.fiber(obj);
    FiberHelly fh{obj, static_cast<int>(fib.count()), 0};
    if (fib.none()) {
      out.fibers.push_back(fh);
      continue;
    }
    auto pts = to_points(fib);
    auto sub = cs.subspace(fib);
    std::vector<int> cls;
    auto canon = sub.canonicalized(&cls);
    try {
      auto hr = canon.helly(budget);
      fh.h = hr.h;
      if (hr.h > out.fiber_sup || best_obj < 0) {
        out.fiber_sup = std::max(out.fiber_sup, hr.h);
        best_obj = obj;
        best_points.clear();
        for (int c : hr.witness) {
          int rep = static_cast<int>(std::find(cls.begin(), cls.end(), c) - cls.begin());
          best_points.push_back(pts[rep]);
        }
      }
    } catch (const EmptyNotClosed&) {
      fh.h = -1;
    }
    out.fibers.push_back(fh);
  }
  if (out.fiber_sup >= 2 && best_obj >= 0) {
    out.object = best_obj;
    if (!refine_to_edges(a, best_obj, best_points, out.edges, out.family))
      throw MathError("independent points do not refine to a critical family of edge domains");
  }
  return out;
}

SegalWitness critical_word(const PartialGroupoid& pg, int object, const std::vector<int>& edges) {
  (void)pg;
  (void)object;
  SegalWitness w;
  w.word = edges;
  std::sort(w.word.begin(), w.word.end());
  w.n = static_cast<int>(w.word.size());
  w.reason = "word does not lift";
  for (int i = 1; i <= w.n; ++i) {
    w.I.push_back(i);
    auto face = w.word;
    face.erase(face.begin() + (i - 1));
    w.faces.push_back({i, face});
  }
  return w;
}

DegreeReport degree(std::shared_ptr<const PartialGroupoid> pg, const DegreeOptions& opt) {
  DegreeReport rep;
  rep.method = opt.method;
  if (pg->empty()) {
    rep.degree = 1;
    rep.empty = true;
    rep.helly_number = 0;
    return rep;
  }
  rep.groupoid = pg->is_groupoid();
  rep.group = rep.groupoid && pg->num_objects() == 1;
  rep.dimension = pg->dimension();
  bool helly = opt.method != DegreeMethod::Brute;
  bool brute = opt.method != DegreeMethod::Helly;

  std::optional<CharacteristicAction> act;
  auto load_action = [&](std::size_t budget) {
    if (opt.action) {
      act = opt.action;
      rep.action_source = "user";
    } else if (pg->native_action) {
      act = CharacteristicAction::from_native(pg, *pg->native_action);
      rep.action_source = "native";
    } else {
      act = canonical_action(pg, budget);
      rep.action_source = "canonical";
    }
    rep.carrier_size = act->size();
  };

  if (helly) {
    if (rep.groupoid) {
      rep.degree = 1;
      try {
        load_action(100'000);
        auto hd = helly_degree(*act, opt.helly_budget);
        rep.helly_number = hd.h;
        rep.empty_not_closed = hd.empty_not_closed;
        rep.fibers = hd.fibers;
      } catch (const BudgetExceeded&) {
      }
    } else {
      load_action(opt.canonical_budget);
      auto hd = helly_degree(*act, opt.helly_budget);
      rep.helly_number = hd.h;
      rep.empty_not_closed = hd.empty_not_closed;
      rep.fibers = hd.fibers;
      if (hd.fiber_sup <= 1) throw MathError("fiber Helly numbers are at most 1 on a non-groupoid");
      rep.degree = hd.fiber_sup;
      rep.critical_object = hd.object;
      rep.critical_edges = hd.edges;
      rep.critical_family = hd.family;
      rep.helly_witness = critical_word(*pg, hd.object, hd.edges);
      if (!replay_spiny_witness(*pg, *rep.helly_witness))
        throw MathError("critical family does not give a failing starry word");
      if (rep.action_source != "canonical" && opt.compare_canonical) {
        std::optional<HellyDegree> canon;
        try {
          canon = helly_degree(canonical_action(pg, opt.compare_budget), opt.helly_budget);
        } catch (const BudgetExceeded&) {
        }
        rep.canonical_compared = canon.has_value();
        if (canon && canon->fiber_sup != hd.fiber_sup)
          throw MathError("supplied action and canonical action give different Helly numbers: " +
                          std::to_string(hd.fiber_sup) + " vs " + std::to_string(canon->fiber_sup));
      }
    }
  }

  if (brute) {
    int dim = rep.dimension;
    int k_max = helly ? rep.degree : dim + 1;
    int n_max = brute_window(opt, helly ? rep.degree : dim + 1, dim);
    auto bd = brute_degree(*pg, n_max, std::max(k_max, 1));
    rep.brute_run = true;
    rep.brute_degree = bd.degree;
    rep.brute_n_max = n_max;
    rep.brute_witness = bd.witness;
    if (helly) {
      rep.agree = bd.degree == rep.degree;
    } else {
      rep.degree = bd.degree;
    }
  }
  return rep;
}

BoundCheck degree_bound_check(std::shared_ptr<const PartialGroupoid> pg) {
  BoundCheck c;
  c.degree = degree(pg).degree;
  c.dimension = pg->dimension();
  c.ok = c.degree <= c.dimension + 1;
  return c;
}

ReductionCheck reduction_invariance_check(std::shared_ptr<const PartialGroupoid> pg) {
  ReductionCheck c;
  c.degree = degree(pg).degree;
  auto red = std::make_shared<PartialGroupoid>(pg->reduction());
  c.reduced_degree = degree(red).degree;
  if (pg->is_groupoid()) {
    int sources = 0;
    for (int a = 0; a < pg->num_objects(); ++a)
      if (!pg->edges_from(a).empty()) ++sources;
    int expected = sources >= 2 ? 2 : 1;
    c.ok = c.reduced_degree == expected;
    c.note = "groupoid: reduction degree " + std::to_string(expected) + " expected";
  } else {
    c.ok = c.reduced_degree == c.degree;
  }
  return c;
}

FunctionLemmaReport function_lemma_check(int r, int s) {
  if (r < 3 || s < 2 * r) throw FormatError("function lemma needs r >= 3 and |S| >= 2r");
  FunctionLemmaReport rep;
  rep.r = r;
  rep.s = s;
  int isize = 2 * r - 1;
  // Functions on S are vectors of length s; -1 marks a removed point.
  auto surjective = [&](const std::vector<int>& f) {
    std::vector<char> hit(r, 0);
    for (int v : f)
      if (v >= 0) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  };
  // Epi classes on S \ i; the trivial class is the empty vector.
  std::vector<std::vector<std::vector<int>>> epis(isize);
  for (int i = 0; i < isize; ++i) {
    std::vector<int> f(s, 0);
    f[i] = -1;
    std::function<void(int)> gen = [&](int t) {
      if (t == s) {
        if (surjective(f)) epis[i].push_back(f);
        return;
      }
      if (t == i) return gen(t + 1);
      for (int v = 0; v < r; ++v) {
        f[t] = v;
        gen(t + 1);
      }
    };
    gen(0);
  }
  auto restrict_class = [&](const std::vector<int>& c, int j) -> std::vector<int> {
    if (c.empty()) return {};
    auto d = c;
    d[j] = -1;
    return surjective(d) ? d : std::vector<int>{};
  };
  auto compatible = [&](const std::vector<int>& ci, int i, const std::vector<int>& cj, int j) {
    return restrict_class(ci, j) == restrict_class(cj, i);
  };
  // Epis on S with all restrictions over I trivial would break uniqueness of the trivial class.
  bool all_trivial_unique = true;
  {
    std::vector<int> f(s, 0);
    std::function<void(int)> gen = [&](int t) {
      if (t == s) {
        if (!surjective(f)) return;
        bool all = true;
        for (int i = 0; all && i < isize; ++i)
          if (!restrict_class(f, i).empty()) all = false;
        if (all) all_trivial_unique = false;
        return;
      }
      for (int v = 0; v < r; ++v) {
        f[t] = v;
        gen(t + 1);
      }
    };
    gen(0);
  }
  std::vector<std::vector<int>> chosen(isize);
  std::function<void(int)> rec = [&](int i) {
    if (i == isize) {
      ++rep.families;
      int epi_at = -1;
      for (int j = 0; j < isize; ++j)
        if (!chosen[j].empty()) {
          epi_at = j;
          break;
        }
      if (epi_at < 0) {
        if (!all_trivial_unique) ++rep.failures;
        return;
      }
      int solutions = 0;
      for (int v = 0; v < r; ++v) {
        auto f = chosen[epi_at];
        f[epi_at] = v;
        bool ok = true;
        for (int j = 0; ok && j < isize; ++j) ok = restrict_class(f, j) == chosen[j];
        if (ok) ++solutions;
      }
      if (solutions != 1) ++rep.failures;
      return;
    }
    // A previous epi whose restriction at i is epi pins the candidate up to one value.
    for (int j = 0; j < i; ++j) {
      auto pinned = restrict_class(chosen[j], i);
      if (pinned.empty()) continue;
      for (int v = 0; v < r; ++v) {
        auto c = pinned;
        c[i] = -1;
        c[j] = v;
        bool ok = true;
        for (int t = 0; ok && t < i; ++t) ok = compatible(chosen[t], t, c, i);
        if (!ok) continue;
        chosen[i] = c;
        rec(i + 1);
      }
      return;
    }
    chosen[i] = {};
    {
      bool ok = true;
      for (int t = 0; ok && t < i; ++t) ok = compatible(chosen[t], t, chosen[i], i);
      if (ok) rec(i + 1);
    }
    for (const auto& c : epis[i]) {
      bool ok = true;
      for (int t = 0; ok && t < i; ++t) ok = compatible(chosen[t], t, c, i);
      if (!ok) continue;
      chosen[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return rep;
}

SegalWitness sphere_witness(int n) {
  SegalWitness w;
  w.reason = "missing filler";
  if (n == 1) {
    w.n = 2;
    w.I = {0, 2};
    w.faces = {{0, {0, 1}}, {2, {0, 1}}};
    return w;
  }
  std::vector<int> a1, b1;
  for (int i = 0; i < n - 1; ++i) a1.push_back(0);
  for (int i = 1; i <= n; ++i) {
    a1.push_back(i);
    b1.push_back(i);
  }
  a1.push_back(0);
  for (int i = 0; i < n; ++i) b1.push_back(0);
  w.n = 2 * n;
  for (int i = 0; i < 2 * n; ++i) {
    w.I.push_back(i);
    w.faces.push_back({i, i < n ? a1 : b1});
  }
  return w;
}

bool replay_sphere_witness(int n, const SegalWitness& w) {
  SphereSet x(n, true);
  int m = w.n;
  // Compatibility d_i x_j = d_{j-1} x_i.
  for (std::size_t p = 0; p < w.faces.size(); ++p)
    for (std::size_t q = p + 1; q < w.faces.size(); ++q) {
      int i = w.faces[p].index, j = w.faces[q].index;
      if (x.face(i, m - 1, w.faces[q].lift) != x.face(j - 1, m - 1, w.faces[p].lift)) return false;
    }
  for (const auto& s : x.simplices(m)) {
    bool fills = true;
    for (const auto& f : w.faces)
      if (x.face(f.index, m, s) != f.lift) {
        fills = false;
        break;
      }
    if (fills) return false;
  }
  if (n >= 2) {
    // a = 0^n 1..n 0 and b = 1..n 0^(n+1) each match half of the faces.
    Simplex a(n, 0), b;
    for (int i = 1; i <= n; ++i) {
      a.push_back(i);
      b.push_back(i);
    }
    a.push_back(0);
    for (int i = 0; i <= n; ++i) b.push_back(0);
    for (const auto& f : w.faces) {
      const Simplex& src = f.index < n ? a : b;
      if (x.face(f.index, m, src) != f.lift) return false;
    }
  }
  return true;
}

bool SphereReport::pass() const {
  bool lemma_ok = std::all_of(lemma.begin(), lemma.end(), [](const FunctionLemmaReport& r) { return r.pass(); });
  return witness_replays && generic_pass && simplicial_pass && lemma_ok;
}

SphereReport sphere_degree_check(int n, int n_max, bool run_lemma) {
  if (n < 1) throw FormatError("sphere dimension must be at least 1");
  SphereReport rep;
  rep.n = n;
  rep.witness = sphere_witness(n);
  rep.witness_replays = replay_sphere_witness(n, rep.witness);
  SegalVariant v{SegalKind::LowerOdd, 2 * n};
  GenericOptions go;
  go.endpoint_reduction = true;
  go.symmetric_reduction = true;
  auto r = check_segal_generic(SphereSet(n, true), v, n_max, go);
  rep.generic_pass = r.pass;
  rep.generic_n_max = n_max;
  rep.families_checked = r.families_checked;
  auto rs = check_segal_generic(SphereSet(n, false), v, n_max, go);
  rep.simplicial_pass = rs.pass;
  if (run_lemma)
    for (int s : {6, 7}) rep.lemma.push_back(function_lemma_check(3, s));
  return rep;
}

}  // namespace pgd
