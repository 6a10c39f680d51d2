#include "pgd/action.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pgd {

Bits CharacteristicAction::domain(int edge) const {
  Bits b(carrier.size());
  const auto& m = edge_map[edge];
  for (std::size_t x = 0; x < m.size(); ++x)
    if (m[x] >= 0) b.set(x);
  return b;
}

Bits CharacteristicAction::fiber(int object) const {
  Bits b(carrier.size());
  for (std::size_t x = 0; x < anchor.size(); ++x)
    if (anchor[x] == object) b.set(x);
  return b;
}

Bits CharacteristicAction::star_domain(int object, std::span<const int> top) const {
  Bits b = fiber(object);
  for (int t : top) b &= domain(t);
  return b;
}

std::optional<int> CharacteristicAction::act_word(std::span<const int> spine, int x) const {
  for (int e : spine) {
    x = edge_map[e][x];
    if (x < 0) return std::nullopt;
  }
  return x;
}

Bits CharacteristicAction::word_domain(std::span<const int> spine) const {
  Bits b(carrier.size());
  for (int x = 0; x < size(); ++x)
    if (act_word(spine, x)) b.set(x);
  return b;
}

ClosureSpace CharacteristicAction::closure_space() const {
  std::vector<Bits> gens;
  for (std::size_t e = 0; e < edge_map.size(); ++e) gens.push_back(domain(static_cast<int>(e)));
  return ClosureSpace(size(), std::move(gens), carrier);
}

NativeAction CharacteristicAction::to_native() const { return NativeAction{carrier, anchor, edge_map}; }

CharacteristicAction CharacteristicAction::from_native(std::shared_ptr<const PartialGroupoid> base, const NativeAction& n) {
  CharacteristicAction a;
  a.base = std::move(base);
  a.carrier = n.carrier;
  a.anchor = n.anchor;
  a.edge_map = n.edge_map;
  return a;
}

namespace {

struct LSetChecker {
  const CharacteristicAction& act;
  const PartialGroupoid& pg;
  std::vector<std::string>& report;

  // Result of the simplex with this top row acting on x (the last vertex), if defined.
  std::optional<int> simplex_act(int a, const std::vector<int>& top, int x) const {
    if (act.anchor[x] != a) return std::nullopt;
    int y = x;
    for (int t : top) {
      y = act.edge_map[t][x];
      if (y < 0) return std::nullopt;
    }
    return y;
  }

  std::string word(const std::vector<int>& w) const {
    std::vector<std::string> parts;
    for (int e : w) parts.push_back(pg.edge_name(e));
    return "[" + join(parts, "|") + "]";
  }

  void check(int a, const std::vector<int>& top, int x, std::mt19937& rng) {
    auto res = simplex_act(a, top, x);
    if (!res) return;
    int n = static_cast<int>(top.size());
    std::string at = " on " + act.carrier[x];
    std::vector<int> spine = pg.spine_from_top(a, top);
    auto seq = act.act_word(spine, x);
    if (!seq || *seq != *res) report.push_back("A5 splitting: successive action of " + word(spine) + " differs" + at);
    if (n >= 1) {
      std::vector<int> deg = top;
      int pos = std::uniform_int_distribution<int>(0, n)(rng);
      deg.insert(deg.begin() + pos, pos == 0 ? pg.identity(a) : top[pos - 1]);
      if (simplex_act(a, deg, x) != res) report.push_back("A2 degeneracy: s_" + std::to_string(pos) + word(spine) + at);
    }
    for (int i = 1; i < n; ++i) {
      std::vector<int> face = top;
      face.erase(face.begin() + (i - 1));
      if (simplex_act(a, face, x) != res) report.push_back("A3 inner face: d_" + std::to_string(i) + word(spine) + at);
    }
    if (n >= 2) {
      std::vector<int> face(top.begin(), top.end() - 1);
      if (!simplex_act(a, face, x)) report.push_back("A4 last face: d_" + std::to_string(n) + word(spine) + " undefined" + at);
      std::vector<int> rebased;
      for (int j = 1; j < n; ++j) rebased.push_back(pg.compose(pg.inverse(top[0]), top[j]));
      int y = act.edge_map[top[0]][x];
      if (y < 0 || simplex_act(pg.tgt(top[0]), rebased, y) != res)
        report.push_back("A5 splitting: d_0" + word(spine) + " after " + pg.edge_name(top[0]) + at);
    }
    std::vector<int> there_and_back = spine;
    for (auto it = spine.rbegin(); it != spine.rend(); ++it) there_and_back.push_back(pg.inverse(*it));
    auto back = act.act_word(there_and_back, x);
    if (!back || *back != x) report.push_back("A6 inversion: " + word(there_and_back) + " does not fix" + at);
  }
};

}  // namespace

std::vector<std::string> validate_action(const CharacteristicAction& act, const ActionCheckOptions& opt) {
  std::vector<std::string> report;
  if (!act.base) return {"action has no base"};
  const PartialGroupoid& pg = *act.base;
  int np = act.size();
  if (static_cast<int>(act.anchor.size()) != np) return {"anchor size does not match carrier"};
  if (static_cast<int>(act.edge_map.size()) != pg.num_edges()) return {"edge_action does not cover all edges"};
  for (int x = 0; x < np; ++x)
    if (act.anchor[x] < 0 || act.anchor[x] >= pg.num_objects()) return {"anchor of " + act.carrier[x] + " is not an object"};
  for (const auto& m : act.edge_map)
    if (static_cast<int>(m.size()) != np) return {"edge map size does not match carrier"};

  for (int a = 0; a < pg.num_objects(); ++a) {
    int id = pg.identity(a);
    for (int x = 0; x < np; ++x) {
      bool in_fiber = act.anchor[x] == a;
      int y = act.edge_map[id][x];
      if (in_fiber && y != x) report.push_back("A1 identity: id_" + pg.object_name(a) + " does not fix " + act.carrier[x]);
      if (!in_fiber && y >= 0) report.push_back("A1 identity: id_" + pg.object_name(a) + " acts outside its fiber");
    }
  }
  for (int e = 0; e < pg.num_edges(); ++e) {
    std::vector<int> hit(np, -1);
    for (int x = 0; x < np; ++x) {
      int y = act.edge_map[e][x];
      if (y < 0) continue;
      if (y >= np) {
        report.push_back("edge " + pg.edge_name(e) + " maps outside the carrier");
        continue;
      }
      if (act.anchor[x] != pg.src(e) || act.anchor[y] != pg.tgt(e))
        report.push_back("anchor: " + pg.edge_name(e) + " sends " + act.carrier[x] + " to the wrong fiber");
      if (hit[y] >= 0) report.push_back("injectivity: " + pg.edge_name(e) + " is not injective at " + act.carrier[y]);
      hit[y] = x;
      if (act.edge_map[pg.inverse(e)][y] != x)
        report.push_back("inverse: " + pg.edge_name(pg.inverse(e)) + " does not undo " + pg.edge_name(e) + " on " + act.carrier[x]);
      for (int g : pg.edges_from(pg.tgt(e))) {
        int z = act.edge_map[g][y];
        if (z < 0) continue;
        int c = pg.compose(e, g);
        if (c < 0)
          report.push_back("groupoid: [" + pg.edge_name(e) + "|" + pg.edge_name(g) + "] acts on " + act.carrier[x] +
                           " but is not a 2-simplex");
        else if (act.edge_map[c][x] != z)
          report.push_back("groupoid: composite of [" + pg.edge_name(e) + "|" + pg.edge_name(g) + "] acts inconsistently on " +
                           act.carrier[x]);
      }
    }
  }
  if (!report.empty()) return report;

  std::mt19937 rng(opt.seed);
  LSetChecker lset{act, pg, report};
  if (opt.characteristic) {
    for (int x = 0; x < np; ++x) {
      std::vector<int> star;
      for (int e : pg.edges_from(act.anchor[x]))
        if (act.edge_map[e][x] >= 0) star.push_back(e);
      if (!pg.is_star_simplex(act.anchor[x], star))
        report.push_back("characteristic: the edges acting on " + act.carrier[x] + " do not form a simplex");
    }
  }
  std::size_t visited = 0;
  int checked = 0;
  auto visit = [&](int a, const std::vector<int>& star) {
    ++visited;
    Bits dom = act.star_domain(a, star);
    if (opt.characteristic && dom.none() && !star.empty()) {
      std::vector<int> spine = pg.spine_from_top(a, star);
      report.push_back("characteristic: simplex " + lset.word(spine) + " acts on no point");
    }
    if (checked < opt.samples && dom.any()) {
      ++checked;
      std::vector<int> top = star;
      std::shuffle(top.begin(), top.end(), rng);
      lset.check(a, star, static_cast<int>(dom.find_first()), rng);
      lset.check(a, top, static_cast<int>(dom.find_first()), rng);
    }
  };
  bool sampled = false;
  try {
    for (int a = 0; a < pg.num_objects() && report.size() < 50; ++a)
      pg.for_each_star(a, 1 << 20, [&](const std::vector<int>& s) {
        visit(a, s);
        return report.size() < 50;
      }, opt.simplex_budget - visited);
  } catch (const BudgetExceeded&) {
    sampled = true;
  }
  if (sampled) {
    // Random maximal chains of simplices.
    for (int s = 0; s < opt.samples; ++s) {
      int a = std::uniform_int_distribution<int>(0, pg.num_objects() - 1)(rng);
      std::vector<int> pool = pg.edges_from(a);
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> star;
      for (int e : pool) {
        std::vector<int> next = star;
        next.insert(std::upper_bound(next.begin(), next.end(), e), e);
        if (pg.is_star_simplex(a, next)) star = next;
      }
      visit(a, star);
    }
  }
  if (opt.characteristic) {
    // Non-simplex samples act on no point.
    for (int s = 0; s < opt.samples; ++s) {
      int a = std::uniform_int_distribution<int>(0, std::max(0, pg.num_objects() - 1))(rng);
      if (pg.num_objects() == 0) break;
      std::vector<int> pool = pg.edges_from(a);
      if (pool.empty()) continue;
      std::shuffle(pool.begin(), pool.end(), rng);
      int len = std::uniform_int_distribution<int>(1, static_cast<int>(pool.size()))(rng);
      std::vector<int> star(pool.begin(), pool.begin() + len);
      std::sort(star.begin(), star.end());
      if (pg.is_star_simplex(a, star)) continue;
      if (act.star_domain(a, star).any())
        report.push_back("characteristic: non-simplex " + lset.word(star) + " acts on a point");
    }
  }
  std::sort(report.begin(), report.end());
  report.erase(std::unique(report.begin(), report.end()), report.end());
  return report;
}

CharacteristicAction canonical_action(std::shared_ptr<const PartialGroupoid> pg, std::size_t budget) {
  CharacteristicAction act;
  act.base = pg;
  act.edge_map.assign(pg->num_edges(), {});
  struct Entry {
    int edge, from, to;
  };
  std::vector<Entry> entries;
  for (int a = 0; a < pg->num_objects(); ++a) {
    pg->for_each_star(a, 1 << 20, [&](const std::vector<int>& star) {
      int base = act.size();
      int n = static_cast<int>(star.size());
      std::string tag = pg->object_name(a) + ":{";
      for (int i = 0; i < n; ++i) tag += (i ? "," : "") + pg->edge_name(star[i]);
      tag += "}:";
      for (int i = 0; i <= n; ++i) {
        act.carrier.push_back(tag + std::to_string(i));
        act.anchor.push_back(i == 0 ? a : pg->tgt(star[i - 1]));
      }
      auto m = pg->matrix_form(a, star);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          if (m[i][j] < 0) throw MathError("canonical action: undefined matrix entry in " + tag);
          entries.push_back({m[i][j], base + i, base + j});
        }
      return true;
    }, budget);
  }
  for (auto& m : act.edge_map) m.assign(act.size(), -1);
  for (const auto& en : entries) {
    int& slot = act.edge_map[en.edge][en.from];
    if (slot >= 0 && slot != en.to) throw MathError("canonical action: repeated entry in a matrix row");
    slot = en.to;
  }
  return act;
}

Bits PartialGroupAction::domain(int g) const {
  Bits b(carrier.size());
  for (std::size_t x = 0; x < carrier.size(); ++x)
    if (maps[g][x] >= 0) b.set(x);
  return b;
}

std::vector<std::string> validate_partial_group_action(const PartialGroupAction& pa) {
  std::vector<std::string> report;
  const FiniteGroup& g = *pa.group;
  int n = pa.size();
  if (static_cast<int>(pa.maps.size()) != g.order()) return {"maps do not cover the group"};
  for (int x = 0; x < n; ++x)
    if (pa.maps[g.identity()][x] != x) report.push_back("identity does not fix " + pa.carrier[x]);
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < n; ++x) {
      int y = pa.maps[a][x];
      if (y < 0) continue;
      if (pa.maps[g.inv(a)][y] != x)
        report.push_back("inverse: " + g.name(g.inv(a)) + " does not undo " + g.name(a) + " on " + pa.carrier[x]);
      for (int b = 0; b < g.order(); ++b) {
        int z = pa.maps[b][y];
        if (z < 0) continue;
        if (pa.maps[g.mul(b, a)][x] != z)
          report.push_back("composition: " + g.name(b) + "(" + g.name(a) + " x) defined but not equal to (" + g.name(b) + g.name(a) +
                           ") x for x = " + pa.carrier[x]);
      }
    }
  return report;
}

PartialGroupAction ambient_restriction(const GSet& gs, const std::vector<int>& subset) {
  PartialGroupAction pa;
  pa.group = gs.group;
  std::vector<int> pos(gs.carrier.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    pos[subset[i]] = static_cast<int>(i);
    pa.carrier.push_back(gs.carrier[subset[i]]);
  }
  pa.maps.assign(gs.group->order(), std::vector<int>(subset.size(), -1));
  for (int a = 0; a < gs.group->order(); ++a)
    for (std::size_t i = 0; i < subset.size(); ++i) pa.maps[a][i] = pos[gs.act[a][subset[i]]];
  return pa;
}

Transporter transporter(const PartialGroupAction& pa, const std::string& label) {
  if (pa.carrier.empty()) throw MathError("empty partial group");
  const auto& grp = pa.group;
  std::vector<Bits> dom;
  for (int a = 0; a < grp->order(); ++a) dom.push_back(pa.domain(a));
  Transporter out;
  int width = pa.size();
  auto image = std::make_shared<PartialGroupoid>(group_embedded(grp, [dom, width](std::span<const int> s) {
    Bits b(width);
    b.set();
    for (int x : s) b &= dom[x];
    return b.any();
  }, label));
  const auto& emb = *image->embedding;
  NativeAction native;
  native.carrier = pa.carrier;
  native.anchor.assign(pa.size(), 0);
  int dim = 0;
  for (int x = 0; x < pa.size(); ++x) {
    int count = 0;
    for (int a = 0; a < grp->order(); ++a)
      if (a != grp->identity() && pa.maps[a][x] >= 0) ++count;
    dim = std::max(dim, count);
  }
  for (int e = 0; e < image->num_edges(); ++e) native.edge_map.push_back(pa.maps[emb.element[e]]);
  image->dimension_hint = dim;
  image->embedding->predicate = "all-acting";
  image->native_action = std::make_shared<NativeAction>(native);
  out.image = image;
  out.action = CharacteristicAction::from_native(image, native);

  auto gpd = std::make_shared<PartialGroupoid>();
  gpd->label = "transporter(" + label + ")";
  for (const auto& c : pa.carrier) gpd->add_object(c);
  std::vector<std::vector<int>> edge(grp->order(), std::vector<int>(pa.size(), -1));
  for (int x = 0; x < pa.size(); ++x) {
    int id = gpd->add_edge(grp->name(grp->identity()) + "@" + pa.carrier[x], x, x);
    edge[grp->identity()][x] = id;
    gpd->set_identity(x, id);
  }
  for (int a = 0; a < grp->order(); ++a)
    for (int x = 0; x < pa.size(); ++x)
      if (a != grp->identity() && pa.maps[a][x] >= 0) edge[a][x] = gpd->add_edge(grp->name(a) + "@" + pa.carrier[x], x, pa.maps[a][x]);
  for (int a = 0; a < grp->order(); ++a)
    for (int x = 0; x < pa.size(); ++x)
      if (a != grp->identity() && edge[a][x] >= 0) gpd->set_inverse(edge[a][x], edge[grp->inv(a)][pa.maps[a][x]]);
  for (int a = 0; a < grp->order(); ++a)
    for (int x = 0; x < pa.size(); ++x) {
      int y = pa.maps[a][x];
      if (y < 0) continue;
      for (int b = 0; b < grp->order(); ++b)
        if (pa.maps[b][y] >= 0) gpd->add_composite(edge[a][x], edge[b][y], edge[grp->mul(b, a)][x]);
    }
  gpd->set_star_predicate([](int, std::span<const int>) { return true; });
  gpd->finalize();
  out.groupoid = gpd;
  return out;
}

CharacteristicAction multiplication_action(std::shared_ptr<const PartialGroupoid> pg) {
  CharacteristicAction act;
  act.base = pg;
  for (int f = 0; f < pg->num_edges(); ++f) {
    act.carrier.push_back(pg->edge_name(f));
    act.anchor.push_back(pg->tgt(f));
  }
  act.edge_map.assign(pg->num_edges(), std::vector<int>(pg->num_edges(), -1));
  for (int h = 0; h < pg->num_edges(); ++h)
    for (int f = 0; f < pg->num_edges(); ++f)
      if (pg->tgt(f) == pg->src(h)) act.edge_map[h][f] = pg->compose(f, h);
  return act;
}

CharacteristicAction conjugation_action(std::shared_ptr<const PartialGroupoid> pg) {
  CharacteristicAction act;
  act.base = pg;
  std::vector<int> loops, pos(pg->num_edges(), -1);
  for (int u = 0; u < pg->num_edges(); ++u)
    if (pg->src(u) == pg->tgt(u)) {
      pos[u] = static_cast<int>(loops.size());
      loops.push_back(u);
      act.carrier.push_back(pg->edge_name(u));
      act.anchor.push_back(pg->src(u));
    }
  act.edge_map.assign(pg->num_edges(), std::vector<int>(loops.size(), -1));
  for (int f = 0; f < pg->num_edges(); ++f) {
    int fi = pg->inverse(f);
    for (int u : loops) {
      if (pg->src(u) != pg->src(f)) continue;
      int t2 = pg->compose(fi, u);
      if (t2 < 0) continue;
      int t3 = pg->compose(t2, f);
      if (t3 < 0) continue;
      std::vector<int> top{fi, t2, t3};
      if (pg->top_is_simplex(pg->tgt(f), top)) act.edge_map[f][pos[u]] = pos[t3];
    }
  }
  return act;
}

std::shared_ptr<const SymSet> subdivision(std::shared_ptr<const PartialGroupoid> pg) {
  return std::make_shared<SubdivisionSet>(std::make_shared<PgSymSet>(std::move(pg)));
}

}  // namespace pgd

namespace pgd {

ConjugationSet::ConjugationSet(std::shared_ptr<const PartialGroupoid> pg)
    : pg_(pg), tw_(std::make_shared<PgSymSet>(pg)) {}

std::vector<Simplex> ConjugationSet::simplices(int n) const {
  std::vector<Simplex> out;
  for (auto& z : tw_.simplices(n)) {
    std::vector<int> top(z.begin() + 1, z.end());
    auto spine = pg_->spine_from_top(z[0], top);
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) ok = spine[n - i] == pg_->inverse(spine[n + i]);
    if (ok) out.push_back(std::move(z));
  }
  return out;
}

Simplex ConjugationSet::right(int n, const Simplex& x) const {
  Fn alpha;
  for (int i = 0; i <= n; ++i) alpha.push_back(n + 1 + i);
  return PgSymSet(pg_).act(alpha, 2 * n + 1, x);
}

std::vector<std::string> check_star_injective(const SymSet& e, const std::function<Simplex(int, const Simplex&)>& p,
                                              int max_dim) {
  std::vector<std::string> report;
  for (int n = 1; n <= max_dim; ++n) {
    std::set<std::pair<Simplex, Simplex>> seen;
    for (const auto& x : e.simplices(n)) {
      auto key = std::make_pair(e.act(Fn{0}, n, x), p(n, x));
      if (!seen.insert(key).second)
        report.push_back("star injectivity: two " + std::to_string(n) + "-simplices of " + e.name() + " at " +
                         format_ints(key.first) + " map to " + format_ints(key.second));
    }
  }
  return report;
}

std::vector<std::string> validate_self_actions(std::shared_ptr<const PartialGroupoid> pg, int max_dim) {
  std::vector<std::string> report;
  auto base = std::make_shared<PgSymSet>(pg);
  DecBotSet dec(base);
  auto r1 = check_star_injective(dec, [&](int n, const Simplex& x) { return base->face(0, n + 1, x); }, max_dim);
  report.insert(report.end(), r1.begin(), r1.end());
  ConjugationSet cj(pg);
  auto r2 = check_star_injective(cj, [&](int n, const Simplex& x) { return cj.right(n, x); }, max_dim);
  report.insert(report.end(), r2.begin(), r2.end());
  try {
    auto tw = to_partial_groupoid(*subdivision(pg), max_dim, "tw(" + pg->label + ")");
    auto r3 = validate(tw);
    for (auto& v : r3) report.push_back("tw: " + v);
  } catch (const MathError& err) {
    report.push_back(std::string("tw: ") + err.what());
  }
  return report;
}

}  // namespace pgd
