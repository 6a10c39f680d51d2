#include "pgd/symcore.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pgd {

namespace {

std::uint64_t key2(int f, int g) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f)) << 32) | static_cast<std::uint32_t>(g);
}

}  // namespace

int PartialGroupoid::add_object(const std::string& name) {
  if (object_index_.count(name)) throw FormatError("duplicate object id: " + name);
  int id = num_objects();
  objects_.push_back(name);
  object_index_.emplace(name, id);
  identity_.push_back(-1);
  return id;
}

int PartialGroupoid::add_edge(const std::string& name, int src, int tgt) {
  if (edge_index_.count(name)) throw FormatError("duplicate edge id: " + name);
  if (src < 0 || src >= num_objects() || tgt < 0 || tgt >= num_objects())
    throw FormatError("edge " + name + " references an unknown object");
  int id = num_edges();
  EdgeInfo e;
  e.name = name;
  e.src = src;
  e.tgt = tgt;
  edges_.push_back(e);
  edge_index_.emplace(name, id);
  return id;
}

void PartialGroupoid::set_inverse(int f, int g) {
  edges_.at(f).inv = g;
  edges_.at(g).inv = f;
}

void PartialGroupoid::set_identity(int object, int edge) {
  identity_.at(object) = edge;
  edges_.at(edge).identity = true;
  edges_.at(edge).inv = edge;
}

void PartialGroupoid::add_composite(int f, int g, int gf) {
  auto [it, inserted] = comp_.emplace(key2(f, g), gf);
  if (!inserted && it->second != gf)
    load_issues.push_back("composite of [" + edges_[f].name + "|" + edges_[g].name + "] given twice with different values");
}

void PartialGroupoid::add_star(int object, std::vector<int> star) {
  std::sort(star.begin(), star.end());
  star.erase(std::unique(star.begin(), star.end()), star.end());
  if (stars_.size() < objects_.size()) stars_.resize(objects_.size());
  stars_[object].insert(std::move(star));
}

void PartialGroupoid::set_star_predicate(StarPredicate pred) {
  kind_ = Kind::Predicate;
  pred_ = std::move(pred);
}

void PartialGroupoid::finalize() {
  stars_.resize(objects_.size());
  from_.assign(objects_.size(), {});
  for (int e = 0; e < num_edges(); ++e)
    if (!edges_[e].identity) from_[edges_[e].src].push_back(e);
  for (int a = 0; a < num_objects(); ++a) {
    if (identity_[a] < 0) throw FormatError("object without identity edge: " + objects_[a]);
    if (kind_ == Kind::Explicit) stars_[a].insert(std::vector<int>{});
  }
  for (int e = 0; e < num_edges(); ++e) {
    if (edges_[e].inv < 0) throw FormatError("edge without inverse: " + edges_[e].name);
    // Degenerate 2-simplices present in every symmetric set.
    comp_.emplace(key2(e, identity_[edges_[e].tgt]), e);
    comp_.emplace(key2(identity_[edges_[e].src], e), e);
    comp_.emplace(key2(e, edges_[e].inv), identity_[edges_[e].src]);
  }
}

std::optional<int> PartialGroupoid::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> PartialGroupoid::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

int PartialGroupoid::compose(int f, int g) const {
  auto it = comp_.find(key2(f, g));
  return it == comp_.end() ? -1 : it->second;
}

bool PartialGroupoid::is_star_simplex(int object, std::span<const int> star) const {
  if (star.empty()) return object >= 0 && object < num_objects();
  if (kind_ == Kind::Predicate) return pred_(object, star);
  return stars_[object].count(std::vector<int>(star.begin(), star.end())) > 0;
}

bool PartialGroupoid::top_is_simplex(int object, std::span<const int> top) const {
  std::vector<int> s;
  s.reserve(top.size());
  for (int t : top) {
    if (t < 0 || src(t) != object) return false;
    if (!is_identity(t)) s.push_back(t);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return is_star_simplex(object, s);
}

std::optional<std::vector<int>> PartialGroupoid::top_row(std::span<const int> spine) const {
  std::vector<int> top;
  if (spine.empty()) return top;
  top.push_back(spine[0]);
  for (std::size_t i = 1; i < spine.size(); ++i) {
    if (src(spine[i]) != tgt(top.back())) return std::nullopt;
    int c = compose(top.back(), spine[i]);
    if (c < 0) return std::nullopt;
    top.push_back(c);
  }
  return top;
}

bool PartialGroupoid::spine_is_simplex(std::span<const int> spine) const {
  if (spine.empty()) return true;
  auto top = top_row(spine);
  if (!top) return false;
  return top_is_simplex(src(spine[0]), *top);
}

std::vector<int> PartialGroupoid::spine_from_top(int object, std::span<const int> top) const {
  std::vector<int> spine;
  int prev = identity(object);
  for (int t : top) {
    spine.push_back(compose(inverse(prev), t));
    prev = t;
  }
  return spine;
}

std::vector<std::vector<int>> PartialGroupoid::matrix_form(int object, std::span<const int> top) const {
  std::vector<int> rows;
  rows.push_back(identity(object));
  rows.insert(rows.end(), top.begin(), top.end());
  std::size_t n = rows.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = compose(inverse(rows[i]), rows[j]);
  return m;
}

bool PartialGroupoid::is_nondegenerate(int object, std::span<const int> top) const {
  std::vector<int> s(top.begin(), top.end());
  for (int t : s)
    if (is_identity(t) || src(t) != object) return false;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool PartialGroupoid::for_each_star(int object, int max_size,
                                    const std::function<bool(const std::vector<int>&)>& visit,
                                    std::size_t budget) const {
  const std::vector<int>& pool = from_[object];
  std::vector<int> cur;
  std::size_t visits = 0;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (++visits > budget) throw BudgetExceeded("star enumeration budget exceeded");
    if (!visit(cur)) return false;
    if (static_cast<int>(cur.size()) >= max_size) return true;
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      if (is_star_simplex(object, cur) && !rec(i + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  return rec(0);
}

std::vector<std::vector<int>> PartialGroupoid::stars(int object, int max_size) const {
  std::vector<std::vector<int>> out;
  for_each_star(object, max_size, [&](const std::vector<int>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

int PartialGroupoid::dimension(std::size_t budget) const {
  if (dimension_hint) return *dimension_hint;
  int best = objects_.empty() ? -1 : 0;
  for (int a = 0; a < num_objects(); ++a) {
    if (kind_ == Kind::Explicit) {
      for (const auto& s : stars_[a]) best = std::max(best, static_cast<int>(s.size()));
    } else {
      for_each_star(a, 1 << 20, [&](const std::vector<int>& s) {
        best = std::max(best, static_cast<int>(s.size()));
        return true;
      }, budget);
    }
  }
  return best;
}

bool PartialGroupoid::is_groupoid() const {
  for (int f = 0; f < num_edges(); ++f)
    for (int g = 0; g < num_edges(); ++g)
      if (tgt(f) == src(g) && compose(f, g) < 0) return false;
  for (int a = 0; a < num_objects(); ++a)
    if (!is_star_simplex(a, from_[a])) return false;
  return true;
}

PartialGroupoid PartialGroupoid::reduction() const {
  auto base = std::make_shared<PartialGroupoid>(*this);
  PartialGroupoid r;
  r.label = "reduction(" + label + ")";
  int star = r.add_object("*");
  int id = r.add_edge("id", star, star);
  r.set_identity(star, id);
  std::vector<int> to_red(num_edges(), id);
  std::vector<int> from_red(1, -1);
  for (int e = 0; e < num_edges(); ++e) {
    if (is_identity(e)) continue;
    to_red[e] = r.add_edge(edges_[e].name, star, star);
    from_red.push_back(e);
  }
  for (int e = 0; e < num_edges(); ++e)
    if (!is_identity(e)) r.set_inverse(to_red[e], to_red[inverse(e)]);
  for (int f = 0; f < num_edges(); ++f)
    for (int g = 0; g < num_edges(); ++g) {
      if (tgt(f) != src(g)) continue;
      int c = compose(f, g);
      if (c >= 0) r.add_composite(to_red[f], to_red[g], to_red[c]);
    }
  r.set_star_predicate([base, from_red](int, std::span<const int> star) {
    std::vector<int> orig;
    orig.reserve(star.size());
    int a = -1;
    for (int e : star) {
      int o = from_red[e];
      if (o < 0) return false;
      if (a < 0) a = base->src(o);
      if (base->src(o) != a) return false;
      orig.push_back(o);
    }
    std::sort(orig.begin(), orig.end());
    return base->is_star_simplex(a, orig);
  });
  r.finalize();
  return r;
}

PartialGroupoid PartialGroupoid::opposite() const {
  auto base = std::make_shared<PartialGroupoid>(*this);
  PartialGroupoid r;
  r.label = "opposite(" + label + ")";
  for (const auto& o : objects_) r.add_object(o);
  for (int e = 0; e < num_edges(); ++e) r.add_edge(edges_[e].name, tgt(e), src(e));
  for (int a = 0; a < num_objects(); ++a) r.set_identity(a, identity_[a]);
  for (int e = 0; e < num_edges(); ++e)
    if (!is_identity(e)) r.set_inverse(e, inverse(e));
  for (int f = 0; f < num_edges(); ++f)
    for (int g = 0; g < num_edges(); ++g) {
      if (src(f) != tgt(g)) continue;
      int c = compose(g, f);
      if (c >= 0) r.add_composite(f, g, c);
    }
  r.set_star_predicate([base](int a, std::span<const int> star) {
    std::vector<int> orig;
    for (int e : star) orig.push_back(base->inverse(e));
    std::sort(orig.begin(), orig.end());
    return base->is_star_simplex(a, orig);
  });
  r.dimension_hint = dimension_hint;
  r.finalize();
  return r;
}

std::vector<std::string> validate(const PartialGroupoid& pg, std::size_t budget) {
  std::vector<std::string> report = pg.load_issues;
  auto name = [&](int e) { return e < 0 ? std::string("?") : pg.edge_name(e); };
  auto word = [&](std::span<const int> w) {
    std::vector<std::string> parts;
    for (int e : w) parts.push_back(name(e));
    return "[" + join(parts, "|") + "]";
  };
  int ne = pg.num_edges();
  for (int e = 0; e < ne; ++e) {
    const EdgeInfo& E = pg.edge(e);
    if (E.inv < 0 || E.inv >= ne) {
      report.push_back("inverse τ: edge " + E.name + " has no inverse");
      continue;
    }
    if (pg.inverse(E.inv) != e) report.push_back("inverse τ: not an involution at " + E.name);
    if (pg.src(E.inv) != E.tgt || pg.tgt(E.inv) != E.src)
      report.push_back("inverse τ: source/target of " + name(E.inv) + " do not swap those of " + E.name);
    if (E.identity && (E.src != E.tgt || pg.identity(E.src) != e))
      report.push_back("degeneracy s0: identity edge " + E.name + " is not the loop of its object");
  }
  std::map<std::pair<int, int>, int> left;
  for (int f = 0; f < ne; ++f) {
    if (pg.compose(f, pg.identity(pg.tgt(f))) != f) report.push_back("degeneracy s1: [" + name(f) + "|id] does not compose to " + name(f));
    if (pg.compose(pg.identity(pg.src(f)), f) != f) report.push_back("degeneracy s0: [id|" + name(f) + "] does not compose to " + name(f));
  }
  for (int f = 0; f < ne; ++f) {
    for (int g = 0; g < ne; ++g) {
      int h = pg.compose(f, g);
      if (h < 0) continue;
      if (pg.tgt(f) != pg.src(g)) {
        report.push_back("face d1: composite recorded for non-composable pair [" + name(f) + "|" + name(g) + "]");
        continue;
      }
      if (pg.src(h) != pg.src(f) || pg.tgt(h) != pg.tgt(g))
        report.push_back("face d1: composite of [" + name(f) + "|" + name(g) + "] has wrong endpoints");
      auto [it, fresh] = left.emplace(std::make_pair(f, h), g);
      if (!fresh && it->second != g)
        report.push_back("spine injectivity: [" + name(f) + "|" + name(g) + "] and [" + name(f) + "|" + name(it->second) +
                         "] have the same starry word");
      std::vector<int> top{f, h};
      if (!pg.top_is_simplex(pg.src(f), top))
        report.push_back("2-simplex [" + name(f) + "|" + name(g) + "] is not a simplex in starry form");
    }
  }
  std::size_t visited = 0;
  for (int a = 0; a < pg.num_objects(); ++a) {
    for (int e : pg.edges_from(a)) {
      std::vector<int> s{e};
      if (!pg.is_star_simplex(a, s)) report.push_back("edge " + name(e) + " is not a 1-simplex");
    }
    auto check = [&](const std::vector<int>& star) {
      if (++visited > budget) throw BudgetExceeded("validation budget exceeded");
      if (star.size() < 2) return true;
      for (int t : star)
        if (pg.src(t) != a || pg.is_identity(t))
          report.push_back("simplex " + word(star) + " at " + pg.object_name(a) + " has a foreign or identity entry");
      for (std::size_t i = 0; i < star.size(); ++i) {
        std::vector<int> face = star;
        face.erase(face.begin() + static_cast<long>(i));
        if (!pg.is_star_simplex(a, face))
          report.push_back("face d" + std::to_string(i + 1) + ": missing face " + word(face) + " of starry simplex " + word(star));
      }
      auto m = pg.matrix_form(a, star);
      std::size_t n = m.size();
      bool complete = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (m[i][j] < 0) {
            complete = false;
            report.push_back("coedge ε_" + std::to_string(i) + std::to_string(j) + " undefined for starry simplex " + word(star));
          }
      if (!complete) return true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!pg.is_identity(m[i][i])) report.push_back("matrix form: diagonal entry not an identity in " + word(star));
        for (std::size_t j = 0; j < n; ++j) {
          if (m[j][i] != pg.inverse(m[i][j])) report.push_back("matrix form: f_ji is not the inverse of f_ij in " + word(star));
          for (std::size_t k = 0; k < n; ++k)
            if (pg.compose(m[i][j], m[j][k]) != m[i][k])
              report.push_back("matrix form: f_jk∘f_ij ≠ f_ik at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ") in " + word(star));
        }
      }
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<int> row;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) row.push_back(m[i][j]);
        if (!pg.is_nondegenerate(pg.tgt(star[i - 1]), row)) {
          report.push_back("transposition (0 " + std::to_string(i) + "): row " + std::to_string(i) + " of " + word(star) +
                           " is degenerate");
          continue;
        }
        std::sort(row.begin(), row.end());
        if (!pg.is_star_simplex(pg.tgt(star[i - 1]), row))
          report.push_back("transposition (0 " + std::to_string(i) + "): rebased simplex " + word(row) + " of " + word(star) +
                           " missing");
      }
      return true;
    };
    if (pg.kind() == PartialGroupoid::Kind::Explicit) {
      std::vector<std::vector<int>> sorted(pg.stored_stars(a).begin(), pg.stored_stars(a).end());
      std::sort(sorted.begin(), sorted.end());
      for (const auto& s : sorted) check(s);
    } else {
      pg.for_each_star(a, 1 << 20, check, budget);
    }
  }
  std::sort(report.begin(), report.end());
  report.erase(std::unique(report.begin(), report.end()), report.end());
  return report;
}

void add_chaotic_cell(PartialGroupoid& pg, const std::vector<int>& verts, const std::function<int(int, int)>& edge) {
  std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        pg.add_composite(edge(verts[i], verts[j]), edge(verts[j], verts[k]), edge(verts[i], verts[k]));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(edge(verts[i], verts[j]));
    for (std::uint64_t mask = 0; mask < (1ULL << others.size()); ++mask) {
      std::vector<int> s;
      for (std::size_t b = 0; b < others.size(); ++b)
        if (mask >> b & 1) s.push_back(others[b]);
      pg.add_star(verts[i], s);
    }
  }
}

PartialGroupoid chaotic_subcomplex(const std::vector<std::string>& vertices, const std::vector<std::vector<int>>& faces,
                                   const std::string& label) {
  PartialGroupoid pg;
  pg.label = label;
  int n = static_cast<int>(vertices.size());
  for (const auto& v : vertices) pg.add_object(v);
  std::vector<std::vector<int>> e(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u) {
    e[u][u] = pg.add_edge("id_" + vertices[u], u, u);
    pg.set_identity(u, e[u][u]);
  }
  for (const auto& f : faces)
    for (int u : f)
      for (int v : f)
        if (u != v && e[u][v] < 0) e[u][v] = pg.add_edge(vertices[u] + ">" + vertices[v], u, v);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && e[u][v] >= 0) pg.set_inverse(e[u][v], e[v][u]);
  for (const auto& f : faces) add_chaotic_cell(pg, f, [&](int u, int v) { return e[u][v]; });
  pg.finalize();
  return pg;
}

PartialGroupoid group_embedded(std::shared_ptr<const FiniteGroup> g, std::function<bool(std::span<const int>)> pred,
                               const std::string& label) {
  PartialGroupoid pg;
  pg.label = label;
  int obj = pg.add_object("*");
  GroupEmbedding emb;
  emb.group = g;
  emb.edge_of.assign(g->order(), -1);
  int one = g->identity();
  int id = pg.add_edge(g->name(one), obj, obj);
  pg.set_identity(obj, id);
  emb.element.push_back(one);
  emb.edge_of[one] = id;
  for (int x = 0; x < g->order(); ++x) {
    if (x == one) continue;
    std::vector<int> s{x};
    if (!pred(s)) continue;
    emb.edge_of[x] = pg.add_edge(g->name(x), obj, obj);
    emb.element.push_back(x);
  }
  for (int e = 1; e < pg.num_edges(); ++e) {
    int inv = emb.edge_of[g->inv(emb.element[e])];
    if (inv < 0) throw MathError("group-embedded predicate is not closed under inversion");
    pg.set_inverse(e, inv);
  }
  for (int f = 0; f < pg.num_edges(); ++f)
    for (int h = 0; h < pg.num_edges(); ++h) {
      int prod = g->mul(emb.element[h], emb.element[f]);
      std::vector<int> s;
      if (emb.element[f] != one) s.push_back(emb.element[f]);
      if (prod != one && prod != emb.element[f]) s.push_back(prod);
      std::sort(s.begin(), s.end());
      if (emb.edge_of[prod] >= 0 && pred(s)) pg.add_composite(f, h, emb.edge_of[prod]);
    }
  auto elements = emb.element;
  pg.set_star_predicate([pred, elements](int, std::span<const int> star) {
    std::vector<int> s;
    s.reserve(star.size());
    for (int e : star) s.push_back(elements[e]);
    std::sort(s.begin(), s.end());
    return pred(s);
  });
  pg.embedding = std::move(emb);
  pg.finalize();
  return pg;
}

PartialGroupoid group_nerve(std::shared_ptr<const FiniteGroup> g) {
  PartialGroupoid pg = group_embedded(g, [](std::span<const int>) { return true; }, "B" + g->label);
  pg.dimension_hint = g->order() - 1;
  pg.embedding->predicate = "all";
  return pg;
}

}  // namespace pgd
