#include "pgd/corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pgd/roots.hpp"

namespace pgd {

namespace {

std::vector<std::string> vertex_names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}

void subsets_of_size(int n, int size, std::vector<int>& cur, int start, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets_of_size(n, size, cur, v + 1, out);
    cur.pop_back();
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

int parse_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError("bad integer '" + s + "' in corpus spec '" + spec + "'");
  }
}

Presentation wrap(const std::string& spec, PartialGroupoid pg) {
  Presentation p;
  p.spec = spec;
  auto ptr = std::make_shared<const PartialGroupoid>(std::move(pg));
  p.pg = ptr;
  p.symset = std::make_shared<PgSymSet>(ptr);
  p.edgy = std::make_shared<PgEdgy>(ptr);
  return p;
}

std::shared_ptr<const FiniteGroup> named_group(const std::string& name) {
  auto g = std::make_shared<FiniteGroup>(FiniteGroup::named(name));
  g->label = name;
  return g;
}

std::string base_name(const std::string& edge) {
  if (edge.size() > 3 && (edge.back() == 'F' || edge.back() == 'B')) return edge.substr(0, edge.size() - 1);
  return edge;
}

}  // namespace

PartialGroupoid make_na() {
  PartialGroupoid pg;
  pg.label = "NA";
  for (int v = 0; v < 4; ++v) pg.add_object(std::to_string(v));
  std::vector<std::vector<int>> e(4, std::vector<int>(4, -1));
  for (int v = 0; v < 4; ++v) {
    e[v][v] = pg.add_edge("id_" + std::to_string(v), v, v);
    pg.set_identity(v, e[v][v]);
  }
  auto link = [&](int u, int v, const std::string& suffix) {
    int a = pg.add_edge(std::to_string(u) + ">" + std::to_string(v) + suffix, u, v);
    int b = pg.add_edge(std::to_string(v) + ">" + std::to_string(u) + suffix, v, u);
    pg.set_inverse(a, b);
    return std::pair{a, b};
  };
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}) {
    auto [a, b] = link(u, v, "");
    e[u][v] = a;
    e[v][u] = b;
  }
  auto front = link(0, 3, "F");
  auto back = link(0, 3, "B");
  auto edge_with = [&](std::pair<int, int> long_edge) {
    return [&e, long_edge](int u, int v) {
      if (u == 0 && v == 3) return long_edge.first;
      if (u == 3 && v == 0) return long_edge.second;
      return e[u][v];
    };
  };
  add_chaotic_cell(pg, {0, 1, 2}, edge_with(front));
  add_chaotic_cell(pg, {0, 2, 3}, edge_with(front));
  add_chaotic_cell(pg, {0, 1, 3}, edge_with(back));
  add_chaotic_cell(pg, {1, 2, 3}, edge_with(back));
  pg.finalize();
  return pg;
}

PartialGroupoid make_skeleton(int m, int n) {
  if (n < 0 || m < 0) throw FormatError("skeleton needs m, n >= 0");
  m = std::min(m, n);
  std::vector<std::vector<int>> faces;
  std::vector<int> cur;
  subsets_of_size(n, m + 1, cur, 0, faces);
  return chaotic_subcomplex(vertex_names(n), faces, "skeleton:" + std::to_string(m) + "," + std::to_string(n));
}

PartialGroupoid make_boundary(int n) {
  if (n < 1) throw FormatError("boundary needs n >= 1");
  auto pg = make_skeleton(n - 1, n);
  pg.label = "boundary:" + std::to_string(n);
  return pg;
}

PartialGroupoid make_spine(int n) {
  if (n < 1) throw FormatError("spine needs n >= 1");
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < n; ++i) faces.push_back({i, i + 1});
  return chaotic_subcomplex(vertex_names(n), faces, "spine:" + std::to_string(n));
}

PartialGroupoid make_representable(int n) {
  if (n < 0) throw FormatError("representable needs n >= 0");
  std::vector<int> all;
  for (int i = 0; i <= n; ++i) all.push_back(i);
  return chaotic_subcomplex(vertex_names(n), {all}, "representable:" + std::to_string(n));
}

PartialGroupoid make_chaotic(int objects) {
  if (objects < 1) throw FormatError("chaotic groupoid needs at least one object");
  auto pg = make_representable(objects - 1);
  pg.label = "nerve:chaotic:" + std::to_string(objects);
  return pg;
}

PartialGroupoid make_discrete(int objects) {
  if (objects < 1) throw FormatError("discrete groupoid needs at least one object");
  auto pg = make_skeleton(0, objects - 1);
  pg.label = "nerve:discrete:" + std::to_string(objects);
  return pg;
}

PartialGroupoid make_bcom(std::shared_ptr<const FiniteGroup> g) {
  auto pg = group_embedded(g, [g](std::span<const int> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!g->commute(s[i], s[j])) return false;
    return true;
  }, "bcom:" + g->label);
  pg.embedding->predicate = "commuting";
  return pg;
}

Transporter make_lsg(std::shared_ptr<const FiniteGroup> g, const std::vector<int>& subset) {
  GSet gs;
  gs.group = g;
  for (int x = 0; x < g->order(); ++x) gs.carrier.push_back(g->name(x));
  gs.act.assign(g->order(), std::vector<int>(g->order()));
  for (int a = 0; a < g->order(); ++a)
    for (int x = 0; x < g->order(); ++x) gs.act[a][x] = g->mul(a, x);
  auto pa = ambient_restriction(gs, subset);
  return transporter(pa, "lsg:" + g->label + ":" + format_ints(subset));
}

Transporter make_random_lsg(std::shared_ptr<const FiniteGroup> g, int size, unsigned seed) {
  if (size < 1 || size > g->order()) throw FormatError("subset size out of range");
  std::mt19937 rng(seed);
  std::vector<int> pts(g->order());
  for (int i = 0; i < g->order(); ++i) pts[i] = i;
  std::shuffle(pts.begin(), pts.end(), rng);
  pts.resize(size);
  std::sort(pts.begin(), pts.end());
  return make_lsg(g, pts);
}

Transporter make_punctured_weyl(const std::string& root_system) {
  auto rs = parse_root_system(root_system);
  auto pw = punctured_weyl(rs);
  return transporter(pw.action, "weyl:" + rs.name());
}

Presentation make(const std::string& spec_in) {
  std::string spec = spec_in;
  if (spec.rfind("corpus:", 0) == 0) spec = spec.substr(7);
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto need = [&](bool ok) {
    if (!ok) throw FormatError("bad corpus spec: " + spec_in);
  };
  if (head == "na") return wrap(spec, make_na());
  if (head == "na-reduced") {
    auto pg = make_na().reduction();
    pg.label = "NA-reduced";
    return wrap(spec, pg);
  }
  if (head == "empty") {
    PartialGroupoid pg;
    pg.label = "empty";
    pg.finalize();
    return wrap(spec, pg);
  }
  if (head == "representable") return wrap(spec, make_representable(parse_int(rest, spec)));
  if (head == "boundary") return wrap(spec, make_boundary(parse_int(rest, spec)));
  if (head == "spine") return wrap(spec, make_spine(parse_int(rest, spec)));
  if (head == "skeleton") {
    auto mn = split(rest, ',');
    need(mn.size() == 2);
    return wrap(spec, make_skeleton(parse_int(mn[0], spec), parse_int(mn[1], spec)));
  }
  if (head == "sphere" || head == "simplicial-sphere") {
    int n = parse_int(rest, spec);
    need(n >= 1);
    Presentation p;
    p.spec = spec;
    p.symset = std::make_shared<SphereSet>(n, head == "sphere");
    return p;
  }
  if (head == "bcom") return wrap(spec, make_bcom(named_group(rest)));
  if (head == "bcom-monoid") {
    Presentation p;
    p.spec = spec;
    auto b = std::make_shared<BComMonoid>(FiniteMonoid::left_zero_band(), "bcom-monoid");
    p.symset = b;
    p.edgy = b;
    return p;
  }
  if (head == "group") {
    auto pg = group_nerve(named_group(rest));
    return wrap(spec, pg);
  }
  if (head == "nerve") {
    auto parts = split(rest, ':');
    need(parts.size() == 2);
    int k = parse_int(parts[1], spec);
    if (parts[0] == "chaotic") return wrap(spec, make_chaotic(k));
    if (parts[0] == "discrete") return wrap(spec, make_discrete(k));
    need(false);
  }
  if (head == "lsg") {
    auto parts = split(rest, ':');
    need(parts.size() == 2 || parts.size() == 3);
    auto g = named_group(parts[0]);
    int k = parse_int(parts[1], spec);
    Transporter t;
    if (parts.size() == 3) {
      t = make_random_lsg(g, k, static_cast<unsigned>(parse_int(parts[2], spec)));
    } else {
      need(k >= 1 && k <= g->order());
      std::vector<int> pts(k);
      for (int i = 0; i < k; ++i) pts[i] = i;
      t = make_lsg(g, pts);
    }
    auto p = wrap(spec, *t.image);
    return p;
  }
  if (head == "weyl") return wrap(spec, *make_punctured_weyl(rest).image);
  throw FormatError("unknown corpus spec: " + spec_in);
}

bool na_universal_check(const PartialGroupoid& pg, int f, int g, int h) {
  int gf = pg.compose(f, g);
  int hg = pg.compose(g, h);
  if (gf < 0 || hg < 0) return false;
  int left = pg.compose(gf, h);
  int right = pg.compose(f, hg);
  return left >= 0 && right >= 0 && left != right;
}

std::vector<std::vector<int>> na_embeddings(const PartialGroupoid& pg) {
  std::vector<std::vector<int>> out;
  for (int f = 0; f < pg.num_edges(); ++f)
    for (int g : pg.edges_from(pg.tgt(f))) {
      if (pg.compose(f, g) < 0) continue;
      for (int h : pg.edges_from(pg.tgt(g)))
        if (na_universal_check(pg, f, g, h)) out.push_back({f, g, h});
    }
  return out;
}

QuotientCheck na_quotient_check(int max_dim) {
  QuotientCheck out;
  auto na = std::make_shared<const PartialGroupoid>(make_na());
  auto bd = std::make_shared<const PartialGroupoid>(make_boundary(3));
  PgSymSet src(na), dst(bd);
  std::vector<int> edge_map(na->num_edges());
  for (int e = 0; e < na->num_edges(); ++e) {
    auto target = bd->find_edge(base_name(na->edge_name(e)));
    if (!target) {
      out.problems.push_back("edge " + na->edge_name(e) + " has no image");
      return out;
    }
    edge_map[e] = *target;
  }
  auto q = [&](const Simplex& x) {
    Simplex y = x;
    for (std::size_t i = 1; i < y.size(); ++i) y[i] = edge_map[y[i]];
    return y;
  };
  out.map_ok = true;
  for (int n = 0; n <= max_dim; ++n) {
    std::unordered_set<std::vector<int>, VectorHash> hit;
    for (const auto& x : src.simplices(n)) {
      auto y = q(x);
      hit.insert(y);
      if (!bd->top_is_simplex(y[0], std::span<const int>(y).subspan(1))) {
        out.map_ok = false;
        out.problems.push_back("image of " + format_ints(x) + " is no simplex");
        continue;
      }
      for (int i = 0; i <= n && n > 0; ++i)
        if (q(src.face(i, n, x)) != dst.face(i, n, y)) {
          out.map_ok = false;
          out.problems.push_back("face " + std::to_string(i) + " of " + format_ints(x) + " not preserved");
        }
      for (int i = 0; i < n; ++i) {
        Fn swap = identity_fn(n);
        std::swap(swap[i], swap[i + 1]);
        if (q(src.act(swap, n, x)) != dst.act(swap, n, y)) {
          out.map_ok = false;
          out.problems.push_back("transposition " + std::to_string(i) + " of " + format_ints(x) + " not preserved");
        }
      }
    }
    std::size_t missing = 0;
    for (const auto& y : dst.simplices(n))
      if (!hit.count(y)) ++missing;
    if (missing) out.problems.push_back(std::to_string(missing) + " simplices of dimension " + std::to_string(n) + " missed");
  }
  out.surjective = std::none_of(out.problems.begin(), out.problems.end(),
                                [](const std::string& p) { return p.find("missed") != std::string::npos; });
  return out;
}

std::vector<std::string> corpus_specs() {
  std::vector<std::string> specs = {"na", "na-reduced"};
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) specs.push_back("skeleton:" + std::to_string(m - 1) + "," + std::to_string(n));
  for (int n = 1; n <= 4; ++n) specs.push_back("boundary:" + std::to_string(n));
  for (const char* g : {"S3", "D4", "Q8", "C4", "C2xC2"}) specs.push_back(std::string("bcom:") + g);
  for (const char* s : {"lsg:S3:3:1", "lsg:D4:4:2", "lsg:Q8:4:3", "lsg:A4:5:4", "lsg:S4:6:5"}) specs.push_back(s);
  for (const char* w : {"weyl:A2", "weyl:B2", "weyl:G2", "weyl:A3", "weyl:B3", "weyl:C3"}) specs.push_back(w);
  return specs;
}

}  // namespace pgd
