#include "pgd/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pgd/corpus.hpp"

namespace pgd {

namespace {

const json& need(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("bad value for ") + what);
  }
}

std::map<std::string, int> index_of(const std::vector<std::string>& names, const char* what) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!out.emplace(names[i], static_cast<int>(i)).second) throw FormatError(std::string("duplicate ") + what + ": " + names[i]);
  return out;
}

int lookup_in(const std::map<std::string, int>& idx, const std::string& name, const char* what) {
  auto it = idx.find(name);
  if (it == idx.end()) throw FormatError(std::string("dangling ") + what + " reference: " + name);
  return it->second;
}

std::vector<std::string> point_labels(const ClosureSpace& cs) {
  if (static_cast<int>(cs.labels().size()) == cs.size()) return cs.labels();
  std::vector<std::string> out;
  for (int i = 0; i < cs.size(); ++i) out.push_back(std::to_string(i));
  return out;
}

// Nondegenerate star sets of every object, sorted.
std::vector<std::pair<int, std::vector<int>>> all_stars(const PartialGroupoid& pg, std::size_t min_size) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int a = 0; a < pg.num_objects(); ++a) {
    std::vector<std::vector<int>> stars;
    if (pg.kind() == PartialGroupoid::Kind::Explicit) {
      stars.assign(pg.stored_stars(a).begin(), pg.stored_stars(a).end());
    } else {
      pg.for_each_star(a, 1 << 20, [&](const std::vector<int>& s) {
        stars.push_back(s);
        return true;
      });
    }
    std::sort(stars.begin(), stars.end());
    for (auto& s : stars)
      if (s.size() >= min_size) out.emplace_back(a, std::move(s));
  }
  return out;
}

json spine_words(const PartialGroupoid& pg, std::size_t min_size, const std::function<std::string(int)>& name) {
  std::map<int, std::vector<std::vector<std::string>>> by_dim;
  for (const auto& [a, star] : all_stars(pg, min_size)) {
    std::vector<std::string> word;
    for (int e : pg.spine_from_top(a, star)) word.push_back(name(e));
    by_dim[static_cast<int>(star.size())].push_back(word);
  }
  json out = json::object();
  for (auto& [n, words] : by_dim) {
    std::sort(words.begin(), words.end());
    out[std::to_string(n)] = words;
  }
  return out;
}

json maps_to_json(const std::vector<std::vector<int>>& maps, const std::function<std::string(int)>& key,
                  const std::vector<std::string>& carrier) {
  json out = json::object();
  for (std::size_t e = 0; e < maps.size(); ++e) {
    json pairs = json::array();
    for (std::size_t x = 0; x < maps[e].size(); ++x)
      if (maps[e][x] >= 0) pairs.push_back({carrier[x], carrier[maps[e][x]]});
    out[key(static_cast<int>(e))] = pairs;
  }
  return out;
}

std::vector<std::vector<int>> maps_from_json(const json& doc, int count, const std::map<std::string, int>& keys,
                                             const std::map<std::string, int>& points, const char* what) {
  std::vector<std::vector<int>> maps(count, std::vector<int>(points.size(), -1));
  if (!doc.is_object()) throw FormatError(std::string(what) + " maps must be an object");
  for (const auto& [k, pairs] : doc.items()) {
    int e = lookup_in(keys, k, what);
    for (const auto& pr : pairs) {
      auto p = get_as<std::vector<std::string>>(pr, "map pair");
      if (p.size() != 2) throw FormatError("map pairs must have two entries");
      int x = lookup_in(points, p[0], "point");
      int y = lookup_in(points, p[1], "point");
      if (maps[e][x] >= 0 && maps[e][x] != y) throw FormatError(std::string(what) + " " + k + " is not a function at " + p[0]);
      maps[e][x] = y;
    }
  }
  return maps;
}

std::shared_ptr<const PartialGroupoid> share(PartialGroupoid pg) {
  return std::make_shared<const PartialGroupoid>(std::move(pg));
}

PartialGroupoid explicit_pg_from_json(const json& doc) {
  PartialGroupoid pg;
  pg.label = doc.value("label", "");
  auto objects = get_as<std::vector<std::string>>(need(doc, "objects"), "objects");
  for (const auto& o : objects) pg.add_object(o);
  std::map<std::string, std::string> inverse_of;
  for (const auto& e : need(doc, "edges")) {
    auto id = get_as<std::string>(need(e, "id"), "edge id");
    auto src = pg.find_object(get_as<std::string>(need(e, "src"), "edge src"));
    auto tgt = pg.find_object(get_as<std::string>(need(e, "tgt"), "edge tgt"));
    if (!src || !tgt) throw FormatError("dangling object reference in edge " + id);
    pg.add_edge(id, *src, *tgt);
    if (e.contains("inv")) inverse_of[id] = get_as<std::string>(e.at("inv"), "edge inv");
  }
  auto edge = [&](const std::string& name) {
    auto e = pg.find_edge(name);
    if (!e) throw FormatError("dangling edge reference: " + name);
    return *e;
  };
  for (const auto& [obj, e] : need(doc, "identities").items()) {
    auto o = pg.find_object(obj);
    if (!o) throw FormatError("dangling object reference in identities: " + obj);
    pg.set_identity(*o, edge(get_as<std::string>(e, "identity")));
  }
  for (const auto& [f, g] : inverse_of)
    if (!pg.is_identity(edge(f))) pg.set_inverse(edge(f), edge(g));
  for (int e = 0; e < pg.num_edges(); ++e)
    if (!pg.is_identity(e)) pg.add_star(pg.src(e), {e});
  if (doc.contains("compositions")) {
    for (const auto& c : doc.at("compositions")) {
      auto t = get_as<std::vector<std::string>>(c, "composition");
      if (t.size() != 3) throw FormatError("compositions are triples [f, g, g∘f]");
      int f = edge(t[0]), g = edge(t[1]), gf = edge(t[2]);
      pg.add_composite(f, g, gf);
      if (!pg.is_identity(f) && !pg.is_identity(gf) && f != gf) pg.add_star(pg.src(f), {f, gf});
    }
  }
  pg.finalize();
  if (doc.contains("simplices")) {
    for (const auto& [dim, words] : doc.at("simplices").items()) {
      for (const auto& w : words) {
        std::vector<int> spine;
        for (const auto& name : get_as<std::vector<std::string>>(w, "simplex word")) spine.push_back(edge(name));
        if (spine.empty()) continue;
        std::vector<int> top{spine[0]};
        bool ok = true;
        for (std::size_t i = 1; ok && i < spine.size(); ++i) {
          int c = pg.src(spine[i]) == pg.tgt(top.back()) ? pg.compose(top.back(), spine[i]) : -1;
          if (c < 0) {
            std::vector<std::string> names;
            for (int e : spine) names.push_back(pg.edge_name(e));
            pg.load_issues.push_back("coedge ε_0" + std::to_string(i + 1) + " undefined for listed word [" + join(names, "|") +
                                     "]");
            ok = false;
          } else {
            top.push_back(c);
          }
        }
        if (!ok) continue;
        std::vector<int> star;
        for (int t : top)
          if (!pg.is_identity(t)) star.push_back(t);
        pg.add_star(pg.src(spine[0]), star);
      }
    }
  }
  return pg;
}

PartialGroupoid embedded_pg_from_json(const json& doc) {
  auto g = group_from_json(need(doc, "group"));
  std::string label = doc.value("label", "");
  std::string pred = doc.value("word_predicate", "explicit");
  PartialGroupoid pg;
  if (pred == "all") {
    pg = group_nerve(g);
  } else if (pred == "commuting") {
    pg = make_bcom(g);
  } else if (pred == "all-acting") {
    json action = need(doc, "action");
    action["group"] = need(doc, "group");
    auto pa = pga_from_json(action);
    pg = *transporter(pa, label).image;
  } else if (pred == "explicit") {
    auto names = g->names();
    auto idx = index_of(names, "group element");
    std::set<std::vector<int>> members;
    for (const auto& [dim, words] : need(doc, "simplices").items()) {
      for (const auto& w : words) {
        int acc = g->identity();
        std::vector<int> star;
        for (const auto& name : get_as<std::vector<std::string>>(w, "simplex word")) {
          acc = g->mul(lookup_in(idx, name, "group element"), acc);
          if (acc != g->identity()) star.push_back(acc);
        }
        std::sort(star.begin(), star.end());
        star.erase(std::unique(star.begin(), star.end()), star.end());
        int k = static_cast<int>(star.size());
        for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
          std::vector<int> sub;
          for (int b = 0; b < k; ++b)
            if (mask >> b & 1) sub.push_back(star[b]);
          members.insert(sub);
        }
      }
    }
    pg = group_embedded(g, [members](std::span<const int> s) {
      return members.count(std::vector<int>(s.begin(), s.end())) > 0;
    }, label);
  } else {
    throw FormatError("unknown word_predicate: " + pred);
  }
  pg.label = label;
  return pg;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << dump_canonical(doc) << "\n";
}

std::string dump_canonical(const json& doc) { return doc.dump(2); }

json group_to_json(const FiniteGroup& g) {
  json out;
  if (!g.label.empty()) out["label"] = g.label;
  out["elements"] = g.names();
  if (g.order() > 10'000) throw FormatError("group of order " + std::to_string(g.order()) + " too large to serialize");
  out["table"] = g.table();
  return out;
}

std::shared_ptr<const FiniteGroup> group_from_json(const json& doc) {
  std::shared_ptr<FiniteGroup> g;
  if (doc.is_string()) {
    g = std::make_shared<FiniteGroup>(FiniteGroup::named(doc.get<std::string>()));
    g->label = doc.get<std::string>();
    return g;
  }
  if (doc.contains("table")) {
    std::vector<std::string> names;
    if (doc.contains("elements")) names = get_as<std::vector<std::string>>(doc.at("elements"), "group elements");
    g = std::make_shared<FiniteGroup>(
        FiniteGroup::from_table(names, get_as<std::vector<std::vector<int>>>(doc.at("table"), "group table")));
  } else if (doc.contains("permutation_generators")) {
    g = std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(
        get_as<std::vector<std::vector<int>>>(doc.at("permutation_generators"), "permutation generators")));
  } else if (doc.contains("name")) {
    g = std::make_shared<FiniteGroup>(FiniteGroup::named(get_as<std::string>(doc.at("name"), "group name")));
    g->label = doc.at("name").get<std::string>();
  } else {
    throw FormatError("group needs \"table\", \"permutation_generators\" or \"name\"");
  }
  if (doc.contains("label")) g->label = get_as<std::string>(doc.at("label"), "group label");
  return g;
}

json pg_to_json(const PartialGroupoid& pg) {
  auto name = edge_namer(pg);
  json out;
  out["label"] = pg.label;
  if (pg.embedding) {
    const auto& emb = *pg.embedding;
    out["kind"] = "group-embedded";
    out["group"] = group_to_json(*emb.group);
    out["word_predicate"] = emb.predicate;
    if (emb.predicate == "all-acting") {
      if (!pg.native_action) throw FormatError("all-acting partial group without its action");
      const auto& na = *pg.native_action;
      std::vector<std::vector<int>> maps(emb.group->order(), std::vector<int>(na.carrier.size(), -1));
      for (int e = 0; e < pg.num_edges(); ++e) maps[emb.element[e]] = na.edge_map[e];
      json action;
      action["carrier"] = na.carrier;
      action["maps"] = maps_to_json(maps, [&](int a) { return emb.group->name(a); }, na.carrier);
      out["action"] = action;
    } else if (emb.predicate == "explicit") {
      out["simplices"] = spine_words(pg, 1, name);
    }
    return out;
  }
  out["kind"] = "partial-groupoid";
  std::vector<std::string> objects;
  json identities = json::object();
  for (int a = 0; a < pg.num_objects(); ++a) {
    objects.push_back(pg.object_name(a));
    identities[pg.object_name(a)] = name(pg.identity(a));
  }
  out["objects"] = objects;
  out["identities"] = identities;
  json edges = json::array();
  for (int e = 0; e < pg.num_edges(); ++e)
    edges.push_back({{"id", name(e)},
                     {"src", pg.object_name(pg.src(e))},
                     {"tgt", pg.object_name(pg.tgt(e))},
                     {"inv", pg.inverse(e) >= 0 ? name(pg.inverse(e)) : name(e)}});
  out["edges"] = edges;
  std::vector<std::array<std::string, 3>> comps;
  for (const auto& [key, gf] : pg.composites()) {
    int f = static_cast<int>(key >> 32), g = static_cast<int>(key & 0xffffffffu);
    if (pg.is_identity(f) || pg.is_identity(g) || pg.inverse(f) == g) continue;
    comps.push_back({name(f), name(g), name(gf)});
  }
  std::sort(comps.begin(), comps.end());
  out["compositions"] = comps;
  out["simplices"] = spine_words(pg, 3, name);
  return out;
}

PartialGroupoid pg_from_json(const json& doc) {
  std::string kind = get_as<std::string>(need(doc, "kind"), "kind");
  if (kind == "partial-groupoid") return explicit_pg_from_json(doc);
  if (kind == "group-embedded") return embedded_pg_from_json(doc);
  throw FormatError("not a partial groupoid document: kind " + kind);
}

json action_to_json(const CharacteristicAction& a) {
  json out;
  out["kind"] = "characteristic-action";
  out["base"] = pg_to_json(*a.base);
  out["carrier"] = a.carrier;
  std::vector<std::string> anchor;
  for (int o : a.anchor) anchor.push_back(a.base->object_name(o));
  out["anchor"] = anchor;
  out["maps"] = maps_to_json(a.edge_map, edge_namer(*a.base), a.carrier);
  return out;
}

CharacteristicAction action_from_json(const json& doc) {
  if (doc.value("kind", "") != "characteristic-action") throw FormatError("not a characteristic-action document");
  CharacteristicAction a;
  a.base = share(pg_from_json(need(doc, "base")));
  a.carrier = get_as<std::vector<std::string>>(need(doc, "carrier"), "carrier");
  auto anchor = get_as<std::vector<std::string>>(need(doc, "anchor"), "anchor");
  if (anchor.size() != a.carrier.size()) throw FormatError("anchor and carrier sizes differ");
  for (const auto& o : anchor) {
    auto id = a.base->find_object(o);
    if (!id) throw FormatError("dangling object reference in anchor: " + o);
    a.anchor.push_back(*id);
  }
  std::map<std::string, int> edges;
  for (int e = 0; e < a.base->num_edges(); ++e) edges[a.base->edge_name(e)] = e;
  a.edge_map = maps_from_json(need(doc, "maps"), a.base->num_edges(), edges, index_of(a.carrier, "point"), "edge");
  return a;
}

json pga_to_json(const PartialGroupAction& pa) {
  json out;
  out["kind"] = "partial-group-action";
  out["group"] = group_to_json(*pa.group);
  out["carrier"] = pa.carrier;
  out["maps"] = maps_to_json(pa.maps, [&](int a) { return pa.group->name(a); }, pa.carrier);
  return out;
}

PartialGroupAction pga_from_json(const json& doc) {
  auto g = group_from_json(need(doc, "group"));
  auto elements = index_of(g->names(), "group element");
  if (doc.contains("ambient")) {
    const auto& amb = doc.at("ambient");
    GSet gs;
    gs.group = g;
    gs.carrier = get_as<std::vector<std::string>>(need(amb, "carrier"), "ambient carrier");
    auto points = index_of(gs.carrier, "point");
    gs.act.assign(g->order(), {});
    for (const auto& [k, images] : need(amb, "act").items()) {
      int a = lookup_in(elements, k, "group element");
      for (const auto& y : get_as<std::vector<std::string>>(images, "ambient images"))
        gs.act[a].push_back(lookup_in(points, y, "point"));
      if (gs.act[a].size() != gs.carrier.size()) throw FormatError("ambient action of " + k + " is not total");
    }
    for (int a = 0; a < g->order(); ++a)
      if (gs.act[a].empty()) throw FormatError("ambient action misses element " + g->name(a));
    std::vector<int> subset;
    for (const auto& s : get_as<std::vector<std::string>>(need(doc, "subset"), "subset"))
      subset.push_back(lookup_in(points, s, "point"));
    return ambient_restriction(gs, subset);
  }
  PartialGroupAction pa;
  pa.group = g;
  pa.carrier = get_as<std::vector<std::string>>(need(doc, "carrier"), "carrier");
  pa.maps = maps_from_json(need(doc, "maps"), g->order(), elements, index_of(pa.carrier, "point"), "group element");
  return pa;
}

json closure_to_json(const ClosureSpace& cs) {
  auto labels = point_labels(cs);
  json gens = json::array();
  for (const auto& g : cs.generators()) {
    std::vector<std::string> pts;
    for (int p : to_points(g)) pts.push_back(labels[p]);
    gens.push_back(pts);
  }
  return {{"kind", "closure-space"}, {"points", labels}, {"generators", gens}};
}

ClosureSpace closure_from_json(const json& doc) {
  if (doc.value("kind", "") != "closure-space") throw FormatError("not a closure-space document");
  auto labels = get_as<std::vector<std::string>>(need(doc, "points"), "points");
  auto idx = index_of(labels, "point");
  std::vector<Bits> gens;
  for (const auto& g : need(doc, "generators")) {
    Bits b(labels.size());
    for (const auto& p : get_as<std::vector<std::string>>(g, "generator")) b.set(lookup_in(idx, p, "point"));
    gens.push_back(b);
  }
  return ClosureSpace(static_cast<int>(labels.size()), std::move(gens), labels);
}

json witness_to_json(const SegalWitness& w, const std::function<std::string(int)>& name) {
  auto names = [&](const std::vector<int>& v) {
    std::vector<std::string> out;
    for (int e : v) out.push_back(name(e));
    return out;
  };
  json faces = json::array();
  for (const auto& f : w.faces) faces.push_back({{"i", f.index}, {"lift", names(f.lift)}});
  json out = {{"n", w.n}, {"I", w.I}, {"word", names(w.word)}, {"faces", faces}, {"reason", w.reason}};
  if (w.fillers) out["fillers"] = w.fillers;
  return out;
}

SegalWitness witness_from_json(const json& doc, const std::function<int(const std::string&)>& lookup) {
  SegalWitness w;
  w.n = get_as<int>(need(doc, "n"), "n");
  w.I = get_as<std::vector<int>>(need(doc, "I"), "I");
  for (const auto& s : get_as<std::vector<std::string>>(need(doc, "word"), "word")) w.word.push_back(lookup(s));
  for (const auto& f : need(doc, "faces")) {
    FaceLift fl;
    fl.index = get_as<int>(need(f, "i"), "face index");
    for (const auto& s : get_as<std::vector<std::string>>(need(f, "lift"), "lift")) fl.lift.push_back(lookup(s));
    w.faces.push_back(fl);
  }
  w.reason = doc.value("reason", "");
  w.fillers = doc.value("fillers", 0);
  return w;
}

json segal_result_to_json(const SegalResult& r, const std::function<std::string(int)>& name) {
  json out = {{"pass", r.pass}, {"n_max", r.n_max}, {"families_checked", r.families_checked}};
  if (r.witness) out["witness"] = witness_to_json(*r.witness, name);
  return out;
}

json degree_report_to_json(const DegreeReport& r, const PartialGroupoid& pg) {
  auto name = edge_namer(pg);
  json out;
  out["label"] = pg.label;
  out["degree"] = r.degree;
  out["method"] = to_string(r.method);
  out["agree"] = r.agree;
  out["empty"] = r.empty;
  out["groupoid"] = r.groupoid;
  out["group"] = r.group;
  out["dimension"] = r.dimension;
  if (!r.action_source.empty()) {
    out["action"] = r.action_source;
    out["carrier_size"] = r.carrier_size;
    out["canonical_compared"] = r.canonical_compared;
  }
  if (r.empty_not_closed)
    out["helly_number"] = nullptr;
  else
    out["helly_number"] = r.helly_number;
  out["empty_not_closed"] = r.empty_not_closed;
  json fibers = json::array();
  for (const auto& f : r.fibers)
    fibers.push_back({{"object", pg.object_name(f.object)}, {"points", f.points}, {"h", f.h}});
  out["fibers"] = fibers;
  if (r.critical_object >= 0) {
    json crit;
    crit["object"] = pg.object_name(r.critical_object);
    std::vector<std::string> edges;
    for (int e : r.critical_edges) edges.push_back(name(e));
    crit["edges"] = edges;
    json fam = json::array();
    for (const auto& b : r.critical_family) fam.push_back(to_points(b));
    crit["family"] = fam;
    out["critical"] = crit;
  }
  if (r.helly_witness) out["helly_witness"] = witness_to_json(*r.helly_witness, name);
  if (r.brute_run) {
    json b = {{"degree", r.brute_degree}, {"n_max", r.brute_n_max}};
    if (r.brute_witness) b["witness"] = witness_to_json(*r.brute_witness, name);
    out["brute"] = b;
  }
  return out;
}

json table_to_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row = {{"name", r.name}, {"expected", r.expected}, {"provenance", r.provenance}, {"exact", r.exact()}};
    if (r.exact()) {
      row["value"] = r.value;
    } else {
      row["lower"] = r.value;
      row["upper"] = r.upper;
    }
    out.push_back(row);
  }
  return out;
}

json bounded_to_json(const BoundedMax& b, const RootSystem& rs) {
  std::vector<std::string> witness;
  for (int p : b.witness) witness.push_back(rs.coeff_label(rs.positive[p]));
  return {{"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact()}, {"provenance", b.provenance}, {"witness", witness}};
}

std::function<std::string(int)> edge_namer(const PartialGroupoid& pg) {
  return [&pg](int e) { return e >= 0 && e < pg.num_edges() ? pg.edge_name(e) : std::string("?"); };
}

std::function<int(const std::string&)> edge_lookup(const PartialGroupoid& pg) {
  return [&pg](const std::string& s) {
    auto e = pg.find_edge(s);
    if (!e) throw FormatError("unknown edge: " + s);
    return *e;
  };
}

}  // namespace pgd
