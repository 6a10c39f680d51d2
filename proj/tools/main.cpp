#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pgd/corpus.hpp"
#include "pgd/degree.hpp"
#include "pgd/io.hpp"
#include "pgd/roots.hpp"

using namespace pgd;

namespace {

enum Exit { Ok = 0, Failure = 1, Format = 2, Budget = 3 };

struct Config {
  std::string target;
  std::string format = "json";
  std::string method = "helly";
  int n_max = -1;
  int n_max_cap = -1;
  std::string variant = "lower-odd";
  int k = 1;
  std::string checker = "auto";
  bool validate = false;
  bool domains = false;
  std::string table;
  std::string verify;
  bool long_running = false;
  std::string emit;
  bool witness = false;
  bool check = false;
  bool no_lemma = false;
  std::size_t weyl_budget = 100'000;
  std::size_t search_budget = 200'000'000;
};

void print(const json& doc) { std::cout << dump_canonical(doc) << "\n"; }

bool is_corpus_spec(const std::string& s) {
  return s.rfind("corpus:", 0) == 0 || !std::filesystem::exists(s);
}

// Corpus spec or JSON document on disk.
struct Loaded {
  json doc;
  Presentation pres;
  std::string kind;
};

Loaded load(const std::string& target) {
  Loaded l;
  if (is_corpus_spec(target)) {
    l.pres = make(target);
    l.kind = l.pres.spiny() ? "partial-groupoid" : "symmetric-set";
    return l;
  }
  l.doc = read_json_file(target);
  l.kind = l.doc.value("kind", "");
  if (l.kind == "partial-groupoid" || l.kind == "group-embedded") {
    auto pg = std::make_shared<const PartialGroupoid>(pg_from_json(l.doc));
    l.pres.spec = target;
    l.pres.pg = pg;
    l.pres.symset = std::make_shared<PgSymSet>(pg);
    l.pres.edgy = std::make_shared<PgEdgy>(pg);
  }
  return l;
}

std::shared_ptr<const PartialGroupoid> need_pg(const Loaded& l) {
  if (!l.pres.pg) throw FormatError("expected a partial groupoid, got " + (l.kind.empty() ? "unknown kind" : l.kind));
  return l.pres.pg;
}

json string_list(const std::vector<std::string>& v) { return json(v); }

int cmd_validate(const Config& c) {
  auto l = load(c.target);
  std::vector<std::string> report;
  if (l.kind == "characteristic-action") {
    report = validate_action(action_from_json(l.doc));
  } else if (l.kind == "partial-group-action") {
    report = validate_partial_group_action(pga_from_json(l.doc));
  } else if (l.kind == "closure-space") {
    closure_from_json(l.doc);
  } else if (l.pres.pg) {
    report = validate(*l.pres.pg);
  } else if (l.pres.symset) {
    report = check_operator_identities(*l.pres.symset, std::max(3, l.pres.symset->dimension() + 1), 200, 1);
  } else {
    throw FormatError("unknown document kind: " + l.kind);
  }
  print({{"kind", l.kind}, {"valid", report.empty()}, {"violations", string_list(report)}});
  return report.empty() ? Ok : Failure;
}

int cmd_degree(const Config& c) {
  auto l = load(c.target);
  DegreeOptions opt;
  opt.method = parse_method(c.method);
  opt.n_max = c.n_max;
  opt.n_max_cap = c.n_max_cap;
  opt.helly_budget = c.search_budget;
  std::shared_ptr<const PartialGroupoid> pg;
  if (l.kind == "characteristic-action") {
    auto a = action_from_json(l.doc);
    pg = a.base;
    opt.action = a;
  } else {
    pg = need_pg(l);
  }
  auto r = degree(pg, opt);
  if (c.format == "table") {
    std::cout << pg->label << ": degree " << r.degree << " (" << to_string(r.method) << ")";
    if (r.brute_run) std::cout << ", brute " << r.brute_degree << " up to n=" << r.brute_n_max;
    std::cout << (r.agree ? "" : ", DISAGREE") << "\n";
  } else {
    print(degree_report_to_json(r, *pg));
  }
  return r.agree ? Ok : Failure;
}

int cmd_helly(const Config& c) {
  auto l = load(c.target);
  if (l.kind == "closure-space") {
    auto cs = closure_from_json(l.doc);
    json out = {{"kind", "closure-space"}, {"points", cs.size()}};
    try {
      auto h = cs.helly(c.search_budget);
      std::vector<std::string> w;
      for (int p : h.witness) w.push_back(cs.labels().empty() ? std::to_string(p) : cs.labels()[p]);
      out["helly_number"] = h.h;
      out["witness"] = w;
      out["empty_not_closed"] = false;
    } catch (const EmptyNotClosed&) {
      out["helly_number"] = nullptr;
      out["empty_not_closed"] = true;
    }
    print(out);
    return Ok;
  }
  CharacteristicAction a;
  if (l.kind == "characteristic-action") {
    a = action_from_json(l.doc);
  } else {
    auto pg = need_pg(l);
    a = pg->native_action ? CharacteristicAction::from_native(pg, *pg->native_action) : canonical_action(pg);
  }
  auto hd = helly_degree(a, c.search_budget);
  json fibers = json::array();
  for (const auto& f : hd.fibers)
    fibers.push_back({{"object", a.base->object_name(f.object)}, {"points", f.points}, {"h", f.h}});
  json out = {{"kind", "characteristic-action"}, {"carrier_size", a.size()}, {"fibers", fibers},
              {"fiber_sup", hd.fiber_sup}, {"empty_not_closed", hd.empty_not_closed}};
  out["helly_number"] = hd.empty_not_closed ? json(nullptr) : json(hd.h);
  if (hd.object >= 0) {
    std::vector<std::string> edges;
    for (int e : hd.edges) edges.push_back(a.base->edge_name(e));
    out["critical_edges"] = edges;
  }
  print(out);
  return Ok;
}

int cmd_segal(const Config& c) {
  auto l = load(c.target);
  auto v = SegalVariant::parse(c.variant, c.k);
  int n_max = c.n_max > 0 ? c.n_max : 2 * c.k + 3;
  std::string checker = c.checker;
  if (checker == "auto") checker = l.pres.pg && v.kind == SegalKind::LowerOdd ? "spiny" : "generic";
  SegalResult r;
  std::function<std::string(int)> name = [](int e) { return std::to_string(e); };
  if (checker == "spiny") {
    if (v.kind != SegalKind::LowerOdd) throw FormatError("the spiny checker decides lower-odd only");
    auto pg = need_pg(l);
    r = check_lower_segal_spiny(*pg, c.k, n_max);
    name = edge_namer(*pg);
  } else if (checker == "words") {
    if (v.kind != SegalKind::LowerOdd) throw FormatError("the word checker decides lower-odd only");
    if (!l.pres.edgy) throw FormatError("input is not edgy");
    r = check_lower_segal_words(*l.pres.edgy, c.k, n_max);
    auto edgy = l.pres.edgy;
    name = [edgy](int e) { return edgy->edge_name(e); };
  } else if (checker == "generic") {
    if (!l.pres.symset) throw FormatError("input has no simplex enumerator");
    r = check_segal_generic(*l.pres.symset, v, n_max);
  } else {
    throw FormatError("unknown checker: " + checker);
  }
  json out = segal_result_to_json(r, name);
  out["variant"] = v.to_string();
  out["checker"] = checker;
  print(out);
  return r.pass ? Ok : Failure;
}

int cmd_action(const Config& c) {
  auto doc = read_json_file(c.target);
  std::string kind = doc.value("kind", "");
  CharacteristicAction a;
  std::vector<std::string> report;
  if (kind == "characteristic-action") {
    a = action_from_json(doc);
  } else if (kind == "partial-group-action") {
    auto pa = pga_from_json(doc);
    report = validate_partial_group_action(pa);
    if (report.empty()) a = transporter(pa, doc.value("label", "L_S(G)")).action;
  } else {
    throw FormatError("expected a characteristic-action or partial-group-action document");
  }
  json out = {{"kind", kind}};
  if (report.empty() && c.validate) report = validate_action(a);
  if (c.validate || !report.empty()) {
    out["valid"] = report.empty();
    out["violations"] = string_list(report);
  }
  if (c.domains && a.base) {
    json doms = json::object();
    for (int e = 0; e < a.base->num_edges(); ++e) {
      std::vector<std::string> pts;
      for (int p : to_points(a.domain(e))) pts.push_back(a.carrier[p]);
      doms[a.base->edge_name(e)] = pts;
    }
    out["domains"] = doms;
  }
  print(out);
  return report.empty() ? Ok : Failure;
}

const std::vector<std::string> kTableNames = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3",
                                              "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

void print_rows(const std::vector<TableRow>& rows, const std::string& title, const std::string& format) {
  if (format == "json") {
    print({{"table", title}, {"rows", table_to_json(rows)}});
    return;
  }
  std::cout << std::left << std::setw(6) << "type" << std::setw(10) << "expected" << std::setw(10) << "value"
            << "provenance\n";
  for (const auto& r : rows) {
    std::string value = r.exact() ? std::to_string(r.value) : std::to_string(r.value) + ".." + std::to_string(r.upper);
    std::cout << std::left << std::setw(6) << r.name << std::setw(10) << r.expected << std::setw(10) << value
              << r.provenance << "\n";
  }
}

int cmd_roots(const Config& c) {
  bool all = c.target == "all";
  std::vector<std::string> names = all ? kTableNames : std::vector<std::string>{c.target};
  if (!c.table.empty()) {
    std::vector<TableRow> rows;
    if (c.table == "degrees") {
      rows = degree_table(names, c.long_running);
    } else if (c.table == "abelian") {
      rows = abelian_table(names, c.long_running);
    } else if (c.table == "really-abelian") {
      if (all) throw FormatError("really-abelian expects one root system");
      auto rs = parse_root_system(c.target);
      auto m = max_really_abelian(rs, c.search_budget, c.long_running);
      if (c.format == "json") {
        auto doc = bounded_to_json(m, rs);
        doc["name"] = rs.name();
        doc["expected"] = degree_formula(rs.name());
        print(doc);
      } else {
        std::cout << rs.name() << ": " << m.lower << (m.exact() ? "" : ".." + std::to_string(m.upper)) << " (" << m.provenance
                  << ")\n";
      }
      return m.exact() ? Ok : Budget;
    } else {
      throw FormatError("unknown table: " + c.table);
    }
    print_rows(rows, c.table, c.format);
    bool exact = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.exact(); });
    bool match = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return !r.exact() || r.value == r.expected; });
    return !match ? Failure : exact ? Ok : Budget;
  }
  auto rs = parse_root_system(c.target);
  if (c.verify == "c3") {
    if (rs.name() != "C3") throw FormatError("--verify c3 needs C3");
    auto w = weyl_enumerate(rs, c.weyl_budget);
    auto ex = c3_example(rs, w);
    json faces = json::array();
    for (const auto& [i, dom] : ex.face_domains) {
      std::vector<std::string> pts;
      for (int p : to_points(dom)) pts.push_back(rs.coeff_label(rs.positive[p]));
      faces.push_back({{"face", i}, {"domain", pts}});
    }
    std::vector<std::string> word;
    for (int g : ex.word) word.push_back(w.group->name(g));
    print({{"word", word}, {"faces", faces}, {"word_domain_empty", ex.word_domain.none()}});
    return ex.word_domain.none() ? Ok : Failure;
  }
  if (c.verify == "gamma") {
    auto sets = verify_named_free_sets(rs);
    json out = json::array();
    bool ok = !sets.empty();
    for (const auto& s : sets) {
      out.push_back({{"name", s.name}, {"size", s.members.size()}, {"expected", s.expected}, {"free", s.free}});
      ok = ok && s.free && static_cast<int>(s.members.size()) == s.expected;
    }
    print({{"root_system", rs.name()}, {"sets", out}});
    return ok ? Ok : Failure;
  }
  if (c.verify == "a2") {
    if (rs.name() != "A2") throw FormatError("--verify a2 needs A2");
    auto pw = punctured_weyl(rs, c.weyl_budget);
    auto t = transporter(pw.action, "weyl:A2");
    auto r = degree(t.image);
    print({{"weyl_order", pw.weyl.group->order()}, {"edges", t.image->num_edges()}, {"degree", r.degree}});
    return t.image->num_edges() == 5 && r.degree == 2 ? Ok : Failure;
  }
  if (!c.verify.empty()) throw FormatError("unknown --verify target: " + c.verify);
  json out = {{"name", rs.name()}, {"roots", rs.num_roots()}, {"positive", rs.num_positive()}};
  auto problems = validate_root_system(rs);
  out["valid"] = problems.empty();
  try {
    auto w = weyl_enumerate(rs, c.weyl_budget);
    out["weyl_order"] = w.group->order();
  } catch (const BudgetExceeded&) {
    out["weyl_order"] = nullptr;
  }
  print(out);
  return problems.empty() ? Ok : Failure;
}

int cmd_corpus(const Config& c) {
  auto p = make(c.target);
  if (!p.pg) throw FormatError(c.target + " is generator-backed and has no finite document");
  auto doc = pg_to_json(*p.pg);
  if (c.emit.empty()) {
    print(doc);
  } else {
    write_json_file(c.emit, doc);
  }
  return Ok;
}

int cmd_sphere(const Config& c) {
  int n = std::stoi(c.target);
  if (n < 1) throw FormatError("sphere dimension must be at least 1");
  auto name = [](int e) { return std::to_string(e); };
  if (c.witness || !c.check) {
    auto w = sphere_witness(n);
    json out = witness_to_json(w, name);
    out["replays"] = replay_sphere_witness(n, w);
    print(out);
    if (!out["replays"].get<bool>()) return Failure;
    if (!c.check) return Ok;
  }
  int n_max = c.n_max > 0 ? c.n_max : 4 * n + 3;
  auto r = sphere_degree_check(n, n_max, !c.no_lemma);
  json lemma = json::array();
  for (const auto& f : r.lemma)
    lemma.push_back({{"r", f.r}, {"s", f.s}, {"families", f.families}, {"failures", f.failures}});
  print({{"n", n}, {"witness_replays", r.witness_replays}, {"generic_pass", r.generic_pass}, {"n_max", r.generic_n_max},
         {"families_checked", r.families_checked}, {"simplicial_pass", r.simplicial_pass}, {"lemma", lemma},
         {"pass", r.pass()}});
  return r.pass() ? Ok : Failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree of finite partial groupoids, Helly numbers and root-system tables"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--search-budget", c.search_budget, "Work budget for Helly and free-set searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--weyl-budget", c.weyl_budget, "Largest Weyl group to enumerate")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Validate a document or corpus spec");
  validate->add_option("input", c.target)->required();

  auto* deg = app.add_subcommand("degree", "Degree by Helly number and/or brute force");
  deg->add_option("input", c.target)->required();
  deg->add_option("--method", c.method)->check(CLI::IsMember({"helly", "brute", "both"}));
  deg->add_option("--nmax", c.n_max, "Brute-force window")->check(CLI::PositiveNumber);
  deg->add_option("--nmax-cap", c.n_max_cap, "Upper limit on the default window")->check(CLI::PositiveNumber);

  auto* helly = app.add_subcommand("helly", "Helly number of a closure space or action");
  helly->add_option("input", c.target)->required();

  auto* segal = app.add_subcommand("segal", "Bounded higher Segal check");
  segal->add_option("input", c.target)->required();
  segal->add_option("--variant", c.variant)->check(CLI::IsMember({"lower-odd", "lower-even", "upper-even", "upper-odd"}));
  segal->add_option("--k", c.k)->required()->check(CLI::PositiveNumber);
  segal->add_option("--nmax", c.n_max)->check(CLI::PositiveNumber);
  segal->add_option("--checker", c.checker)->check(CLI::IsMember({"auto", "generic", "spiny", "words"}));

  auto* action = app.add_subcommand("action", "Validate an action or list edge domains");
  action->add_option("input", c.target)->required();
  action->add_flag("--validate", c.validate);
  action->add_flag("--domains", c.domains);

  auto* roots = app.add_subcommand("roots", "Root systems, punctured Weyl tables and checks");
  roots->add_option("type", c.target, "e.g. F4, or 'all' with --table")->required();
  roots->add_option("--table", c.table)->check(CLI::IsMember({"degrees", "abelian", "really-abelian"}));
  roots->add_option("--verify", c.verify)->check(CLI::IsMember({"c3", "gamma", "a2"}));
  roots->add_flag("--long-running", c.long_running, "Run the E8 searches");

  auto* corpus = app.add_subcommand("corpus", "Build a named example");
  corpus->add_option("spec", c.target)->required();
  corpus->add_option("--emit", c.emit, "Write the document here");

  auto* sphere = app.add_subcommand("sphere", "Symmetric sphere degree checks");
  sphere->add_option("n", c.target)->required();
  sphere->add_flag("--witness", c.witness);
  sphere->add_flag("--check", c.check);
  sphere->add_option("--nmax", c.n_max)->check(CLI::PositiveNumber);
  sphere->add_flag("--no-lemma", c.no_lemma, "Skip the function-family oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : Format;
  }
  try {
    if (*validate) return cmd_validate(c);
    if (*deg) return cmd_degree(c);
    if (*helly) return cmd_helly(c);
    if (*segal) return cmd_segal(c);
    if (*action) return cmd_action(c);
    if (*roots) return cmd_roots(c);
    if (*corpus) return cmd_corpus(c);
    if (*sphere) return cmd_sphere(c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return Budget;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return Format;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Failure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return Format;
  }
  return Format;
}
