#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <quiverlab/error.hpp>
#include <quiverlab/monomial.hpp>

#include "context.hpp"
#include "report.hpp"

namespace qcli {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInput = 2;
constexpr int kInconclusive = 10;

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::FinitePdimArrow:
    case ErrorKind::NotASubmodule:
    case ErrorKind::DivisionByZero:
      return kFailed;
    default:
      return kInput;
  }
}

std::string verdict_word(bool ok) { return ok ? "yes" : "no"; }

struct Globals {
  ContextOptions ctx;
  bool json = false;
};

// ---------------------------------------------------------------- algebra

int algebra_info(const Globals& g, const std::string& file) {
  ContextOptions o = g.ctx;
  if (!file.empty()) {
    o.algebra_file = file;
    o.fixture.clear();
  }
  Context ctx(o);
  Output out(g.json);
  const Algebra& a = *ctx.algebra();
  const Quiver& q = a.quiver();
  std::vector<std::size_t> proj;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) proj.push_back(a.basis_from(v).size());
  json j{{"field", a.field().to_string()},
         {"vertices", q.vertex_names()},
         {"arrows", q.arrow_count()},
         {"dim", a.dim()},
         {"degree_sizes", a.degree_sizes()},
         {"monomial", a.is_monomial()},
         {"loewy_length", a.loewy_length()},
         {"projective_dims", proj}};
  std::ostringstream t;
  t << "field " << a.field().to_string() << "\n"
    << "vertices " << q.vertex_count() << ", arrows " << q.arrow_count() << "\n"
    << "dim " << a.dim() << "\n"
    << "basis sizes per degree " << dims_list(a.degree_sizes()) << "\n"
    << "monomial " << verdict_word(a.is_monomial()) << "\n"
    << "Loewy length " << a.loewy_length() << "\n"
    << "dim of projectives by vertex " << dims_list(proj);
  out.emit(j, t.str());
  return kOk;
}

int algebra_show(const Globals& g) {
  Context ctx(g.ctx);
  std::string s = serialize_algebra(*ctx.algebra());
  Output(g.json).emit(json{{"algebra", s}}, s.substr(0, s.size() - 1));
  return kOk;
}

// ----------------------------------------------------------------- module

int module_show(const Globals& g, const std::string& name) {
  Context ctx(g.ctx);
  Representation m = ctx.module(name);
  std::string s = serialize_explicit(name, m);
  Output(g.json).emit(json{{"module", name}, {"dims", m.dims()}, {"explicit", s}}, s.substr(0, s.size() - 1));
  return kOk;
}

int module_pdim(const Globals& g, const std::string& name, std::size_t cutoff) {
  Context ctx(g.ctx);
  Representation m = ctx.module(name);
  PdimOptions o;
  o.cutoff = cutoff;
  o.iso.seed = ctx.seed();
  PdimVerdict v = pdim(m, o);
  bool ok = verify_pdim(m, v, o.iso);
  json j{{"module", name}, {"dims", m.dims()}, {"pdim", to_json(*ctx.algebra(), v)}, {"verified", ok}};
  std::string text = "pdim " + name + " " + describe(m) + " = " + v.to_string();
  if (auto c = certificate_text(*ctx.algebra(), v); !c.empty()) text += "\n" + c;
  text += "\ncertificate " + std::string(ok ? "verified" : "FAILED");
  Output(g.json).emit(j, text);
  if (!ok) return kFailed;
  return v.kind == PdimKind::Unknown ? kInconclusive : kOk;
}

int module_syzygy(const Globals& g, const std::string& name, std::size_t k) {
  Context ctx(g.ctx);
  Output out(g.json);
  auto omegas = syzygies(ctx.module(name), k);
  for (std::size_t i = 0; i < omegas.size(); ++i)
    out.emit(json{{"module", name}, {"k", i}, {"dims", omegas[i].dims()}, {"projective", is_projective(omegas[i])}},
             "Omega^" + std::to_string(i) + " " + describe(omegas[i]) + (is_projective(omegas[i]) ? " projective" : ""));
  return kOk;
}

int module_hom(const Globals& g, const std::string& a, const std::string& b) {
  Context ctx(g.ctx);
  std::size_t d = hom_dim(ctx.module(a), ctx.module(b));
  Output(g.json).emit(json{{"source", a}, {"target", b}, {"hom_dim", d}},
                      "dim Hom(" + a + ", " + b + ") = " + std::to_string(d));
  return kOk;
}

int module_top(const Globals& g, const std::string& name, bool socle_instead) {
  Context ctx(g.ctx);
  Representation m = ctx.module(name);
  std::vector<std::size_t> d = socle_instead ? socle(m).module.dims() : top(m);
  const char* what = socle_instead ? "socle" : "top";
  Output(g.json).emit(json{{"module", name}, {what, d}}, std::string(what) + " " + name + " (" + dims_list(d) + ")");
  return kOk;
}

// ---------------------------------------------------------- approximation

int approx(const Globals& g, const std::string& target, const std::string& family, bool minimize, bool naive) {
  Context ctx(g.ctx);
  Output out(g.json);
  Representation x = ctx.module(target);
  FiniteCategory c = ctx.family(split_list(family), false);
  ApproxCertificate cert = naive ? naive_approximation(c, x) : approximate(c, x);
  if (minimize) cert = right_minimize(cert, MinimizeOptions{64, ctx.seed()});
  bool minimal = is_right_minimal(cert.map);
  bool ok = cert.verify();
  json j{{"target", target},       {"family", split_list(family)}, {"source_dims", cert.source().dims()},
         {"source_dim", cert.source().total_dim()}, {"right_minimal", minimal}, {"verified", ok},
         {"seed", ctx.seed()}};
  std::ostringstream t;
  t << "seed " << ctx.seed() << "\n"
    << "approximation of " << target << ": source " << describe(cert.source()) << " (dim "
    << cert.source().total_dim() << ")\n"
    << "right minimal " << verdict_word(minimal) << "\n"
    << "factorizations " << (ok ? "verified" : "FAILED");
  out.emit(j, t.str());
  return ok ? kOk : kFailed;
}

int approx_scan(const Globals& g, const std::string& target, const std::string& gen, const std::string& range,
                const std::string& ambient) {
  Context ctx(g.ctx);
  Output out(g.json);
  auto [lo, hi] = parse_range(range);
  ScanOptions o;
  o.minimize.seed = ctx.seed();
  for (const auto& n : split_list(ambient)) o.ambient.push_back(ctx.member(n));
  ScanResult s = approximation_growth_scan(ctx.generator(gen), ctx.module(target), hi, o);
  out.text("seed " + std::to_string(ctx.seed()));
  out.text("n  source_dim  minimal  verified");
  bool ok = true;
  for (const auto& r : s.rows) {
    ok = ok && r.minimized && r.witnesses_verified;
    if (r.n < lo) continue;
    out.emit(json{{"n", r.n}, {"source_dim", r.source_dim}, {"minimized", r.minimized},
                  {"verified", r.witnesses_verified}, {"seed", ctx.seed()}},
             std::to_string(r.n) + "  " + std::to_string(r.source_dim) + "  " + verdict_word(r.minimized) + "  " +
                 verdict_word(r.witnesses_verified));
  }
  bool growth = scan_shows_growth(s.rows, std::min<std::size_t>(3, s.rows.size()));
  out.emit(json{{"monotone", scan_is_monotone(s.rows)}, {"growth", growth}, {"verified", ok}},
           std::string("monotone ") + verdict_word(scan_is_monotone(s.rows)) + ", growth over last stages " +
               verdict_word(growth));
  return ok ? kOk : kFailed;
}

int nn_verify(const Globals& g, const std::string& p, const std::string& q, const std::string& range) {
  Context ctx(g.ctx);
  Output out(g.json);
  auto [lo, hi] = parse_range(range);
  if (lo == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  bool all = true;
  for (std::size_t n = lo; n <= hi; ++n) {
    NnReport r = verify_Nn_syzygy_split(ctx.algebra(), ctx.element(p), ctx.element(q), n);
    all = all && r.passed();
    json j{{"n", n},
           {"intersection_zero", r.intersection_zero},
           {"kernel_is_direct", r.kernel_is_direct},
           {"summands_isomorphic", r.summands_isomorphic},
           {"pdim_pair", to_json(*ctx.algebra(), r.pdim_pair)},
           {"pdim_module", to_json(*ctx.algebra(), r.pdim_module)},
           {"pdim_consistent", r.pdim_consistent},
           {"dimension_law", r.dimension_law},
           {"module_dim", r.module_dim},
           {"passed", r.passed()}};
    std::ostringstream t;
    t << "n=" << n << " dim " << r.module_dim << ": intersection zero " << verdict_word(r.intersection_zero)
      << ", kernel direct " << verdict_word(r.kernel_is_direct) << ", summands ~ pair module "
      << verdict_word(r.summands_isomorphic) << ", pdim pair " << r.pdim_pair.to_string() << ", pdim N_n "
      << r.pdim_module.to_string() << ", dimension law " << verdict_word(r.dimension_law) << " => "
      << (r.passed() ? "passed" : "FAILED");
    out.emit(j, t.str());
  }
  return all ? kOk : kFailed;
}

// --------------------------------------------------------------- criteria

int criterion1(const Globals& g, const std::string& p, const std::string& q, const std::string& file,
               const std::string& with) {
  Context ctx(g.ctx);
  Output out(g.json);
  Criterion1Options o;
  o.pdim.iso.seed = ctx.seed();
  if (!file.empty())
    for (const auto& e : load_modules(ctx.algebra(), file)) o.counterexamples.push_back(e.module);
  for (const auto& n : split_list(with)) o.counterexamples.push_back(ctx.module(n));
  CriterionReport r = criterion1_check(ctx.algebra(), ctx.path(p), ctx.path(q), o);
  out.text("criterion1 p=" + p + " q=" + q);
  emit_criterion(out, *ctx.algebra(), r);
  return criterion_exit(r);
}

int criterion10(const Globals& g, const std::string& file, std::optional<std::size_t> n_max) {
  Context ctx(g.ctx);
  Output out(g.json);
  ZipperFile z = parse_zipper_file(ctx, read_file(file));
  Criterion10Options o;
  o.n_max = n_max.value_or(z.n_max);
  o.pdim.iso.seed = ctx.seed();
  CriterionReport r = criterion10_check(ctx.algebra(), z.spec, o);
  out.text("criterion10 over " + std::to_string(z.spec.m()) + " vertices, n <= " + std::to_string(o.n_max));
  emit_criterion(out, *ctx.algebra(), r);
  return criterion_exit(r);
}

int remark11(const Globals& g, const std::string& vertex, const std::string& arrows) {
  Context ctx(g.ctx);
  Output out(g.json);
  const Algebra& a = *ctx.algebra();
  std::vector<std::size_t> idx;
  for (const auto& n : split_list(arrows)) idx.push_back(a.quiver().arrow_index(n));
  SeedReport s = remark11_seed(ctx.algebra(), ctx.vertex(vertex), idx);
  json pd = json::array();
  std::ostringstream t;
  t << "seed at vertex " << vertex << "\n";
  for (std::size_t i = 0; i < s.arrows.size(); ++i) {
    pd.push_back(to_json(a, s.arrow_pdims[i]));
    t << "  pdim L(" << a.quiver().arrow(s.arrows[i]).name << ") = " << s.arrow_pdims[i].to_string() << "\n";
  }
  t << "  direct summand of the radical " << verdict_word(s.summand_split) << "\n"
    << "  pdim S" << vertex << " = " << s.simple_pdim.to_string() << "\n"
    << "  forced subgraph:";
  for (const auto& e : s.subgraph) t << " " << e;
  out.emit(json{{"vertex", vertex}, {"arrows", split_list(arrows)}, {"arrow_pdims", pd},
                {"summand_split", s.summand_split}, {"simple_pdim", to_json(a, s.simple_pdim)},
                {"subgraph", s.subgraph}, {"certified", s.summand_split}},
           t.str());
  return s.summand_split ? kOk : kFailed;
}

// ------------------------------------------------------------------ tower

int tower(const Globals& g, const std::string& target, const std::string& dfile, const std::string& dgen,
          std::size_t budget, bool dot, const std::string& ambient) {
  Context ctx(g.ctx);
  Output out(g.json);
  if (dfile.empty() == dgen.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --dfile, --dgen");
  FamilyGenerator d;
  if (!dfile.empty()) {
    auto entries = load_modules(ctx.algebra(), dfile);
    if (entries.size() < budget)
      throw Error(ErrorKind::InvalidArgument, dfile + " holds " + std::to_string(entries.size()) +
                                                  " modules; budget " + std::to_string(budget) + " needs that many");
    d = [entries](std::size_t n) {
      const auto& e = entries.at(n - 1);
      return FamilyMember{e.name, e.module, pdim(e.module)};
    };
  } else {
    d = ctx.generator(dgen);
  }
  TowerOptions o;
  o.budget = budget;
  o.seed = ctx.seed();
  for (const auto& n : split_list(ambient)) o.ambient.push_back(ctx.member(n));
  PhantomTower t = phantom_tower(ctx.module(target), d, o);
  if (dot) {
    std::cout << tower_dot(t);
    return t.coherent() ? kOk : kFailed;
  }
  TowerReport r = tower_report(t);
  out.text("seed " + std::to_string(ctx.seed()));
  for (const auto& s : t.stages)
    out.emit(json{{"stage", s.index}, {"dims", s.approx.source().dims()}, {"dim", s.approx.source().total_dim()},
                  {"pdim", s.pdim ? json(s.pdim->to_string()) : json(nullptr)}},
             "A_" + std::to_string(s.index) + " " + describe(s.approx.source()) + " dim " +
                 std::to_string(s.approx.source().total_dim()) + (s.pdim ? " pdim " + s.pdim->to_string() : ""));
  bool unstable = false;
  for (const auto& u : t.u) {
    unstable = unstable || (u.stable && !*u.stable);
    std::string st = u.stable ? (*u.stable ? "stable" : "UNSTABLE") : "unchecked";
    out.emit(json{{"U", u.stage}, {"dim", u.dim}, {"mode", to_string(u.mode)}, {"parameters", u.parameters},
                  {"stable", u.stable ? json(*u.stable) : json(nullptr)}},
             "U_" + std::to_string(u.stage) + " dim " + std::to_string(u.dim) + " (" + to_string(u.mode) + ", " +
                 std::to_string(u.parameters) + " parameters, " + st + ")");
  }
  out.emit(json{{"u_dims", r.u_dims},
                {"coherent", r.coherent},
                {"growth", r.growth},
                {"verdict", r.verdict},
                {"budget_exhausted", t.budget_exhausted},
                {"stop_reason", t.stop_reason},
                {"seed", ctx.seed()}},
           "U-dims " + dims_list(r.u_dims) + "; coherent " + verdict_word(r.coherent) + "; " + r.verdict +
               (t.stop_reason.empty() ? "" : " (" + t.stop_reason + ")"));
  if (!r.coherent || unstable) return kFailed;
  return r.verdict == "no growth evidence" ? kInconclusive : kOk;
}

int subfactor(const Globals& g, const std::string& b, const std::string& a) {
  Context ctx(g.ctx);
  SubfactorOptions o;
  o.seed = ctx.seed();
  SubfactorVerdict v = subfactor_check(ctx.module(b), ctx.module(a), o);
  json j{{"sub", b}, {"of", a}, {"status", to_string(v.status)}, {"reason", v.reason}, {"seed", ctx.seed()}};
  std::string text = "seed " + std::to_string(ctx.seed()) + "\n" + b + " subfactor of " + a + ": " +
                     to_string(v.status) + " - " + v.reason;
  if (v.sub) {
    j["sub_dims"] = v.sub->module.dims();
    text += " [U " + describe(v.sub->module) + "]";
  }
  Output(g.json).emit(j, text);
  return v.status == SubfactorStatus::Unknown ? kInconclusive : kOk;
}

// --------------------------------------------------------------- fixtures

int fixture_list(const Globals& g) {
  Output out(g.json);
  for (const auto& id : fixture_ids()) {
    FixtureBundle b = load_fixture(id);
    out.emit(json{{"id", id}, {"title", b.title}, {"rows", b.table.size()}},
             id + "  " + b.title + " (" + std::to_string(b.table.size()) + " rows)");
  }
  return kOk;
}

int fixture_run(const Globals& g, const std::vector<std::string>& ids) {
  Output out(g.json);
  std::vector<std::string> todo = ids;
  if (todo.size() == 1 && todo[0] == "all") todo = fixture_ids();
  bool all = true;
  for (const auto& id : todo) {
    FixtureBundle b = load_fixture(id);
    out.text(id + ": " + b.title);
    std::size_t passed = 0;
    auto rows = b.run();
    for (const auto& r : rows) {
      passed += r.passed;
      std::ostringstream t;
      t << "  [" << (r.passed ? "pass" : "FAIL") << "] " << r.key << ": " << r.actual;
      if (!r.passed) t << " (expected " << r.expected << ")";
      t << "  {" << to_string(r.origin) << "}";
      out.emit(json{{"fixture", id}, {"key", r.key}, {"expected", r.expected}, {"actual", r.actual},
                    {"origin", to_string(r.origin)}, {"passed", r.passed}, {"seconds", r.seconds}},
               t.str());
    }
    all = all && passed == rows.size();
    out.emit(json{{"fixture", id}, {"passed", passed}, {"total", rows.size()}},
             id + ": " + std::to_string(passed) + "/" + std::to_string(rows.size()) + " rows passed");
  }
  return all ? kOk : kFailed;
}

int fixture_export(const Globals& g, const std::string& id, const std::string& dir) {
  FixtureBundle b = load_fixture(id);
  std::filesystem::create_directories(dir);
  auto alg_path = std::filesystem::path(dir) / (id + ".alg");
  auto mod_path = std::filesystem::path(dir) / (id + ".mod");
  std::ofstream(alg_path) << "# " << b.title << "\n" << serialize_algebra(*b.algebra);
  std::ofstream mods(mod_path);
  for (const auto& [name, m] : b.modules) mods << serialize_explicit(name, m) << "\n";
  Output(g.json).emit(json{{"algebra", alg_path.string()}, {"modules", mod_path.string()}},
                      "wrote " + alg_path.string() + " and " + mod_path.string());
  return kOk;
}

}  // namespace
}  // namespace qcli

int main(int argc, char** argv) {
  using namespace qcli;
  CLI::App app{"quiverlab: modules over bound quiver algebras, approximations and phantoms"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::optional<std::uint64_t> seed;
  app.add_option("--algebra", g.ctx.algebra_file, "Algebra file");
  app.add_option("--fixture", g.ctx.fixture, "Built-in fixture (ex2, ex3, ex4, ex12, ex13)");
  app.add_option("--modules", g.ctx.modules_file, "Module file");
  app.add_option("--seed", seed, "Seed for randomized searches (default: QUIVERLAB_SEED or built-in)");
  app.add_flag("--json", g.json, "Emit JSON lines");

  std::function<int()> action;

  auto* alg = app.add_subcommand("algebra", "Inspect the algebra");
  alg->require_subcommand(1);
  std::string file;
  auto* info = alg->add_subcommand("info", "Dimension, degrees, monomial flag, Loewy length");
  info->add_option("file", file, "Algebra file (overrides --algebra)");
  info->callback([&] { action = [&] { return algebra_info(g, file); }; });
  alg->add_subcommand("show", "Print the algebra in file format")->callback([&] {
    action = [&] { return algebra_show(g); };
  });

  auto* mod = app.add_subcommand("module", "Inspect a module");
  mod->require_subcommand(1);
  std::string name, name2;
  std::size_t cutoff = 10, count = 3;
  auto* show = mod->add_subcommand("show", "Dimensions and arrow matrices");
  show->add_option("name", name)->required();
  show->callback([&] { action = [&] { return module_show(g, name); }; });
  auto* pd = mod->add_subcommand("pdim", "Projective dimension with certificate");
  pd->add_option("name", name)->required();
  pd->add_option("--cutoff", cutoff, "Syzygy cutoff");
  pd->callback([&] { action = [&] { return module_pdim(g, name, cutoff); }; });
  auto* sy = mod->add_subcommand("syzygy", "Dimension vectors of successive syzygies");
  sy->add_option("name", name)->required();
  sy->add_option("--k", count, "How many syzygies");
  sy->callback([&] { action = [&] { return module_syzygy(g, name, count); }; });
  auto* hom = mod->add_subcommand("hom", "dim Hom(A, B)");
  hom->add_option("source", name)->required();
  hom->add_option("target", name2)->required();
  hom->callback([&] { action = [&] { return module_hom(g, name, name2); }; });
  auto* tp = mod->add_subcommand("top", "Top dimension vector");
  tp->add_option("name", name)->required();
  tp->callback([&] { action = [&] { return module_top(g, name, false); }; });
  auto* sc = mod->add_subcommand("socle", "Socle dimension vector");
  sc->add_option("name", name)->required();
  sc->callback([&] { action = [&] { return module_top(g, name, true); }; });

  std::string target, family, gen, range = "1..5", ambient, p, q, cfile, with, spec, dfile, dgen, vertex,
                                                arrows, dir = ".";
  bool minimize = false, naive = false, dot = false;
  std::size_t budget = 4;
  std::optional<std::size_t> n_max;

  auto* ap = app.add_subcommand("approx", "Right approximation of a target by a finite family");
  ap->add_option("--target", target)->required();
  ap->add_option("--family", family, "Comma-separated module names")->required();
  ap->add_flag("--minimize", minimize, "Pass to the right minimal version");
  ap->add_flag("--naive", naive, "Use the full Hom-basis construction");
  ap->callback([&] { action = [&] { return approx(g, target, family, minimize, naive); }; });

  auto* as = app.add_subcommand("approx-scan", "Minimal approximations by growing families");
  as->add_option("--target", target)->required();
  as->add_option("--gen", gen, "nn:p=EXPR,q=EXPR or prefix:NAME")->required();
  as->add_option("--n", range, "Stages to print, A..B");
  as->add_option("--ambient", ambient, "Modules added to every stage");
  as->callback([&] { action = [&] { return approx_scan(g, target, gen, range, ambient); }; });

  auto* nn = app.add_subcommand("nn-verify", "Check the syzygy splitting of N_n");
  nn->add_option("--p", p)->required();
  nn->add_option("--q", q)->required();
  nn->add_option("--n", range, "N or A..B")->required();
  nn->callback([&] { action = [&] { return nn_verify(g, p, q, range); }; });

  auto* c1 = app.add_subcommand("criterion1", "Two-path criterion");
  c1->add_option("--p", p)->required();
  c1->add_option("--q", q)->required();
  c1->add_option("--counterexample", cfile, "Module file of candidate counterexamples");
  c1->add_option("--with", with, "Named modules tried as counterexamples");
  c1->callback([&] { action = [&] { return criterion1(g, p, q, cfile, with); }; });

  auto* c10 = app.add_subcommand("criterion10", "Zipper criterion");
  c10->add_option("--spec", spec, "File with lines 'p VERTEX EXPR', 'q VERTEX EXPR', 'n_max N'")->required();
  c10->add_option("--n-max", n_max, "Overrides n_max from the file");
  c10->callback([&] { action = [&] { return criterion10(g, spec, n_max); }; });

  auto* r11 = app.add_subcommand("remark11", "Seed certificate from arrows of infinite projective dimension");
  r11->add_option("--vertex", vertex)->required();
  r11->add_option("--arrows", arrows, "Comma-separated arrows out of the vertex")->required();
  r11->callback([&] { action = [&] { return remark11(g, vertex, arrows); }; });

  auto* tw = app.add_subcommand("tower", "Phantom tower over a family D_1, D_2, ...");
  tw->add_option("--target", target)->required();
  tw->add_option("--dfile", dfile, "Module file listing D_1, D_2, ... in order");
  tw->add_option("--dgen", dgen, "nn:p=EXPR,q=EXPR or prefix:NAME");
  tw->add_option("--budget", budget, "Number of stage pairs");
  tw->add_option("--ambient", ambient, "Modules added to every odd stage");
  tw->add_flag("--dot", dot, "Print the stage diagram as Graphviz");
  tw->callback([&] { action = [&] { return tower(g, target, dfile, dgen, budget, dot, ambient); }; });

  auto* sf = app.add_subcommand("subfactor", "Whether B is a quotient of a submodule of A");
  sf->add_option("--sub", name, "B")->required();
  sf->add_option("--of", name2, "A")->required();
  sf->callback([&] { action = [&] { return subfactor(g, name, name2); }; });

  auto* fx = app.add_subcommand("fixture", "Built-in worked examples");
  fx->require_subcommand(1);
  fx->add_subcommand("list", "List fixtures")->callback([&] { action = [&] { return fixture_list(g); }; });
  std::vector<std::string> ids;
  auto* run = fx->add_subcommand("run", "Replay expected-value tables");
  run->add_option("ids", ids, "Fixture ids, or 'all'")->required();
  run->callback([&] { action = [&] { return fixture_run(g, ids); }; });
  std::string id;
  auto* ex = fx->add_subcommand("export", "Write a fixture's algebra and modules to files");
  ex->add_option("id", id)->required();
  ex->add_option("--dir", dir, "Output directory");
  ex->callback([&] { action = [&] { return fixture_export(g, id, dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  g.ctx.seed = seed;
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
