#include "context.hpp"

#include <algorithm>
#include <sstream>

#include <quiverlab/error.hpp>

namespace qcli {

namespace {

Error bad(const std::string& what) { return Error(ErrorKind::InvalidArgument, what); }

std::size_t to_count(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw bad("expected a nonnegative integer, got '" + s + "'");
  return std::stoul(s);
}

}  // namespace

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto n = to_count(text);
    return {n, n};
  }
  auto a = to_count(text.substr(0, dots));
  auto b = to_count(text.substr(dots + 2));
  if (a == 0 || a > b) throw bad("range must satisfy 1 <= A <= B, got '" + text + "'");
  return {a, b};
}

Context::Context(const ContextOptions& opts) : seed_(opts.seed.value_or(default_seed())) {
  if (!opts.algebra_file.empty() && !opts.fixture.empty()) throw bad("give --algebra or --fixture, not both");
  if (!opts.fixture.empty()) {
    fixture_ = load_fixture(opts.fixture);
    alg_ = fixture_->algebra;
  } else if (!opts.algebra_file.empty()) {
    alg_ = load_algebra(opts.algebra_file);
  } else {
    throw bad("no algebra: pass --algebra FILE or --fixture ID");
  }
  if (!opts.modules_file.empty()) file_modules_ = load_modules(alg_, opts.modules_file);
}

Representation Context::module(const std::string& name) const {
  for (const auto& e : file_modules_)
    if (e.name == name) return e.module;
  if (fixture_)
    for (const auto& [n, m] : fixture_->modules)
      if (n == name) return m;
  const Quiver& q = alg_->quiver();
  if (name.size() > 1 && (name[0] == 'S' || name[0] == 'P') && q.has_vertex(name.substr(1))) {
    std::size_t v = q.vertex_index(name.substr(1));
    return name[0] == 'S' ? simple_module(alg_, v) : projective_module(alg_, v);
  }
  std::string have;
  for (const auto& n : module_names()) have += (have.empty() ? "" : ", ") + n;
  throw bad("unknown module '" + name + "' (have: " + have + ", S<vertex>, P<vertex>)");
}

std::vector<std::string> Context::module_names() const {
  std::vector<std::string> out;
  for (const auto& e : file_modules_) out.push_back(e.name);
  if (fixture_)
    for (const auto& [n, m] : fixture_->modules)
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  return out;
}

FamilyMember Context::member(const std::string& name) const {
  Representation m = module(name);
  return {name, m, pdim(m)};
}

FiniteCategory Context::family(const std::vector<std::string>& names, bool with_pdims) const {
  if (names.empty()) throw bad("empty family");
  FiniteCategory c;
  c.name = "family";
  c.closure = with_pdims ? kFinitePdim : "";
  for (const auto& n : names) {
    Representation m = module(n);
    std::optional<PdimVerdict> v;
    if (with_pdims) v = pdim(m);
    c.add(n, m, v);
  }
  return c;
}

AlgebraElement Context::element(const std::string& text) const { return parse_element(*alg_, text); }

PathWord Context::path(const std::string& text) const { return alg_->quiver().parse_path(text); }

std::size_t Context::vertex(const std::string& name) const { return alg_->quiver().vertex_index(name); }

FamilyGenerator Context::generator(const std::string& spec) const {
  if (spec.rfind("nn:", 0) == 0) {
    std::optional<AlgebraElement> p, q;
    for (const auto& kv : split_list(spec.substr(3))) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw bad("expected key=value in '" + kv + "'");
      auto key = kv.substr(0, eq);
      if (key == "p") p = element(kv.substr(eq + 1));
      else if (key == "q") q = element(kv.substr(eq + 1));
      else throw bad("unknown generator parameter '" + key + "'");
    }
    if (!p || !q) throw bad("nn generator needs p=... and q=...");
    build_Nn(alg_, *p, *q, 1);  // validates p and q up front
    return [alg = alg_, p = *p, q = *q](std::size_t n) {
      Representation m = build_Nn(alg, p, q, n).module;
      return FamilyMember{"N" + std::to_string(n), m, pdim(m)};
    };
  }
  if (spec.rfind("prefix:", 0) == 0) {
    std::string prefix = spec.substr(7);
    if (prefix.empty()) throw bad("empty prefix in '" + spec + "'");
    return [this, prefix](std::size_t n) { return member(prefix + std::to_string(n)); };
  }
  throw bad("unknown family generator '" + spec + "' (use nn:p=...,q=... or prefix:NAME)");
}

ZipperFile parse_zipper_file(const Context& ctx, const std::string& text) {
  ZipperFile out;
  std::vector<std::optional<AlgebraElement>> ps, qs;
  std::istringstream in(text);
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto at = [&](auto&& f) {
      try {
        return f();
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(number, e.what());
      }
    };
    if (key == "n_max") {
      std::string n;
      ls >> n;
      out.n_max = at([&] { return to_count(n); });
    } else if (key == "p" || key == "q") {
      std::string v, rest;
      ls >> v;
      std::getline(ls, rest);
      if (v.empty() || rest.find_first_not_of(" \t") == std::string::npos)
        throw ParseError(number, "expected '" + key + " VERTEX EXPR'");
      std::size_t vi = at([&] { return ctx.vertex(v); });
      auto it = std::find(out.spec.vertices.begin(), out.spec.vertices.end(), vi);
      std::size_t k = it - out.spec.vertices.begin();
      if (it == out.spec.vertices.end()) {
        out.spec.vertices.push_back(vi);
        ps.emplace_back();
        qs.emplace_back();
      }
      auto& slot = key == "p" ? ps[k] : qs[k];
      if (slot) throw ParseError(number, key + " for vertex " + v + " given twice");
      slot = at([&] { return ctx.element(rest); });
    } else {
      throw ParseError(number, "unknown directive '" + key + "'");
    }
  }
  if (out.spec.vertices.empty()) throw ParseError(number, "no p/q lines");
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (!ps[k] || !qs[k])
      throw bad("vertex " + ctx.algebra()->quiver().vertex_name(out.spec.vertices[k]) + " needs both p and q");
    out.spec.p.push_back(*ps[k]);
    out.spec.q.push_back(*qs[k]);
  }
  return out;
}

}  // namespace qcli
