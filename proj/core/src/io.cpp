#include "quiverlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "quiverlab/config.hpp"
#include "quiverlab/error.hpp"

namespace quiverlab {

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;
};

std::vector<Line> directives(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::size_t sp = line.find_first_of(" \t");
    if (sp == std::string::npos) {
      out.push_back({number, line, ""});
    } else {
      out.push_back({number, line.substr(0, sp), strip(line.substr(sp))});
    }
  }
  return out;
}

bool is_number(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/') return false;
  return true;
}

std::size_t parse_count(const Line& l, std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(l.number, "expected a nonnegative integer, got '" + std::string(s) + "'");
  return std::stoul(std::string(s));
}

// Splits "a - 2*b + c" into signed terms, keeping signs inside coefficients.
std::vector<std::pair<bool, std::string>> signed_terms(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorKind::Parse, "empty expression");
  std::vector<std::pair<bool, std::string>> out;
  bool negative = false;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool boundary = (c == '+' || c == '-') && (i == 0 || (s[i - 1] != '*' && s[i - 1] != '/'));
    if (boundary) {
      if (!cur.empty()) out.emplace_back(negative, cur);
      else if (i != 0) throw Error(ErrorKind::Parse, "dangling sign in '" + s + "'");
      negative = c == '-';
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.empty()) throw Error(ErrorKind::Parse, "expression ends with a sign: '" + s + "'");
  out.emplace_back(negative, cur);
  return out;
}

std::vector<std::string> factors(const std::string& term) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : term) {
    if (c == '*') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (const auto& f : out)
    if (f.empty()) throw Error(ErrorKind::Parse, "empty factor in '" + term + "'");
  return out;
}

// Coefficient (if the first factor is a number) and the remaining factors.
std::pair<Scalar, std::vector<std::string>> split_coefficient(bool negative, const std::string& term,
                                                              const Field& field) {
  auto fs = factors(term);
  Scalar c = field.one();
  if (is_number(fs.front())) {
    c = field.from_rational(Rational::parse(fs.front()));
    fs.erase(fs.begin());
  }
  if (negative) c = -c;
  return {c, fs};
}

std::string join(const std::vector<std::string>& fs, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) out += (i == begin ? "" : "*") + fs[i];
  return out;
}

template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

std::string coefficient_prefix(const Scalar& c, bool first) {
  std::string out;
  Scalar a = c;
  bool neg = c.modulus() == 0 && c.rational().sign() < 0;
  if (neg) a = -c;
  if (first) out = neg ? "-" : "";
  else out = neg ? " - " : " + ";
  if (!a.is_one()) out += a.to_string() + "*";
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PathCombination parse_combination(const Quiver& q, std::string_view text, const Field& field) {
  PathCombination out;
  for (const auto& [neg, term] : signed_terms(text)) {
    auto [c, fs] = split_coefficient(neg, term, field);
    if (fs.empty()) throw Error(ErrorKind::Parse, "term '" + term + "' has no path");
    out.emplace_back(c, q.parse_path(join(fs, 0, fs.size())));
  }
  return out;
}

AlgebraElement parse_element(const Algebra& a, std::string_view text) {
  return a.normal_form(parse_combination(a.quiver(), text, a.field()));
}

std::string format_element(const Algebra& a, const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : x.terms) {
    out += coefficient_prefix(c, first) + a.quiver().path_string(a.basis_path(i));
    first = false;
  }
  return out;
}

AlgebraPtr parse_algebra(std::string_view text) {
  Quiver q;
  Field field = default_field();
  std::optional<std::size_t> maxlen;
  std::vector<std::pair<std::size_t, std::string>> rels;
  bool seen_arrow = false;
  for (const Line& l : directives(text)) {
    auto w = words(l.rest);
    if (l.keyword == "field") {
      if (seen_arrow || !rels.empty()) throw ParseError(l.number, "field must precede arrows and relations");
      if (w.size() == 1 && w[0] == "Q") field = Field::rationals();
      else if (w.size() == 2 && w[0] == "F") field = at_line(l.number, [&] { return Field::prime(parse_count(l, w[1])); });
      else throw ParseError(l.number, "expected 'field Q' or 'field F <prime>'");
    } else if (l.keyword == "vertex") {
      if (w.empty()) throw ParseError(l.number, "vertex line names no vertices");
      for (const auto& v : w) {
        if (q.has_vertex(v)) throw ParseError(l.number, "duplicate vertex '" + v + "'");
        q.add_vertex(v);
      }
    } else if (l.keyword == "arrow") {
      if (w.size() != 3) throw ParseError(l.number, "expected 'arrow NAME SOURCE TARGET'");
      if (w[0].empty() || !std::isalpha(static_cast<unsigned char>(w[0][0])))
        throw ParseError(l.number, "arrow names start with a letter");
      at_line(l.number, [&] { return q.add_arrow(w[0], q.vertex_index(w[1]), q.vertex_index(w[2])); });
      seen_arrow = true;
    } else if (l.keyword == "rel") {
      if (l.rest.empty()) throw ParseError(l.number, "empty relation");
      rels.emplace_back(l.number, l.rest);
    } else if (l.keyword == "maxlen") {
      if (w.size() != 1) throw ParseError(l.number, "expected 'maxlen N'");
      maxlen = parse_count(l, w[0]);
    } else {
      throw ParseError(l.number, "unknown directive '" + l.keyword + "'");
    }
  }
  if (q.vertex_count() == 0) throw ParseError(1, "no vertices declared");
  std::vector<PathCombination> relations;
  for (const auto& [line, r] : rels)
    relations.push_back(at_line(line, [&] { return parse_combination(q, r, field); }));
  return build_algebra(std::move(q), std::move(relations), maxlen.value_or(10), field);
}

AlgebraPtr load_algebra(const std::filesystem::path& file) { return parse_algebra(read_file(file)); }

std::string serialize_algebra(const Algebra& a) {
  const Quiver& q = a.quiver();
  std::ostringstream os;
  os << "field " << a.field().to_string() << "\n";
  os << "vertex";
  for (const auto& v : q.vertex_names()) os << " " << v;
  os << "\n";
  for (const auto& ar : q.arrows())
    os << "arrow " << ar.name << " " << q.vertex_name(ar.source) << " " << q.vertex_name(ar.target) << "\n";
  for (const auto& r : a.relations()) {
    os << "rel ";
    bool first = true;
    for (const auto& [c, p] : r) {
      os << coefficient_prefix(c, first) << q.path_string(p);
      first = false;
    }
    os << "\n";
  }
  os << "maxlen " << a.max_len() << "\n";
  return os.str();
}

namespace {

struct Stanza {
  std::size_t line = 0;
  std::string name;
  std::string kind;
  std::vector<std::pair<std::string, std::size_t>> gens;  // name, vertex
  std::vector<std::pair<std::size_t, std::string>> rels;
  std::optional<std::vector<std::size_t>> dims;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> arrows;  // line, words (name first)
};

ModuleEntry finish(const AlgebraPtr& alg, const Stanza& s) {
  const Algebra& a = *alg;
  if (s.kind.empty()) throw ParseError(s.line, "module " + s.name + " needs 'presented' or 'explicit'");
  if (s.kind == "presented") {
    if (s.gens.empty()) throw ParseError(s.line, "module " + s.name + " has no generators");
    std::vector<std::size_t> gens;
    for (const auto& g : s.gens) gens.push_back(g.second);
    std::vector<FreeElement> rels;
    for (const auto& [line, text] : s.rels) {
      rels.push_back(at_line(line, [&] {
        FreeElement x(gens.size());
        for (const auto& [neg, term] : signed_terms(text)) {
          auto [c, fs] = split_coefficient(neg, term, a.field());
          if (fs.empty()) throw Error(ErrorKind::Parse, "term '" + term + "' names no generator");
          std::size_t k = s.gens.size();
          for (std::size_t i = 0; i < s.gens.size(); ++i)
            if (s.gens[i].first == fs.back()) k = i;
          if (k == s.gens.size()) throw Error(ErrorKind::Parse, "unknown generator '" + fs.back() + "'");
          PathWord p = fs.size() == 1 ? PathWord::trivial(gens[k]) : a.quiver().parse_path(join(fs, 0, fs.size() - 1));
          if (p.source != gens[k])
            throw Error(ErrorKind::MalformedRelator, "path " + a.quiver().path_string(p) + " does not start at the vertex of " + fs.back());
          x[k] = a.add(x[k], a.path(p), c);
        }
        return x;
      }));
    }
    PresentedModule pm = at_line(s.line, [&] { return presented_module(alg, gens, rels); });
    return {s.name, pm.module, pm};
  }
  if (!s.dims) throw ParseError(s.line, "module " + s.name + " needs a dims line");
  const auto& dims = *s.dims;
  const Quiver& q = a.quiver();
  std::vector<Matrix> mats;
  for (const auto& ar : q.arrows()) mats.emplace_back(dims[ar.target], dims[ar.source]);
  std::vector<bool> seen(q.arrow_count(), false);
  for (const auto& [line, w] : s.arrows) {
    std::size_t idx = at_line(line, [&] { return q.arrow_index(w[0]); });
    if (seen[idx]) throw ParseError(line, "arrow " + w[0] + " given twice");
    seen[idx] = true;
    Matrix& m = mats[idx];
    if (w.size() - 1 != m.rows() * m.cols())
      throw ParseError(line, "arrow " + w[0] + " needs " + std::to_string(m.rows() * m.cols()) + " entries, got " +
                                 std::to_string(w.size() - 1));
    for (std::size_t i = 0; i < m.rows() * m.cols(); ++i)
      m(i / m.cols(), i % m.cols()) = at_line(line, [&] { return a.field().from_rational(Rational::parse(w[i + 1])); });
  }
  Representation rep = at_line(s.line, [&] { return Representation(alg, dims, std::move(mats)); });
  return {s.name, rep, std::nullopt};
}

}  // namespace

std::vector<ModuleEntry> parse_modules(const AlgebraPtr& alg, std::string_view text) {
  const Algebra& a = *alg;
  std::vector<ModuleEntry> out;
  std::optional<Stanza> cur;
  auto need = [&](const Line& l) -> Stanza& {
    if (!cur) throw ParseError(l.number, "'" + l.keyword + "' outside a module stanza");
    return *cur;
  };
  for (const Line& l : directives(text)) {
    auto w = words(l.rest);
    if (l.keyword == "module") {
      if (w.size() != 1) throw ParseError(l.number, "expected 'module NAME'");
      if (cur) out.push_back(finish(alg, *cur));
      for (const auto& e : out)
        if (e.name == w[0]) throw ParseError(l.number, "duplicate module '" + w[0] + "'");
      cur = Stanza{};
      cur->line = l.number;
      cur->name = w[0];
    } else if (l.keyword == "presented" || l.keyword == "explicit") {
      Stanza& s = need(l);
      if (!s.kind.empty()) throw ParseError(l.number, "module kind given twice");
      s.kind = l.keyword;
    } else if (l.keyword == "gen") {
      Stanza& s = need(l);
      if (s.kind != "presented") throw ParseError(l.number, "'gen' belongs to presented modules");
      if (w.size() != 2) throw ParseError(l.number, "expected 'gen NAME VERTEX'");
      if (!std::isalpha(static_cast<unsigned char>(w[0][0])))
        throw ParseError(l.number, "generator names start with a letter");
      for (const auto& g : s.gens)
        if (g.first == w[0]) throw ParseError(l.number, "duplicate generator '" + w[0] + "'");
      s.gens.emplace_back(w[0], at_line(l.number, [&] { return a.quiver().vertex_index(w[1]); }));
    } else if (l.keyword == "rel") {
      Stanza& s = need(l);
      if (s.kind != "presented") throw ParseError(l.number, "'rel' belongs to presented modules");
      s.rels.emplace_back(l.number, l.rest);
    } else if (l.keyword == "dims") {
      Stanza& s = need(l);
      if (s.kind != "explicit") throw ParseError(l.number, "'dims' belongs to explicit modules");
      if (w.size() != a.quiver().vertex_count())
        throw ParseError(l.number, "expected " + std::to_string(a.quiver().vertex_count()) + " dimensions");
      std::vector<std::size_t> d;
      for (const auto& x : w) d.push_back(parse_count(l, x));
      s.dims = d;
    } else if (l.keyword == "arrow") {
      Stanza& s = need(l);
      if (s.kind != "explicit" || !s.dims) throw ParseError(l.number, "'arrow' needs an explicit module with dims");
      if (w.empty()) throw ParseError(l.number, "expected 'arrow NAME ENTRIES...'");
      s.arrows.emplace_back(l.number, w);
    } else {
      throw ParseError(l.number, "unknown directive '" + l.keyword + "'");
    }
  }
  if (cur) out.push_back(finish(alg, *cur));
  return out;
}

std::vector<ModuleEntry> load_modules(const AlgebraPtr& alg, const std::filesystem::path& file) {
  return parse_modules(alg, read_file(file));
}

ModuleEntry find_module(const std::vector<ModuleEntry>& entries, std::string_view name) {
  std::string names;
  for (const auto& e : entries) {
    if (e.name == name) return e;
    names += (names.empty() ? "" : ", ") + e.name;
  }
  throw Error(ErrorKind::InvalidArgument, "no module '" + std::string(name) + "' (have: " + names + ")");
}

std::string serialize_explicit(const std::string& name, const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  std::ostringstream os;
  os << "module " << name << "\nexplicit\ndims";
  for (auto d : m.dims()) os << " " << d;
  os << "\n";
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Matrix& mat = m.arrow(a);
    if (mat.empty() || mat.is_zero()) continue;
    os << "arrow " << q.arrow(a).name;
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j) os << " " << mat(i, j).to_string();
    os << "\n";
  }
  return os.str();
}

std::string serialize_presented(const std::string& name, const PresentedModule& p) {
  const Algebra& a = p.module.algebra();
  const Quiver& q = a.quiver();
  std::ostringstream os;
  os << "module " << name << "\npresented\n";
  for (std::size_t k = 0; k < p.generators.size(); ++k)
    os << "gen b" << k + 1 << " " << q.vertex_name(p.generators[k]) << "\n";
  for (const auto& r : p.relators) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k)
      for (const auto& [i, c] : r[k].terms) {
        const PathWord& path = a.basis_path(i);
        line += coefficient_prefix(c, line.empty()) + (path.is_trivial() ? "" : q.path_string(path) + "*") + "b" +
                std::to_string(k + 1);
      }
    os << "rel " << (line.empty() ? "0*b1" : line) << "\n";
  }
  return os.str();
}

}  // namespace quiverlab
