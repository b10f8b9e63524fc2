#include "quiverlab/monomial.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "quiverlab/error.hpp"

namespace quiverlab {

namespace {

void require_monomial(const Algebra& a) {
  if (!a.is_monomial()) throw Error(ErrorKind::NotMonomial, "operation needs a monomial relation algebra");
}

bool nonzero_path(const Algebra& a, const PathWord& p) { return a.basis_index(p).has_value(); }

}  // namespace

Embedded cyclic_module(const AlgebraPtr& alg, std::size_t vertex, const AlgebraElement& x) {
  Representation p = projective_module(alg, vertex);
  Submodule s = generated_submodule(p, {projective_vector(*alg, vertex, x)});
  return subrepresentation(p, s);
}

Representation path_node_module(const AlgebraPtr& alg, const PathWord& p) {
  if (p.is_trivial()) return simple_module(alg, p.source);
  return cyclic_module(alg, p.source, alg->path(p)).module;
}

std::vector<PathWord> path_ideal_syzygy(const AlgebraPtr& alg, const PathWord& p) {
  const Algebra& a = *alg;
  require_monomial(a);
  const Quiver& q = a.quiver();
  std::vector<PathWord> out;
  if (p.is_trivial()) {
    for (auto ar : q.arrows_from(p.source)) {
      PathWord w{{ar}, p.source, q.arrow(ar).target};
      if (nonzero_path(a, w)) out.push_back(w);
    }
    return out;
  }
  if (!nonzero_path(a, p))
    throw Error(ErrorKind::PathInIdeal, "path " + q.path_string(p) + " lies in the ideal");
  // Grow u from e_{t(p)}; stop at the first u with u*p in I.
  std::vector<PathWord> frontier{PathWord::trivial(p.target)};
  while (!frontier.empty()) {
    std::vector<PathWord> next;
    for (const auto& u : frontier)
      for (auto ar : q.arrows_from(u.target)) {
        PathWord w{u.arrows, u.source, q.arrow(ar).target};
        w.arrows.push_back(ar);
        if (!nonzero_path(a, w)) continue;
        PathWord wp = q.compose(w, p);
        if (nonzero_path(a, wp))
          next.push_back(std::move(w));
        else
          out.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return out;
}

PdimVerdict path_pdim(const AlgebraPtr& alg, const PathWord& root) {
  require_monomial(*alg);
  if (!root.is_trivial() && !nonzero_path(*alg, root))
    throw Error(ErrorKind::PathInIdeal, "path " + alg->quiver().path_string(root) + " lies in the ideal");

  std::map<PathWord, int> state;  // 1 on the stack, 2 finished
  std::map<PathWord, std::size_t> depth;
  std::vector<PathWord> stack;
  std::optional<SyzygyCycleWitness> found;

  std::function<void(const PathWord&)> visit = [&](const PathWord& p) {
    state[p] = 1;
    stack.push_back(p);
    std::size_t d = 0;
    for (const auto& c : path_ideal_syzygy(alg, p)) {
      if (found) break;
      auto it = state.find(c);
      if (it != state.end() && it->second == 1) {
        SyzygyCycleWitness w{stack, 0};
        w.cycle_start = static_cast<std::size_t>(std::find(stack.begin(), stack.end(), c) - stack.begin());
        w.chain.push_back(c);
        found = std::move(w);
        break;
      }
      if (it == state.end()) visit(c);
      if (found) break;
      d = std::max(d, depth[c] + 1);
    }
    depth[p] = d;
    state[p] = 2;
    stack.pop_back();
  };
  visit(root);

  if (found) {
    return PdimVerdict{PdimKind::Infinite, 0, std::move(found), {}, {}, {}};
  }
  return PdimVerdict::finite(depth[root]);
}

bool summand_of_radical(const AlgebraPtr& alg, const PathWord& p, std::size_t vertex) {
  require_monomial(*alg);
  if (p.source != vertex)
    throw Error(ErrorKind::EndpointMismatch, "path " + alg->quiver().path_string(p) + " does not start at vertex " +
                                                 alg->quiver().vertex_name(vertex));
  if (p.is_trivial()) return false;
  if (!nonzero_path(*alg, p))
    throw Error(ErrorKind::PathInIdeal, "path " + alg->quiver().path_string(p) + " lies in the ideal");
  Representation je = radical(projective_module(alg, vertex)).module;
  return split_local_summand(path_node_module(alg, p), je).has_value();
}

std::optional<std::vector<PathWord>> decompose_into_path_modules(const AlgebraPtr& alg, const Representation& m) {
  struct Candidate {
    PathWord path;
    Representation module;
    std::size_t top_vertex;
  };
  std::vector<Candidate> cands;
  for (std::size_t v = 0; v < alg->quiver().vertex_count(); ++v)
    cands.push_back({PathWord::trivial(v), projective_module(alg, v), v});
  for (const auto& p : alg->basis())
    if (!p.is_trivial()) cands.push_back({p, path_node_module(alg, p), p.target});
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& x, const Candidate& y) { return x.module.total_dim() > y.module.total_dim(); });

  std::vector<PathWord> out;
  Representation rest = m;
  while (!rest.is_zero()) {
    std::vector<std::size_t> t = top(rest);
    bool split = false;
    for (const auto& c : cands) {
      if (t[c.top_vertex] == 0 || c.module.total_dim() > rest.total_dim()) continue;
      auto s = split_local_summand(c.module, rest);
      if (!s) continue;
      out.push_back(c.path);
      rest = kernel(s->retraction).module;
      split = true;
      break;
    }
    if (!split) return std::nullopt;
  }
  return out;
}

bool verify_cycle_witness(const AlgebraPtr& alg, const SyzygyCycleWitness& w) {
  if (w.chain.size() < 2 || w.cycle_start + 1 >= w.chain.size()) return false;
  if (!(w.chain.back() == w.chain[w.cycle_start])) return false;
  for (std::size_t i = 0; i + 1 < w.chain.size(); ++i) {
    Representation omega = syzygy(path_node_module(alg, w.chain[i]));
    if (!split_local_summand(path_node_module(alg, w.chain[i + 1]), omega)) return false;
  }
  return true;
}

}  // namespace quiverlab
