#include "report.hpp"

#include <iostream>

namespace qcli {

void Output::emit(const json& record, const std::string& text) const {
  if (json_) std::cout << record.dump() << "\n";
  else std::cout << text << "\n";
}

void Output::text(const std::string& text) const {
  if (!json_) std::cout << text << "\n";
}

std::string dims_list(const std::vector<std::size_t>& d) {
  std::string out;
  for (auto x : d) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

namespace {

const char* kind_name(PdimKind k) {
  switch (k) {
    case PdimKind::Finite: return "Finite";
    case PdimKind::Infinite: return "Infinite";
    case PdimKind::Unknown: return "Unknown";
  }
  return "?";
}

std::vector<std::string> chain_strings(const Algebra& a, const SyzygyCycleWitness& w) {
  std::vector<std::string> out;
  for (const auto& p : w.chain)
    out.push_back(p.is_trivial() ? "S" + a.quiver().vertex_name(p.source) : "L(" + a.quiver().path_string(p) + ")");
  return out;
}

}  // namespace

json to_json(const Algebra& a, const PdimVerdict& v) {
  json j{{"kind", kind_name(v.kind)}, {"value", v.value}, {"text", v.to_string()}};
  if (v.cycle) {
    j["cycle"] = chain_strings(a, *v.cycle);
    j["cycle_start"] = v.cycle->cycle_start;
  }
  if (v.period) j["period"] = {v.period->first, v.period->second};
  if (!v.summands.empty()) {
    std::vector<std::string> s;
    for (const auto& p : v.summands) s.push_back(a.quiver().path_string(p));
    j["summands"] = s;
  }
  return j;
}

std::string certificate_text(const Algebra& a, const PdimVerdict& v) {
  std::string out;
  if (v.cycle) {
    auto c = chain_strings(a, *v.cycle);
    out += "  syzygy chain:";
    for (std::size_t i = 0; i < c.size(); ++i)
      out += (i == 0 ? " " : " -> ") + std::string(i == v.cycle->cycle_start ? "[" : "") + c[i];
    out += "]\n";
  }
  if (!v.summands.empty()) {
    out += "  Omega^" + std::to_string(v.value) + " = sum of";
    for (const auto& p : v.summands) out += " L(" + a.quiver().path_string(p) + ")";
    out += "\n";
  }
  if (v.period)
    out += "  Omega^" + std::to_string(v.period->first) + " ~ Omega^" + std::to_string(v.period->second) + "\n";
  if (!out.empty()) out.pop_back();
  return out;
}

void emit_criterion(const Output& out, const Algebra& a, const CriterionReport& r) {
  if (r.precondition_failure) {
    out.emit(json{{"criterion", r.criterion}, {"precondition_failure", *r.precondition_failure}},
             r.criterion + ": precondition failed: " + *r.precondition_failure);
    return;
  }
  for (const auto& e : r.entries) {
    json j{{"condition", e.condition}, {"status", to_string(e.status)}, {"evidence_ref", e.evidence}};
    std::string text = "  " + e.condition + ": " + to_string(e.status) + " - " + e.evidence;
    if (e.module) {
      j["module_dims"] = e.module->dims();
      text += " [module " + describe(*e.module) + "]";
    }
    if (e.pdim) j["pdim"] = to_json(a, *e.pdim);
    if (e.violation) {
      j["violation"] = {{"module_dims", e.violation->module.dims()}, {"verified", e.violation->verify()}};
      text += " [violation " + std::string(e.violation->verify() ? "verified" : "NOT verified") + "]";
    }
    out.emit(j, text);
  }
  bool replayed = r.replay();
  out.emit(json{{"criterion", r.criterion}, {"overall", to_string(r.overall)}, {"replay", replayed}},
           r.criterion + ": " + to_string(r.overall) + (replayed ? "" : " (REPLAY FAILED)"));
}

int criterion_exit(const CriterionReport& r) {
  if (r.precondition_failure) return 2;
  if (!r.replay()) return 1;
  return r.overall == OverallVerdict::NoApproximation ? 0 : 10;
}

}  // namespace qcli
