#pragma once

#include <string>

#include <json.hpp>

#include <quiverlab/bundles.hpp>
#include <quiverlab/criteria.hpp>

namespace qcli {

using nlohmann::json;
using namespace quiverlab;

/// Text goes to stdout as is; in JSON mode each record is one line.
class Output {
 public:
  explicit Output(bool json) : json_(json) {}
  bool json_mode() const { return json_; }
  void emit(const json& record, const std::string& text) const;
  void text(const std::string& text) const;

 private:
  bool json_;
};

json to_json(const Algebra& a, const PdimVerdict& v);
std::string certificate_text(const Algebra& a, const PdimVerdict& v);
std::string dims_list(const std::vector<std::size_t>& d);

/// One record per condition, then the overall verdict.
void emit_criterion(const Output& out, const Algebra& a, const CriterionReport& r);
/// 0 when NoApproximation, 10 when Inconclusive, 2 on a failed precondition,
/// 1 if replaying the report fails.
int criterion_exit(const CriterionReport& r);

}  // namespace qcli
