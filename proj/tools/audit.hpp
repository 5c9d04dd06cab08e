#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

// Machine-readable audit reports for the cxs command-line tool.

namespace cxs::audit {

using json = nlohmann::json;

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string id;
  Status status = Status::Fail;
  std::string witness;
};

struct AuditReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<AuditReport> children;

  /// Records a check; a failing check always carries a witness.
  void add(const std::string& id, bool pass, const std::string& witness = "");
  /// Like add, but the witness (a measured value) is kept on pass too.
  void measure(const std::string& id, bool pass, const std::string& value);
  void skip(const std::string& id, const std::string& why);
  void merge(AuditReport child) { children.push_back(std::move(child)); }

  bool all_pass() const;
  std::size_t count(Status s) const;
  /// {"schema": 1, "suite": ..., "pass": ..., "checks": [...], "suites": [...]}
  json to_json() const;
  std::string text() const;
};

AuditReport clock_suite();
/// Everything about one Dirac representation; paper8 selects the explicit (7,1) matrices.
AuditReport rep_suite(int k, int l, bool paper8);
AuditReport spinor_sweep_suite();
AuditReport hodge_suite();
AuditReport dirac_suite(int k, int l, std::uint64_t seed, std::size_t samples);
/// Waves file: {"waves": [{"p": [..], "amplitude_seed": s, "m": m, "e": e, "A": [..]}, ...]}.
AuditReport dirac_waves_suite(int k, int l, const json& waves);
AuditReport fourier_suite(int n);
/// CR data file: {"L": poly, "cr_functions": [z, w], "section": poly in (a, b), "frame_change": {"a","b","c"}}.
AuditReport cr_suite(const json& data);
/// Chart file: {"L": poly, "P": poly, "xi": [four components on (u,x,y,r)] or a form object, "points": n}.
AuditReport rt_suite(const json& chart, std::uint64_t seed);
AuditReport rt_random_suite(std::uint64_t seed, std::size_t charts);
AuditReport selfdual_suite(std::uint64_t seed);
/// Triple file: {"F": [3 polys on (x,y,u)], "z": poly, "w": poly}.
AuditReport conjecture_suite(const json& triple);
AuditReport full_audit(std::uint64_t seed);

/// Built-in inputs used by full-audit and as CLI defaults.
json heisenberg_cr_data();
json flat_triple();
json mismatched_triple();

}  // namespace cxs::audit
