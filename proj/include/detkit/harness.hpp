#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace detkit::harness {

using Json = nlohmann::ordered_json;

enum class CaseKind { minors, symmetric, pfaffian };
enum class CheckKind { decomposition, truncation, irredundancy, heights, asl };

/// One decomposition instance. For Pfaffian kinds `t` is the Pfaffian size 2t.
/// Truncation takes the block width from C[0] (minors) or R[0] (pfaffian).
struct CaseSpec {
  std::string id = "case";
  CaseKind kind = CaseKind::minors;
  CheckKind check = CheckKind::decomposition;
  int m = 0;
  int n = 0;
  int t = 0;
  std::vector<int> R, r, C, c;
  std::optional<long> p, q, d;
  std::string field = "fp:32003";
  std::string order = "grevlex";
  double budget_sec = 60.0;
  /// Run the irredundancy tests even when the hypotheses fail.
  bool force = false;
  /// Soundness canary: remove this generator (0-based) from J.
  std::optional<int> drop_generator;

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
  /// Stable serialization with the same field names the parser accepts.
  Json to_json() const;
  /// The parameter part of to_json (no id, field, order, budget).
  Json params() const;
};

/// Throws std::invalid_argument naming the offending field.
CaseSpec case_from_json(const Json& j);
std::string to_string(CaseKind k);
std::string to_string(CheckKind k);
CaseKind parse_kind(const std::string& s);
CheckKind parse_check(const std::string& s);

enum class Verdict { equal, not_equal, skipped };
std::string to_string(Verdict v);

struct ComponentResult {
  std::string name;
  std::optional<bool> irredundant;
};

struct WitnessResult {
  std::string element;
  std::string certifies;  // component the witness is meant to separate
  std::vector<std::pair<std::string, bool>> memberships;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct Report {
  std::string case_id;
  Json params = Json::object();
  std::string field;
  std::string order;
  Verdict verdict = Verdict::skipped;
  std::string reason;
  std::vector<ComponentResult> components;
  std::vector<WitnessResult> witnesses;
  std::size_t lhs_gens = 0;
  std::size_t rhs_gb_size = 0;
  std::vector<CheckResult> checks;
  Json derived = Json::object();  // values computed from the parameters, e.g. r
  std::optional<long> expected_height;
  std::optional<long> computed_height;
  long millis = 0;

  /// NOT_EQUAL or any failed check.
  bool failed() const;
  const CheckResult* find_check(const std::string& name) const;
  Json to_json(bool with_timing = true) const;
};

struct Condition {
  std::string name;
  bool holds;
};

/// The four numbered irredundancy conditions of the matching proposition,
/// followed by the extra conditions the witness construction needs
/// (every minimum >= 1; for Pfaffians the largest minimum <= 2t - 2).
std::vector<Condition> check_irredundancy_hypotheses(const CaseSpec& cs);

/// Per-component redundancy predicted from the block parameters alone, with
/// the mechanism that forces it (empty when none applies). Index 0 is the
/// size component, then rows, then columns.
std::vector<std::string> predict_redundancy(const CaseSpec& cs);

Report verify_decomposition(const CaseSpec& cs);
Report verify_truncation(const CaseSpec& cs);
Report verify_irredundancy(const CaseSpec& cs);
Report verify_heights(const CaseSpec& cs);
/// Standard-monomial independence and straightening of incomparable pairs in
/// the poset of minors of a generic m x n matrix, up to degree d.
Report verify_standard_monomials(const CaseSpec& cs);

/// Dispatches on cs.check, enforcing cs.budget_sec.
Report run_case(const CaseSpec& cs);

struct SuiteOptions {
  unsigned jobs = 1;
  bool timing = true;
  std::optional<std::string> field_override;
};

struct SuiteResult {
  std::vector<Report> reports;
  bool failed = false;
  Json to_json(bool with_timing) const;
};

/// Parses a JSON array of cases. Throws std::invalid_argument with the line
/// or case/field of the problem.
std::vector<CaseSpec> parse_suite(const std::string& text);
std::vector<CaseSpec> load_suite(const std::string& path);
SuiteResult run_suite(const std::vector<CaseSpec>& cases, const SuiteOptions& opts);

}  // namespace detkit::harness
