#include <set>
#include <stdexcept>

#include "detkit/detideals.hpp"
#include "detkit/field.hpp"
#include "detkit/harness.hpp"

namespace detkit::harness {

namespace {

const std::set<std::string> kKnownFields = {
    "case", "kind", "check", "m", "n", "t", "R", "r", "C", "c", "p",
    "q",    "d",    "field", "order", "budget_sec", "force", "drop_generator"};

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

bool is_prime_number(unsigned long v) {
  if (v < 2) return false;
  for (unsigned long f = 2; f * f <= v; ++f) {
    if (v % f == 0) return false;
  }
  return true;
}

void check_field_name(const std::string& field) {
  if (field == "qq") return;
  if (field.rfind("fp:", 0) == 0) {
    const std::string digits = field.substr(3);
    if (!digits.empty() && digits.size() <= 10 &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      const unsigned long p = std::stoul(digits);
      if (p < (1ul << 31) && is_prime_number(p)) return;
    }
  }
  bad("field must be 'qq' or 'fp:<prime below 2^31>', got '" + field + "'");
}

void check_cuts(const std::vector<int>& cuts, const std::vector<int>& mins, int bound,
                const char* name, bool mins_optional) {
  if (cuts.size() != mins.size() && !(mins_optional && mins.empty())) {
    bad(std::string(name) + " and its minimum list differ in length");
  }
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] < 1 || cuts[i] > bound || (i > 0 && cuts[i] < cuts[i - 1])) {
      bad(std::string(name) + " must be nondecreasing within 1.." + std::to_string(bound));
    }
  }
}

template <class T>
T get_field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string to_string(CaseKind k) {
  switch (k) {
    case CaseKind::minors:
      return "minors";
    case CaseKind::symmetric:
      return "symmetric";
    case CaseKind::pfaffian:
      return "pfaffian";
  }
  return "?";
}

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::decomposition:
      return "decomposition";
    case CheckKind::truncation:
      return "truncation";
    case CheckKind::irredundancy:
      return "irredundancy";
    case CheckKind::heights:
      return "heights";
    case CheckKind::asl:
      return "asl";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equal:
      return "EQUAL";
    case Verdict::not_equal:
      return "NOT_EQUAL";
    case Verdict::skipped:
      return "SKIPPED";
  }
  return "?";
}

CaseKind parse_kind(const std::string& s) {
  if (s == "minors") return CaseKind::minors;
  if (s == "symmetric") return CaseKind::symmetric;
  if (s == "pfaffian") return CaseKind::pfaffian;
  bad("unknown kind '" + s + "' (expected minors, symmetric or pfaffian)");
}

CheckKind parse_check(const std::string& s) {
  if (s == "decomposition") return CheckKind::decomposition;
  if (s == "truncation") return CheckKind::truncation;
  if (s == "irredundancy") return CheckKind::irredundancy;
  if (s == "heights") return CheckKind::heights;
  if (s == "asl") return CheckKind::asl;
  bad("unknown check '" + s + "'");
}

void CaseSpec::validate() const {
  if (id.empty()) bad("case id must not be empty");
  check_field_name(field);
  if (order != "grevlex" && order != "lex") bad("order must be grevlex or lex");
  if (!(budget_sec > 0)) bad("budget_sec must be positive");

  // one slot stays free for the intersection variable
  switch (kind) {
    case CaseKind::minors:
      if (m < 1 || n < 1 || m * n > 31) bad("minors need 1 <= m, n and m*n <= 31");
      break;
    case CaseKind::symmetric:
      if (n < 1 || n * (n + 1) / 2 > 31) bad("symmetric matrices need 1 <= n <= 7");
      if (m != n) bad("symmetric matrices need m = n");
      break;
    case CaseKind::pfaffian:
      if (n < 2 || n * (n - 1) / 2 > 31) bad("skew-symmetric matrices need 2 <= n <= 8");
      if (m != n) bad("skew-symmetric matrices need m = n");
      if (t % 2 != 0) bad("t is the Pfaffian size and must be even");
      break;
  }
  if (check != CheckKind::asl && t < 1) bad("t must be >= 1");
  if (kind != CaseKind::minors && (!C.empty() || !c.empty())) {
    bad("column blocks apply to generic matrices only");
  }
  // truncation derives the minimum itself
  const bool mins_optional = check == CheckKind::truncation;
  check_cuts(R, r, m, "R", mins_optional);
  check_cuts(C, c, n, "C", mins_optional);
  if (drop_generator && *drop_generator < 0) bad("drop_generator must be >= 0");

  switch (check) {
    case CheckKind::decomposition:
    case CheckKind::irredundancy:
      break;
    case CheckKind::truncation:
      if (!p || !q || !d) bad("truncation needs p, q and d");
      if (*p <= 0 || *p >= *q) bad("truncation needs 0 < p < q");
      if (kind == CaseKind::minors && (C.size() != 1 || !R.empty())) {
        bad("generic truncation takes the column block width from a single C");
      }
      if (kind == CaseKind::pfaffian && R.size() != 1) {
        bad("skew truncation takes the block from a single R");
      }
      if (kind == CaseKind::symmetric) bad("truncation applies to minors or pfaffian kinds");
      break;
    case CheckKind::heights:
      if (kind != CaseKind::pfaffian) bad("heights apply to the pfaffian kind");
      if (n * (n - 1) / 2 > 24) bad("heights need n <= 7");
      break;
    case CheckKind::asl:
      if (kind != CaseKind::minors) bad("asl applies to the minors kind");
      if (!d || *d < 1) bad("asl needs a degree bound d >= 1");
      break;
  }
}

Json CaseSpec::params() const {
  Json j;
  j["kind"] = to_string(kind);
  j["check"] = to_string(check);
  if (kind == CaseKind::minors) j["m"] = m;
  j["n"] = n;
  j["t"] = t;
  j["R"] = R;
  j["r"] = r;
  if (kind == CaseKind::minors) {
    j["C"] = C;
    j["c"] = c;
  }
  if (p) j["p"] = *p;
  if (q) j["q"] = *q;
  if (d) j["d"] = *d;
  if (force) j["force"] = true;
  if (drop_generator) j["drop_generator"] = *drop_generator;
  return j;
}

Json CaseSpec::to_json() const {
  Json j;
  j["case"] = id;
  const Json ps = params();
  for (const auto& [k, v] : ps.items()) j[k] = v;
  j["field"] = field;
  j["order"] = order;
  j["budget_sec"] = budget_sec;
  return j;
}

CaseSpec case_from_json(const Json& j) {
  if (!j.is_object()) bad("case must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kKnownFields.count(key)) bad("unknown field '" + key + "'");
  }
  CaseSpec cs;
  if (j.contains("case")) cs.id = get_field<std::string>(j, "case");
  if (j.contains("kind")) cs.kind = parse_kind(get_field<std::string>(j, "kind"));
  if (j.contains("check")) cs.check = parse_check(get_field<std::string>(j, "check"));
  if (j.contains("n")) cs.n = get_field<int>(j, "n");
  if (j.contains("m")) {
    cs.m = get_field<int>(j, "m");
  } else if (cs.kind != CaseKind::minors) {
    cs.m = cs.n;
  }
  if (j.contains("t")) cs.t = get_field<int>(j, "t");
  if (j.contains("R")) cs.R = get_field<std::vector<int>>(j, "R");
  if (j.contains("r")) cs.r = get_field<std::vector<int>>(j, "r");
  if (j.contains("C")) cs.C = get_field<std::vector<int>>(j, "C");
  if (j.contains("c")) cs.c = get_field<std::vector<int>>(j, "c");
  if (j.contains("p")) cs.p = get_field<long>(j, "p");
  if (j.contains("q")) cs.q = get_field<long>(j, "q");
  if (j.contains("d")) cs.d = get_field<long>(j, "d");
  if (j.contains("field")) cs.field = get_field<std::string>(j, "field");
  if (j.contains("order")) cs.order = get_field<std::string>(j, "order");
  if (j.contains("budget_sec")) cs.budget_sec = get_field<double>(j, "budget_sec");
  if (j.contains("force")) cs.force = get_field<bool>(j, "force");
  if (j.contains("drop_generator")) cs.drop_generator = get_field<int>(j, "drop_generator");
  cs.validate();
  return cs;
}

bool Report::failed() const {
  if (verdict == Verdict::not_equal) return true;
  for (const auto& c : checks) {
    if (!c.passed) return true;
  }
  return false;
}

const CheckResult* Report::find_check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["case"] = case_id;
  j["params"] = params;
  j["field"] = field;
  j["order"] = order;
  j["verdict"] = to_string(verdict);
  if (!reason.empty()) j["reason"] = reason;
  j["components"] = Json::array();
  for (const auto& c : components) {
    Json cj;
    cj["name"] = c.name;
    cj["irredundant"] = c.irredundant ? Json(*c.irredundant) : Json(nullptr);
    j["components"].push_back(std::move(cj));
  }
  j["witnesses"] = Json::array();
  for (const auto& w : witnesses) {
    Json wj;
    wj["element"] = w.element;
    wj["certifies"] = w.certifies;
    wj["memberships"] = Json::object();
    for (const auto& [name, in] : w.memberships) wj["memberships"][name] = in;
    j["witnesses"].push_back(std::move(wj));
  }
  j["stats"] = {{"lhs_gens", lhs_gens}, {"rhs_gb_size", rhs_gb_size}};
  j["checks"] = Json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  if (!derived.empty()) j["derived"] = derived;
  if (expected_height || computed_height) {
    j["height"] = {{"expected", expected_height ? Json(*expected_height) : Json(nullptr)},
                   {"computed", computed_height ? Json(*computed_height) : Json(nullptr)}};
  }
  j["millis"] = with_timing ? millis : 0;
  return j;
}

}  // namespace detkit::harness
