#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "detkit/harness.hpp"

using namespace detkit::harness;

namespace {

struct Flags {
  std::string id = "cli";
  int m = 0;
  int n = 0;
  int t = 0;
  std::vector<int> R, r, C, c;
  std::optional<long> p, q, d;
  std::string field = "fp:32003";
  std::string order = "grevlex";
  double budget_sec = 60.0;
  bool json = false;
  bool force = false;
};

void add_shared(CLI::App* app, Flags& f) {
  app->add_option("--case", f.id, "Case id used in the report");
  app->add_option("--m", f.m, "Rows (generic matrices)");
  app->add_option("--n", f.n, "Columns, or the size of a square matrix");
  app->add_option("--t", f.t, "Minor size, or Pfaffian size 2t for skew matrices");
  app->add_option("--R", f.R, "Row block cuts, e.g. 2,4")->delimiter(',');
  app->add_option("--r", f.r, "Minimum rows per block")->delimiter(',');
  app->add_option("--C", f.C, "Column block cuts")->delimiter(',');
  app->add_option("--c", f.c, "Minimum columns per block")->delimiter(',');
  app->add_option("--p", f.p, "Weight inside the block");
  app->add_option("--q", f.q, "Weight outside the block");
  app->add_option("--d", f.d, "Degree bound");
  app->add_option("--field", f.field, "fp:<prime> or qq");
  app->add_option("--order", f.order, "grevlex or lex");
  app->add_option("--budget-sec", f.budget_sec, "Per-case time budget in seconds");
  app->add_flag("--json", f.json, "Print the full JSON report");
}

CaseSpec to_case(const Flags& f, CaseKind kind, CheckKind check) {
  CaseSpec cs;
  cs.id = f.id;
  cs.kind = kind;
  cs.check = check;
  cs.n = f.n;
  cs.m = kind == CaseKind::minors ? f.m : f.n;
  cs.t = f.t;
  cs.R = f.R;
  cs.r = f.r;
  cs.C = f.C;
  cs.c = f.c;
  cs.p = f.p;
  cs.q = f.q;
  cs.d = f.d;
  cs.field = f.field;
  cs.order = f.order;
  cs.budget_sec = f.budget_sec;
  cs.force = f.force;
  return cs;
}

void print_text(const Report& rep) {
  std::cout << rep.case_id << ": " << to_string(rep.verdict);
  if (!rep.reason.empty()) std::cout << " (" << rep.reason << ")";
  std::cout << "\n";
  for (const auto& c : rep.components) {
    std::cout << "  component " << c.name;
    if (c.irredundant) std::cout << (*c.irredundant ? "  irredundant" : "  redundant");
    std::cout << "\n";
  }
  for (const auto& w : rep.witnesses) {
    std::cout << "  witness " << w.element << " for " << w.certifies << ":";
    for (const auto& [name, in] : w.memberships) std::cout << " " << name << (in ? "+" : "-");
    std::cout << "\n";
  }
  for (const auto& c : rep.checks) {
    std::cout << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
  }
  if (!rep.derived.empty()) std::cout << "  derived " << rep.derived.dump() << "\n";
  if (rep.expected_height) {
    std::cout << "  height expected " << *rep.expected_height << ", computed "
              << (rep.computed_height ? std::to_string(*rep.computed_height) : "-") << "\n";
  }
  std::cout << "  lhs_gens " << rep.lhs_gens << ", rhs_gb_size " << rep.rhs_gb_size << ", "
            << rep.millis << " ms\n";
}

int emit(const Report& rep, bool json) {
  if (json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    print_text(rep);
  }
  return rep.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinantal and Pfaffian ideal decompositions, certified by Groebner bases"};
  app.require_subcommand(1);
  Flags f;

  std::string verify_kind;
  auto* verify = app.add_subcommand("verify", "Check J against the intersection of its components");
  verify->add_option("kind", verify_kind, "minors, symmetric or pfaffian")
      ->required()
      ->check(CLI::IsMember({"minors", "symmetric", "pfaffian"}));
  add_shared(verify, f);

  std::string trunc_kind = "minors";
  auto* trunc = app.add_subcommand("truncation", "Check a degree truncation against its block form");
  trunc->add_option("--kind", trunc_kind, "minors or pfaffian")
      ->check(CLI::IsMember({"minors", "pfaffian"}));
  add_shared(trunc, f);

  std::string irr_kind = "minors";
  auto* irr = app.add_subcommand("irredundancy", "Drop-one and witness irredundancy tests");
  irr->add_option("--kind", irr_kind, "minors, symmetric or pfaffian")
      ->check(CLI::IsMember({"minors", "symmetric", "pfaffian"}));
  irr->add_flag("--force", f.force, "Run even when the hypotheses fail");
  add_shared(irr, f);

  auto* heights = app.add_subcommand("heights", "Height of the ideal of 2t-Pfaffians");
  add_shared(heights, f);

  auto* asl = app.add_subcommand("asl-check", "Standard monomials of a generic matrix up to degree d");
  add_shared(asl, f);

  std::string config;
  std::string out_path;
  SuiteOptions sopts;
  bool no_timing = false;
  std::optional<std::string> field_override;
  auto* suite = app.add_subcommand("suite", "Run every case of a JSON suite");
  suite->add_option("config", config, "Suite file (JSON array of cases)")->required();
  suite->add_option("--jobs", sopts.jobs, "Worker threads");
  suite->add_flag("--no-timing", no_timing, "Report 0 ms so reruns are byte-identical");
  suite->add_option("--field", field_override, "Override the field of every case");
  suite->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      return emit(run_case(to_case(f, parse_kind(verify_kind), CheckKind::decomposition)), f.json);
    }
    if (trunc->parsed()) {
      return emit(run_case(to_case(f, parse_kind(trunc_kind), CheckKind::truncation)), f.json);
    }
    if (irr->parsed()) {
      return emit(run_case(to_case(f, parse_kind(irr_kind), CheckKind::irredundancy)), f.json);
    }
    if (heights->parsed()) {
      return emit(run_case(to_case(f, CaseKind::pfaffian, CheckKind::heights)), f.json);
    }
    if (asl->parsed()) {
      return emit(run_case(to_case(f, CaseKind::minors, CheckKind::asl)), f.json);
    }
    if (suite->parsed()) {
      sopts.timing = !no_timing;
      sopts.field_override = field_override;
      const auto cases = load_suite(config);
      const auto result = run_suite(cases, sopts);
      const std::string text = result.to_json(sopts.timing).dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream(out_path) << text;
      }
      for (const auto& r : result.reports) {
        std::cerr << (r.failed() ? "FAIL " : "ok   ") << to_string(r.verdict) << "  " << r.case_id;
        if (!r.reason.empty()) std::cerr << "  (" << r.reason << ")";
        std::cerr << "\n";
      }
      return result.failed ? 1 : 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
