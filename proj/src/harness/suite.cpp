#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "detkit/harness.hpp"

namespace detkit::harness {

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

std::vector<CaseSpec> parse_suite(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed suite at line " + std::to_string(line_of(text, e.byte)) +
                                ": " + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("suite must be a JSON array of cases");
  std::vector<CaseSpec> cases;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    try {
      cases.push_back(case_from_json(doc[i]));
    } catch (const std::invalid_argument& e) {
      std::string id = doc[i].is_object() && doc[i].contains("case") && doc[i]["case"].is_string()
                           ? " '" + doc[i]["case"].get<std::string>() + "'"
                           : "";
      throw std::invalid_argument("case " + std::to_string(i) + id + ": " + e.what());
    }
  }
  return cases;
}

std::vector<CaseSpec> load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open suite file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_suite(os.str());
}

SuiteResult run_suite(const std::vector<CaseSpec>& cases, const SuiteOptions& opts) {
  std::vector<CaseSpec> work = cases;
  if (opts.field_override) {
    for (auto& cs : work) cs.field = *opts.field_override;
  }
  SuiteResult result;
  result.reports.resize(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) result.reports[i] = run_case(work[i]);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(work.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  result.failed = std::any_of(result.reports.begin(), result.reports.end(),
                              [](const Report& r) { return r.failed(); });
  return result;
}

Json SuiteResult::to_json(bool with_timing) const {
  Json j;
  std::size_t equal = 0, not_equal = 0, skipped = 0;
  Json list = Json::array();
  Json skipped_ids = Json::array();
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::equal:
        ++equal;
        break;
      case Verdict::not_equal:
        ++not_equal;
        break;
      case Verdict::skipped:
        ++skipped;
        skipped_ids.push_back(r.case_id);
        break;
    }
    list.push_back(r.to_json(with_timing));
  }
  j["summary"] = {{"cases", reports.size()},
                  {"equal", equal},
                  {"not_equal", not_equal},
                  {"skipped", skipped},
                  {"skipped_cases", skipped_ids},
                  {"failed", failed}};
  j["reports"] = std::move(list);
  return j;
}

}  // namespace detkit::harness
