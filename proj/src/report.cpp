#include "apery/report.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "apery/engine.hpp"
#include "json.hpp"

namespace apery {

namespace {

using json = nlohmann::ordered_json;

json valuation_field(const CheckResult& r) {
  if (!r.evaluated) return nullptr;
  if (r.achieved.is_infinite()) return "inf";
  return r.achieved.value();
}

json required_field(const CheckResult& r) {
  if (r.required_k.has_value()) return *r.required_k;
  return "inf";  // exact-equality checks demand an identically zero difference
}

}  // namespace

std::string to_json_line(const CheckResult& r, bool include_timing) {
  json j;
  j["id"] = r.id;
  j["p"] = r.p;
  if (!r.params.empty()) {
    json params;
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
  }
  j["required_k"] = required_field(r);
  j["achieved_valuation"] = valuation_field(r);
  j["status"] = r.status();
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

std::string table_header() {
  std::ostringstream os;
  os << std::left << std::setw(7) << "id" << std::setw(7) << "p" << std::setw(14) << "params"
     << std::setw(10) << "required" << std::setw(10) << "achieved" << std::setw(15) << "status"
     << "ms";
  return os.str();
}

std::string to_table_row(const CheckResult& r) {
  std::ostringstream os;
  std::string params = "-";
  if (!r.params.empty()) {
    params.clear();
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ',';
      params += k + "=" + std::to_string(v);
    }
  }
  os << std::left << std::setw(7) << r.id << std::setw(7) << r.p << std::setw(14) << params
     << std::setw(10) << (r.required_k ? std::to_string(*r.required_k) : std::string("inf"))
     << std::setw(10) << (r.evaluated ? r.achieved.str() : std::string("-")) << std::setw(15)
     << r.status() << std::fixed << std::setprecision(3) << r.elapsed_ms;
  return os.str();
}

void write_results(std::ostream& out, const std::vector<CheckResult>& results,
                   const std::string& format, bool include_timing) {
  if (format == "json-lines") {
    for (const auto& r : results) out << to_json_line(r, include_timing) << '\n';
  } else {
    out << table_header() << '\n';
    for (const auto& r : results) out << to_table_row(r) << '\n';
  }
}

std::string canonical_lines(std::vector<CheckResult> results) {
  sort_results(results);
  std::string s;
  for (const auto& r : results) {
    s += to_json_line(r, /*include_timing=*/false);
    s += '\n';
  }
  return s;
}

Report summarize(const RunConfig& cfg, const std::vector<CheckResult>& results) {
  Report rep;
  rep.config = cfg;
  rep.total_results = results.size();
  std::map<std::string, CheckSummary> by_id;
  for (const auto& r : results) {
    CheckSummary& s = by_id[r.id];
    s.id = r.id;
    const std::string st = r.status();
    if (st == "pass") {
      ++s.pass;
    } else if (st == "fail") {
      ++s.fail;
    } else if (st == "skip") {
      ++s.skip;
    } else {
      ++s.expected_fail;
    }
    if (r.evaluated) {
      if (r.achieved.is_infinite()) {
        s.any_infinite = true;
      } else if (!s.min_achieved || r.achieved.value() < *s.min_achieved) {
        s.min_achieved = r.achieved.value();
      }
    }
    rep.total_elapsed_ms += r.elapsed_ms;
    if (r.is_failure()) {
      rep.all_pass = false;
      rep.failures.push_back(r);
    }
  }
  rep.summaries.reserve(by_id.size());
  for (auto& [id, s] : by_id) rep.summaries.push_back(std::move(s));
  return rep;
}

void write_report(std::ostream& out, const Report& rep) {
  out << "suite " << rep.config.suite_id;
  if (!rep.config.primes_spec.empty()) out << "  primes " << rep.config.primes_spec;
  out << "  parallelism " << rep.config.parallelism << "\n";
  out << std::left << std::setw(7) << "check" << std::setw(7) << "pass" << std::setw(7) << "fail"
      << std::setw(7) << "skip" << std::setw(7) << "xfail"
      << "min-achieved\n";
  for (const auto& s : rep.summaries) {
    std::string minv = "-";
    if (s.min_achieved) {
      minv = std::to_string(*s.min_achieved);
    } else if (s.any_infinite) {
      minv = "inf";
    }
    out << std::left << std::setw(7) << s.id << std::setw(7) << s.pass << std::setw(7) << s.fail
        << std::setw(7) << s.skip << std::setw(7) << s.expected_fail << minv << "\n";
  }
  for (const auto& f : rep.failures) {
    out << "FAILED: " << to_table_row(f) << "\n";
  }
  out << rep.total_results << " results, " << std::fixed << std::setprecision(1)
      << rep.total_elapsed_ms << " ms of check time; "
      << (rep.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
}

std::vector<CheckResult> parse_json_lines(std::istream& in) {
  std::vector<CheckResult> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    CheckResult r;
    r.id = j.at("id").get<std::string>();
    r.p = j.at("p").get<std::uint64_t>();
    if (j.contains("params")) {
      for (const auto& [k, v] : j.at("params").items()) {
        r.params[k] = v.get<long long>();
      }
    }
    const auto& req = j.at("required_k");
    if (req.is_number()) r.required_k = req.get<unsigned>();
    const auto& ach = j.at("achieved_valuation");
    if (ach.is_null()) {
      r.evaluated = false;
    } else {
      r.evaluated = true;
      r.achieved = ach.is_string() ? Valuation::infinity() : Valuation::of(ach.get<long>());
    }
    const std::string status = j.at("status").get<std::string>();
    if (status == "pass") {
      r.pass = true;
    } else if (status == "expected-fail") {
      r.negative_control = true;
      r.pass = false;
    } else if (status == "skip") {
      r.evaluated = false;
    }
    r.informational = is_informational_id(r.id);
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace apery
