#include "dsum/verifier/report.hpp"

#include <json.hpp>

namespace dsum {

namespace {

using Json = nlohmann::ordered_json;

Mode mode_from(const std::string& s) {
  for (Mode m : {Mode::ExactRational, Mode::QSurd, Mode::QuotientPoly, Mode::FloatTrig}) {
    if (to_string(m) == s) return m;
  }
  throw Error(ErrorCode::MalformedGrid, "unknown mode '" + s + "'");
}

Json point_json(const Point& p) {
  Json j = Json::object();
  for (const auto& [name, value] : p.entries()) j[name] = value.fraction_string();
  return j;
}

Json report_json(const VerificationReport& r, bool with_timing) {
  Json j;
  j["id"] = r.id;
  j["status"] = r.passed() ? "PASS" : "FAIL";
  j["mode"] = std::string(to_string(r.mode));
  j["grid"] = r.grid;
  if (r.mode == Mode::FloatTrig) j["tolerance"] = r.tolerance;
  j["points_checked"] = r.points_checked;
  j["points_skipped"] = r.points_skipped;
  j["skipped"] = Json::array();
  for (const auto& s : r.skipped) j["skipped"].push_back({{"reason", s.reason}, {"count", s.count}});
  j["failures_total"] = r.failures_total;
  j["failures"] = Json::array();
  for (const auto& f : r.failures) {
    Json fj{{"point", point_json(f.point)}, {"lhs", f.lhs}, {"rhs", f.rhs}};
    if (!f.error.empty()) fj["error"] = f.error;
    j["failures"].push_back(std::move(fj));
  }
  if (with_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report, bool with_timing) {
  return report_json(report, with_timing).dump(2);
}

VerificationReport report_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.mode = mode_from(j.at("mode").get<std::string>());
    r.grid = j.at("grid").get<std::string>();
    if (j.contains("tolerance")) r.tolerance = j.at("tolerance").get<double>();
    r.points_checked = j.at("points_checked").get<std::size_t>();
    r.points_skipped = j.at("points_skipped").get<std::size_t>();
    for (const auto& s : j.at("skipped")) r.skipped.push_back({s.at("reason"), s.at("count")});
    r.failures_total = j.at("failures_total").get<std::size_t>();
    for (const auto& fj : j.at("failures")) {
      Failure f;
      for (const auto& [name, value] : fj.at("point").items()) {
        f.point.set(name, BigRational::parse(value.get<std::string>()));
      }
      f.lhs = fj.at("lhs").get<std::string>();
      f.rhs = fj.at("rhs").get<std::string>();
      if (fj.contains("error")) f.error = fj.at("error").get<std::string>();
      r.failures.push_back(std::move(f));
    }
    if (j.contains("wall_time_ms")) r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedGrid, std::string("bad report document: ") + e.what());
  }
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing) {
  Json doc;
  doc["reports"] = Json::array();
  std::size_t failed = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  for (const auto& r : reports) {
    doc["reports"].push_back(report_json(r, with_timing));
    failed += r.passed() ? 0 : 1;
    checked += r.points_checked;
    skipped += r.points_skipped;
  }
  doc["summary"] = {{"identities", reports.size()},
                    {"failed", failed},
                    {"points_checked", checked},
                    {"points_skipped", skipped}};
  return doc.dump(2);
}

std::string bench_to_json(const std::vector<BenchRecord>& records) {
  Json doc = Json::array();
  for (const auto& b : records) {
    doc.push_back({{"id", b.id},
                   {"n", b.n},
                   {"lhs_ms", b.lhs_ms},
                   {"rhs_ms", b.rhs_ms},
                   {"speedup", b.speedup},
                   {"lhs_terms", b.lhs_terms},
                   {"rhs_terms", b.rhs_terms},
                   {"lhs_seq_calls", b.lhs_seq_calls},
                   {"rhs_seq_calls", b.rhs_seq_calls}});
  }
  return doc.dump(2);
}

}  // namespace dsum
