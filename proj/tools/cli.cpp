#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "dsum/catalog/catalog.hpp"
#include "dsum/verifier/bench.hpp"
#include "dsum/verifier/report.hpp"
#include "dsum/verifier/verify.hpp"

namespace dsum::cli {

namespace {

using Json = nlohmann::ordered_json;
using Rows = std::vector<std::vector<std::string>>;

struct Selector {
  std::vector<std::string> ids;
  std::string family;
  bool all = false;
};

std::vector<const IdentityDescriptor*> select(const Selector& s, bool empty_means_all) {
  std::vector<const IdentityDescriptor*> out;
  auto add = [&](const IdentityDescriptor* e) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  };
  if (s.all || (empty_means_all && s.ids.empty() && s.family.empty())) {
    for (const auto& e : catalog_list()) add(&e);
  }
  if (!s.family.empty()) {
    for (const auto* e : select_prefix(s.family)) add(e);
  }
  for (const auto& id : s.ids) {
    if (!id.empty() && id.back() == '*') {
      for (const auto* e : select_prefix(std::string_view(id).substr(0, id.size() - 1))) add(e);
    } else {
      add(&find_identity(id));
    }
  }
  if (out.empty()) throw Error(ErrorCode::NotFound, "no identities match the selection");
  return out;
}

std::vector<GridOverride> parse_overrides(const std::vector<std::string>& specs) {
  std::vector<GridOverride> out;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::MalformedGrid, "'" + s + "': expected name=lo..hi or name=v1,v2,...");
    }
    out.emplace_back(s.substr(0, eq), parse_axis(std::string_view(s).substr(eq + 1)));
  }
  return out;
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void markdown(std::ostream& os, const std::vector<std::string>& header, const Rows& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << md_cell(c) << " |";
    os << "\n";
  };
  line(header);
  os << "|";
  for (std::size_t i = 0; i < header.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& r : rows) line(r);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv(std::ostream& os, const std::vector<std::string>& header, const Rows& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void tabular(std::ostream& os, const std::string& format, const std::vector<std::string>& header, const Rows& rows) {
  if (format == "csv") {
    csv(os, header, rows);
    return;
  }
  if (format == "json") {
    Json doc = Json::array();
    for (const auto& r : rows) {
      Json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = r[i];
      doc.push_back(std::move(obj));
    }
    os << doc.dump(2) << "\n";
    return;
  }
  markdown(os, header, rows);
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

std::string params_str(const IdentityDescriptor& e) {
  std::string s;
  for (const auto& p : e.params) s += (s.empty() ? "" : ", ") + p.name + ":" + std::string(to_string(p.kind));
  return s;
}

int cmd_list(const Selector& sel, const std::string& format, std::ostream& out) {
  const auto entries = select(sel, true);
  if (format == "json") {
    Json doc;
    doc["identities"] = Json::array();
    for (const auto* e : entries) {
      Json params = Json::array();
      for (const auto& p : e->params) params.push_back({{"name", p.name}, {"kind", std::string(to_string(p.kind))}});
      Json constraints = Json::array();
      for (const auto& c : e->constraints) constraints.push_back(c.text);
      doc["identities"].push_back({{"id", e->id},
                                   {"citation", e->citation},
                                   {"statement", e->statement},
                                   {"mode", std::string(to_string(e->mode))},
                                   {"parameters", params},
                                   {"constraints", constraints},
                                   {"grid", grid_str(e->grid)},
                                   {"cost", std::string(to_string(e->cost))},
                                   {"scale_param", e->scale_param}});
    }
    out << doc.dump(2) << "\n";
    return Ok;
  }
  Rows rows;
  for (const auto* e : entries) {
    rows.push_back({e->id, e->citation, std::string(to_string(e->mode)), params_str(*e), grid_str(e->grid),
                    std::string(to_string(e->cost))});
  }
  tabular(out, format, {"id", "citation", "mode", "parameters", "grid", "cost"}, rows);
  return Ok;
}

struct VerifyArgs {
  std::vector<std::string> grid;
  unsigned workers = 1;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  bool timing = true;
};

GridSpec grid_for(const IdentityDescriptor& e, const VerifyArgs& a) {
  GridSpec g = resolve_grid(e, parse_overrides(a.grid));
  if (g.sampling.kind == Sampling::Kind::Random) g.sampling.seed = a.seed;
  return g;
}

int cmd_verify(const Selector& sel, const VerifyArgs& a, const std::string& format, std::ostream& out,
               std::ostream& err) {
  const auto entries = select(sel, false);
  std::vector<GridSpec> grids;
  for (const auto* e : entries) grids.push_back(grid_for(*e, a));

  std::vector<VerificationReport> reports;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    reports.push_back(verify(*entries[i], grids[i], {a.workers, a.tolerance}));
    if (!reports.back().passed()) err << entries[i]->id << ": " << reports.back().failures_total << " failure(s)\n";
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  if (format == "json") {
    out << reports_to_json(reports, a.timing) << "\n";
    return ok ? Ok : VerificationFailed;
  }
  Rows rows;
  for (const auto& r : reports) {
    std::vector<std::string> row = {r.id,
                                    r.passed() ? "PASS" : "FAIL",
                                    std::string(to_string(r.mode)),
                                    std::to_string(r.points_checked),
                                    std::to_string(r.points_skipped),
                                    std::to_string(r.failures_total)};
    if (a.timing) row.push_back(fixed(r.wall_time_ms, 1));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> header = {"id", "status", "mode", "points_checked", "points_skipped", "failures"};
  if (a.timing) header.push_back("wall_time_ms");
  tabular(out, format, header, rows);
  if (format != "markdown") return ok ? Ok : VerificationFailed;

  std::size_t checked = 0;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    checked += r.points_checked;
    failed += r.passed() ? 0 : 1;
  }
  out << "\n" << reports.size() << " identities, " << failed << " failed, " << checked << " points checked\n";
  for (const auto& r : reports) {
    if (r.skipped.empty()) continue;
    out << "\nSkipped in " << r.id << ":\n";
    for (const auto& s : r.skipped) out << "- " << s.reason << " (" << s.count << ")\n";
  }
  for (const auto& r : reports) {
    if (r.passed()) continue;
    out << "\nFailures in " << r.id << " (" << r.failures_total << " total):\n\n";
    Rows frows;
    for (const auto& f : r.failures) frows.push_back({f.point.str(), f.lhs, f.rhs, f.error});
    markdown(out, {"point", "lhs", "rhs", "error"}, frows);
  }
  return ok ? Ok : VerificationFailed;
}

int cmd_bench(const Selector& sel, const std::vector<long>& ns, int reps, const std::string& format,
              std::ostream& out) {
  const auto entries = select(sel, false);
  for (const auto* e : entries) {
    if (e->scale_param.empty()) throw Error(ErrorCode::NotBenchmarkable, e->id + " has no scaling parameter");
  }
  std::vector<BenchRecord> records;
  for (const auto* e : entries) {
    auto r = bench(*e, ns, reps);
    records.insert(records.end(), r.begin(), r.end());
  }
  if (format == "json") {
    out << bench_to_json(records) << "\n";
    return Ok;
  }
  Rows rows;
  for (const auto& b : records) {
    rows.push_back({b.id, std::to_string(b.n), std::to_string(b.lhs_terms), std::to_string(b.rhs_terms),
                    std::to_string(b.lhs_seq_calls), std::to_string(b.rhs_seq_calls), fixed(b.lhs_ms, 4),
                    fixed(b.rhs_ms, 4), fixed(b.speedup, 1)});
  }
  tabular(out, format,
          {"id", "n", "lhs_terms", "rhs_terms", "lhs_seq_calls", "rhs_seq_calls", "lhs_ms", "rhs_ms", "speedup"}, rows);
  return Ok;
}

int cmd_table(const std::string& id, const VerifyArgs& a, const std::string& format, std::ostream& out) {
  const IdentityDescriptor& e = find_identity(id);
  const GridSpec g = grid_for(e, a);
  std::vector<std::string> header;
  for (const auto& p : e.params) header.push_back(p.name);
  header.insert(header.end(), {"lhs", "rhs", "status"});
  Rows rows;
  bool ok = true;
  EvalContext ctx;
  for (const auto& p : enumerate_points(e, g)) {
    std::vector<std::string> row;
    for (const auto& [name, value] : p.entries()) row.push_back(value.str());
    if (auto why = e.violation(p)) {
      row.insert(row.end(), {"", "", "skipped: " + *why});
    } else {
      const Value l = e.lhs(p, ctx);
      const Value r = e.rhs(p, ctx);
      const bool same = sides_agree(e.mode, l, r, a.tolerance);
      ok = ok && same;
      row.insert(row.end(), {value_str(l), value_str(r), same ? "equal" : "DIFFERENT"});
    }
    rows.push_back(std::move(row));
  }
  tabular(out, format, header, rows);
  return ok ? Ok : VerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of double-sum identities over special-number families", "dsum"};
  app.require_subcommand(1);

  Selector sel;
  VerifyArgs va;
  va.workers = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "markdown";
  std::string out_path;
  std::string show_id;
  std::string table_id;
  std::vector<long> ns = {100, 200, 400};
  int reps = 3;

  auto add_selector = [&](CLI::App* sub) {
    sub->add_option("ids", sel.ids, "Identity ids; a trailing * selects by prefix");
    sub->add_flag("--all", sel.all, "Every catalog entry");
    sub->add_option("--family", sel.family, "Id prefix, e.g. F4 or S7.3");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"markdown", "json", "csv"}));
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", va.grid, "Axis override name=lo..hi or name=v1,v2,... (repeatable)");
    sub->add_option("--seed", va.seed, "Seed for randomly sampled grids");
    sub->add_option("--tolerance", va.tolerance, "Relative tolerance for float-trig entries");
  };

  auto* list = app.add_subcommand("list", "Catalog table");
  add_selector(list);
  add_output(list);

  auto* show = app.add_subcommand("show", "Full card of one identity");
  show->add_option("id", show_id, "Identity id")->required();

  auto* ver = app.add_subcommand("verify", "Evaluate both sides over a grid");
  add_selector(ver);
  add_output(ver);
  add_grid(ver);
  ver->add_option("--workers", va.workers, "Parallel workers")->check(CLI::PositiveNumber);
  ver->add_flag("!--no-timing", va.timing, "Leave out wall times");

  auto* ben = app.add_subcommand("bench", "Time the nested side against the closed side");
  add_selector(ben);
  add_output(ben);
  ben->add_option("--n", ns, "Values of the scale parameter")->delimiter(',');
  ben->add_option("--reps", reps, "Timed repetitions per side")->check(CLI::PositiveNumber);

  auto* tab = app.add_subcommand("table", "Both sides at every grid point");
  tab->add_option("id", table_id, "Identity id")->required();
  add_output(tab);
  add_grid(tab);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return Usage;
    }
  }
  std::ostream& dest = out_path.empty() ? out : file;

  try {
    if (*list) return cmd_list(sel, format, dest);
    if (*show) {
      dest << catalog_entry_doc(show_id);
      return Ok;
    }
    if (*ver) return cmd_verify(sel, va, format, dest, err);
    if (*ben) return cmd_bench(sel, ns, reps, format, dest);
    if (*tab) return cmd_table(table_id, va, format, dest);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}

}  // namespace dsum::cli
