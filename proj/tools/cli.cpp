#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "format.hpp"
#include "specfun/specfun.hpp"

namespace specfun::cli {

Format parse_format(const std::string& s) {
  if (s == "human") return Format::human;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  fail(errc::configuration, "format must be human, json or csv");
}

// ---------------------------------------------------------------------------
// Params

void Params::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) fail(errc::configuration, "expected key=value, got '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  if (!kv_.emplace(key, assignment.substr(eq + 1)).second)
    fail(errc::configuration, "parameter '" + key + "' given twice");
}

namespace {

// accepts plain numbers and simple fractions such as 7/12
bool parse_real(const std::string& s, double& out) {
  auto whole = [](const std::string& t, double& v) {
    if (t.empty()) return false;
    char* end = nullptr;
    v = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
  };
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    double num = 0.0, den = 0.0;
    if (!whole(s.substr(0, slash), num) || !whole(s.substr(slash + 1), den) || den == 0.0) return false;
    out = num / den;
    return true;
  }
  return whole(s, out);
}

}  // namespace

double Params::num(const std::string& key) {
  const auto it = kv_.find(key);
  if (it == kv_.end()) fail(errc::configuration, "missing parameter '" + key + "'");
  used_.insert(key);
  double v = 0.0;
  if (!parse_real(it->second, v)) fail(errc::configuration, "parameter '" + key + "' is not a number");
  return v;
}

double Params::num(const std::string& key, double fallback) { return has(key) ? num(key) : fallback; }

long long Params::integer(const std::string& key) {
  const auto it = kv_.find(key);
  if (it == kv_.end()) fail(errc::configuration, "missing parameter '" + key + "'");
  used_.insert(key);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(it->second, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size()) fail(errc::configuration, "parameter '" + key + "' is not an integer");
  return v;
}

long long Params::integer(const std::string& key, long long fallback) { return has(key) ? integer(key) : fallback; }

std::string Params::text(const std::string& key, const std::string& fallback) {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  used_.insert(key);
  return it->second;
}

bool Params::flag(const std::string& key, bool fallback) {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  used_.insert(key);
  const std::string& v = it->second;
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  fail(errc::configuration, "parameter '" + key + "' must be true or false");
}

void Params::reject_unused() const {
  for (const auto& [k, v] : kv_)
    if (!used_.count(k)) fail(errc::configuration, "unknown parameter '" + k + "'");
}

namespace {

int exit_for(errc e) {
  switch (e) {
    case errc::configuration:
    case errc::lookup: return usage;
    default: return domain;
  }
}

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// eval

int cmd_eval(const std::string& name, Params& params, Format fmt, std::ostream& out) {
  const Target& target = find_target(name);
  // evaluate before checking leftovers so the missing-parameter message wins
  const EvalOutput res = target.fn(params);
  params.reject_unused();
  switch (fmt) {
    case Format::human:
      if (res.fields.size() == 1) {
        out << fmt_human(res.fields.front().second) << '\n';
      } else {
        for (const auto& [k, v] : res.fields) out << k << ": " << fmt_human(v) << '\n';
      }
      if (res.series)
        out << "terms_used: " << res.series->terms_used << "\nest_error: " << fmt_human(res.series->est_error)
            << "\nconverged: " << (res.series->converged ? "true" : "false") << '\n';
      break;
    case Format::json: {
      json doc;
      doc["target"] = name;
      json p = json::object();
      for (const auto& [k, v] : params.values()) {
        double d = 0.0;
        if (parse_real(v, d)) p[k] = d;
        else p[k] = v;
      }
      doc["params"] = p;
      for (const auto& [k, v] : res.fields) doc[k] = v;
      if (res.series) {
        doc["terms_used"] = res.series->terms_used;
        doc["est_error"] = res.series->est_error;
        doc["converged"] = res.series->converged;
      }
      write_json(out, doc);
      break;
    }
    case Format::csv:
      out << "target,field,value\n";
      for (const auto& [k, v] : res.fields) out << csv_field(name) << ',' << csv_field(k) << ',' << fmt17(v) << '\n';
      if (res.series) {
        out << csv_field(name) << ",terms_used," << res.series->terms_used << '\n';
        out << csv_field(name) << ",est_error," << fmt17(res.series->est_error) << '\n';
        out << csv_field(name) << ",converged," << (res.series->converged ? 1 : 0) << '\n';
      }
      break;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// verify / report

std::string status_of(const verify::SuiteReport& r) {
  if (r.skipped) return "skipped";
  return r.passed() ? "pass" : "fail";
}

json suite_json(const verify::SuiteReport& r, const verify::GridSpec& grid) {
  json j;
  j["suite"] = r.suite_id;
  j["status"] = status_of(r);
  j["points"] = r.points_evaluated;
  j["min_margin"] = r.min_margin;
  j["worst_point"] = r.worst_point;
  j["worst_lhs"] = r.worst_lhs;
  j["worst_rhs"] = r.worst_rhs;
  j["worst_where"] = r.worst_where;
  j["tolerance"] = r.tolerance;
  j["grid"] = grid.to_string();
  j["anchor"] = r.anchor;
  j["probe"] = r.expect_violations;
  j["detail"] = r.detail;
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"point", x.point}, {"margin", x.margin}, {"where", x.where}});
  j["violations"] = std::move(v);
  json f = json::array();
  for (const auto& x : r.failures) f.push_back({{"point", x.point}, {"where", x.where}, {"message", x.message}});
  j["failures"] = std::move(f);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json summary_json(const json& suites) {
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& s : suites) {
    const std::string st = s.at("status").get<std::string>();
    if (st == "pass") ++passed;
    else if (st == "fail") ++failed;
    else ++skipped;
  }
  return {{"suites", suites.size()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
}

std::string csv_number(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return fmt17(v.get<double>());
  return v.dump();
}

void write_csv(std::ostream& out, const json& suites) {
  out << "suite,status,points,min_margin,worst_point,worst_lhs,worst_rhs,worst_where,tolerance,violations,failures,"
         "elapsed_ms\n";
  for (const auto& s : suites) {
    out << csv_field(s.at("suite").get<std::string>()) << ',' << s.at("status").get<std::string>() << ','
        << csv_number(s.at("points")) << ',' << csv_number(s.at("min_margin")) << ','
        << csv_number(s.at("worst_point")) << ',' << csv_number(s.at("worst_lhs")) << ','
        << csv_number(s.at("worst_rhs")) << ',' << csv_field(s.at("worst_where").get<std::string>()) << ','
        << csv_number(s.at("tolerance")) << ',' << s.at("violations").size() << ',' << s.at("failures").size() << ','
        << csv_number(s.at("elapsed_ms")) << '\n';
  }
}

void write_human(std::ostream& out, const std::vector<verify::SuiteReport>& reports) {
  constexpr std::size_t shown = 5;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    const std::string st = status_of(r);
    std::string tag = st == "pass" ? "PASS" : st == "fail" ? "FAIL" : "SKIP";
    out << tag << ' ' << r.suite_id << ": points=" << r.points_evaluated << " min_margin=" << fmt_human(r.min_margin)
        << " worst_point=" << fmt_human(r.worst_point) << " violations=" << r.violations.size();
    if (!r.failures.empty()) out << " failures=" << r.failures.size();
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r.elapsed_ms);
    out << " elapsed=" << ms << "ms\n";
    if (r.expect_violations) out << "  probe: a violation is the expected outcome\n";
    if (!r.detail.empty() && (st != "pass" || r.expect_violations)) out << "  " << r.detail << '\n';
    if (st == "fail") {
      out << "  claim: " << r.anchor << '\n';
      out << "  worst: " << r.worst_where << " lhs=" << fmt_human(r.worst_lhs) << " rhs=" << fmt_human(r.worst_rhs)
          << '\n';
      for (std::size_t i = 0; i < std::min(shown, r.violations.size()); ++i)
        out << "  violation at " << fmt_human(r.violations[i].point) << ": margin " << fmt_human(r.violations[i].margin)
            << " (" << r.violations[i].where << ")\n";
      if (r.violations.size() > shown) out << "  ... " << r.violations.size() - shown << " more violations\n";
      for (std::size_t i = 0; i < std::min(shown, r.failures.size()); ++i)
        out << "  failure at " << fmt_human(r.failures[i].point) << " (" << r.failures[i].where
            << "): " << r.failures[i].message << '\n';
      if (r.failures.size() > shown) out << "  ... " << r.failures.size() - shown << " more failures\n";
    }
    if (st != "fail") ++passed;
  }
  out << passed << " of " << reports.size() << " suites passed\n";
}

void save_document(const std::string& path, const json& doc, bool csv) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  if (csv) write_csv(f, doc.at("suites"));
  else write_json(f, doc);
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

struct VerifyOptions {
  std::string suite;
  std::string grid;
  std::string tol;
  std::string state;
  bool no_state = false;
  unsigned jobs = 0;
};

int cmd_verify(const VerifyOptions& o, Format fmt, std::ostream& out) {
  std::vector<std::string> ids;
  if (o.suite == "all") ids = verify::default_suite_ids();
  else ids.push_back(verify::find_suite(o.suite).id);

  std::optional<verify::GridSpec> grid;
  if (!o.grid.empty()) grid = verify::parse_grid(o.grid);
  std::optional<double> tol;
  if (!o.tol.empty()) {
    double v = 0.0;
    if (!parse_real(o.tol, v) || !(v >= 0.0) || !std::isfinite(v))
      fail(errc::configuration, "--tol must be a finite number >= 0");
    tol = v;
  }

  std::vector<verify::GridSpec> grids;
  for (const auto& id : ids) grids.push_back(grid.value_or(verify::find_suite(id).grid));

  // suites run in parallel; results land in registry order and are printed afterwards
  std::vector<verify::SuiteReport> reports(ids.size());
  std::vector<std::exception_ptr> errors(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        const auto& def = verify::find_suite(ids[i]);
        reports[i] = verify::run_suite(ids[i], grids[i], tol.value_or(def.tolerance));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned jobs = o.jobs != 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, ids.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  json suites = json::array();
  for (std::size_t i = 0; i < ids.size(); ++i) suites.push_back(suite_json(reports[i], grids[i]));
  json doc;
  doc["suites"] = suites;
  doc["summary"] = summary_json(suites);

  switch (fmt) {
    case Format::human: write_human(out, reports); break;
    case Format::json: write_json(out, doc); break;
    case Format::csv: write_csv(out, suites); break;
  }
  out.flush();
  if (!o.no_state) save_document(o.state, doc, false);
  const bool all_ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return all_ok ? ok : violation;
}

int cmd_report(const std::string& path, const std::string& format, const std::string& state, std::ostream& out) {
  bool csv = false;
  if (format.empty()) {
    csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  } else if (format == "csv") {
    csv = true;
  } else if (format != "json") {
    fail(errc::configuration, "report format must be json or csv");
  }
  std::ifstream in(state, std::ios::binary);
  if (!in) throw IoError("no verify results at '" + state + "'; run verify first");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw IoError("cannot read '" + state + "': " + e.what());
  }
  if (!doc.is_object() || !doc.contains("suites") || !doc["suites"].is_array())
    throw IoError("'" + state + "' is not a verify result document");
  // recompute the summary so the output depends only on the suite records
  json clean;
  clean["suites"] = doc["suites"];
  clean["summary"] = summary_json(doc["suites"]);
  save_document(path, clean, csv);
  out << "wrote " << path << '\n';
  return ok;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const std::string& name, Params& params, Format fmt, std::ostream& out) {
  Table t = build_table(name, params);
  params.reject_unused();
  switch (fmt) {
    case Format::human:
      for (const auto& row : t.human) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
      }
      for (const auto& n : t.notes) out << "# " << n << '\n';
      break;
    case Format::csv: {
      bool first = true;
      if (!t.label_column.empty()) {
        out << t.label_column;
        first = false;
      }
      for (const auto& c : t.columns) {
        out << (first ? "" : ",") << c;
        first = false;
      }
      out << '\n';
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        first = true;
        if (!t.label_column.empty()) {
          out << csv_field(t.labels[r]);
          first = false;
        }
        for (double v : t.rows[r]) {
          out << (first ? "" : ",") << fmt17(v);
          first = false;
        }
        out << '\n';
      }
      break;
    }
    case Format::json: {
      json rows = json::array();
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        json row;
        if (!t.label_column.empty()) row[t.label_column] = t.labels[r];
        for (std::size_t c = 0; c < t.columns.size(); ++c) row[t.columns[c]] = t.rows[r][c];
        rows.push_back(std::move(row));
      }
      json doc;
      doc["table"] = name;
      doc["rows"] = std::move(rows);
      doc["notes"] = t.notes;
      write_json(out, doc);
      break;
    }
  }
  return ok;
}

std::string target_list() {
  std::ostringstream os;
  os << "eval targets:\n";
  for (const Target& t : targets()) os << "  " << t.name << " [" << t.params << "]  " << t.summary << '\n';
  return os.str();
}

std::string suite_list() {
  std::ostringstream os;
  os << "verification suites:\n";
  for (const auto& s : verify::registry())
    os << "  " << s.id << (s.probe ? " (probe)" : "") << "  " << s.anchor << '\n';
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"specfun: special-function kernels and numeric verification of identities and inequalities"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every verb");

  std::string format = "human";
  std::vector<std::string> param_flags, positional;

  auto* eval = app.add_subcommand("eval", "Evaluate one kernel function");
  std::string target;
  eval->add_option("target", target, "Function id (see 'eval list')")->required();
  eval->add_option("params", positional, "key=value arguments");
  eval->add_option("--param,-p", param_flags, "key=value (repeatable)");
  eval->add_option("--format,-f", format, "human, json or csv");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite, or all of them");
  VerifyOptions vo;
  vo.state = ".specfun_last_verify.json";
  verify_cmd->add_option("suite", vo.suite, "Suite id, 'all', or 'list'")->required();
  verify_cmd->add_option("--grid", vo.grid, "lo,hi,n[,linear|log|logit]");
  verify_cmd->add_option("--tol", vo.tol, "Tolerance override");
  verify_cmd->add_option("--format,-f", format, "human, json or csv");
  verify_cmd->add_option("--state", vo.state, "Where the results for 'report' are kept");
  verify_cmd->add_flag("--no-state", vo.no_state, "Do not record results for 'report'");
  verify_cmd->add_option("--jobs,-j", vo.jobs, "Worker threads (default: hardware concurrency)");

  auto* table = app.add_subcommand("table", "Print a reference table");
  std::string table_name;
  table->add_option("name", table_name, "theta, detemple, alzer-ball or karatsuba-gamma")->required();
  table->add_option("params", positional, "key=value arguments, e.g. n=1..10");
  table->add_option("--param,-p", param_flags, "key=value (repeatable)");
  table->add_option("--format,-f", format, "human, json or csv");

  auto* report = app.add_subcommand("report", "Write the most recent verify results to a file");
  std::string report_path, report_format, report_state = ".specfun_last_verify.json";
  report->add_option("path", report_path, "Output file (.json or .csv)")->required();
  report->add_option("--format,-f", report_format, "json or csv (default: from the file extension)");
  report->add_option("--state", report_state, "Results file written by verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*eval) {
      if (target == "list") {
        out << target_list();
        return ok;
      }
      Params p;
      for (const auto& s : positional) p.set(s);
      for (const auto& s : param_flags) p.set(s);
      return cmd_eval(target, p, parse_format(format), out);
    }
    if (*verify_cmd) {
      if (vo.suite == "list") {
        out << suite_list();
        return ok;
      }
      return cmd_verify(vo, parse_format(format), out);
    }
    if (*table) {
      Params p;
      for (const auto& s : positional) p.set(s);
      for (const auto& s : param_flags) p.set(s);
      return cmd_table(table_name, p, parse_format(format), out);
    }
    if (*report) return cmd_report(report_path, report_format, report_state, out);
  } catch (const IoError& e) {
    err << "specfun: I/O error: " << e.what() << '\n';
    return io;
  } catch (const specfun::error& e) {
    err << "specfun: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "specfun: computation error: " << e.what() << '\n';
    return domain;
  }
  return usage;
}

}  // namespace specfun::cli
