#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "specfun/series.hpp"
#include "specfun/verify/report.hpp"

namespace specfun::cli {

enum exit_code : int {
  ok = 0,
  violation = 1,
  domain = 2,
  usage = 64,
  io = 74,
};

enum class Format { human, json, csv };

Format parse_format(const std::string& s);

/// key=value pairs collected from --param and positional arguments.
/// Every accessor marks its key as used; leftovers are rejected.
class Params {
 public:
  void set(const std::string& assignment);
  bool has(const std::string& key) const { return kv_.count(key) != 0; }
  double num(const std::string& key);
  double num(const std::string& key, double fallback);
  long long integer(const std::string& key);
  long long integer(const std::string& key, long long fallback);
  std::string text(const std::string& key, const std::string& fallback);
  bool flag(const std::string& key, bool fallback);
  void reject_unused() const;
  const std::map<std::string, std::string>& values() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
  std::set<std::string> used_;
};

/// Result of one eval: named fields (the first one is the headline value),
/// optional series metadata.
struct EvalOutput {
  std::vector<std::pair<std::string, double>> fields;
  std::optional<SeriesEval> series;
};

struct Target {
  std::string name;
  std::string params;  // usage hint
  std::string summary;
  std::function<EvalOutput(Params&)> fn;
};

const std::vector<Target>& targets();
const Target& find_target(const std::string& name);

struct Table {
  std::string label_column;  // leading text column, empty if none
  std::vector<std::string> labels;
  std::vector<std::string> columns;  // numeric columns
  std::vector<std::vector<double>> rows;
  std::vector<std::vector<std::string>> human;  // preformatted rows for the human format
  std::vector<std::string> notes;
};

std::vector<std::string> table_names();
Table build_table(const std::string& name, Params& params);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace specfun::cli
