#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "segrev/atlas.hpp"

// Golden-table loading, machine-readable census exports, and the named
// verification checks shared by the CLI and the acceptance suite.

namespace segrev {

// --- golden tables ----------------------------------------------------------

struct GoldenHyperplaneRow {
  int label = 0;
  int points = 0;
  int lines = 0;
  std::vector<int> order_hist;
  std::map<int, int> sub_profile;        // 0 = Deep
  std::set<std::string> vl_types;
  long long cardinality = 0;
  int weight = 0;                        // 0 when the table has no weight column
};

struct GoldenVLRow {
  int label = 0;
  int core_points = 0;
  int core_lines = 0;
  std::string pattern;
  std::map<int, int> composition;
  long long cardinality = 0;
};

// TSV files with '#' comments and a header row; throw std::runtime_error on
// missing files or malformed rows.
std::vector<GoldenHyperplaneRow> load_hyperplane_table(const std::string& path);
std::vector<GoldenVLRow> load_vl_table(const std::string& path);
std::map<int, long long> load_count_table(const std::string& path);

// Conventional file name for each table id (t1..t7).
std::string golden_file_name(const std::string& table_id);

// --- exports ----------------------------------------------------------------

// Deterministic, trailing-newline-terminated.  JSON carries a "schema" field.
std::string hyperplane_census_json(const HyperplaneCensus& census);
std::string hyperplane_census_csv(const HyperplaneCensus& census);
std::string vl_census_json(const VLCensus& census);
std::string vl_census_csv(const VLCensus& census);
std::string quadric_report_json(int n, const QuadricCensusReport& report);
std::string lgr_report_json(const LgrReport& report);
std::string weights_csv(const std::vector<int>& weights);

// --- verification -----------------------------------------------------------

struct CheckResult {
  std::string id;        // e.g. "t5", "quadric.n3"
  std::string what;      // one-line description
  bool passed = false;
  std::string detail;    // expected/actual on failure, empty on success
};

// Scopes: all, t1..t7, quadric, lgr, blowup, pg, construction, weights,
// orbits.  Unknown scope throws std::invalid_argument.
std::vector<CheckResult> run_verify(const Atlas& atlas, const std::string& data_dir,
                                    const std::string& scope);

}  // namespace segrev
