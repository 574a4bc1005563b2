#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "okforce/graph.hpp"

namespace okf {

struct SuiteOptions {
  int nmax = 6;            // labeled graphs on 1..nmax vertices (at most 6)
  int tree_nmax = -1;      // labeled trees; -1 means min(9, nmax + 2)
  int orientation_nmax = 5;  // every oriented graph on 1..min(nmax, this) vertices
  int random_cases = 500;  // seeded random orientations on 6..random_nmax vertices
  int random_nmax = 10;
  std::uint64_t seed = 1;
  int threads = 1;
  std::size_t max_recorded = 50;  // violations kept in full per check
};

struct CheckSpec {
  std::string id;
  std::string title;
  std::string anchor;    // the statement under test, as formulas
  std::string universe;  // instances the check runs over
  bool needs_exhibit = false;  // must also reproduce a known counterexample family
};

struct Finding {
  std::string instance;  // replayable JSON
  std::string observed;
};

struct CheckResult {
  std::string id;
  long long instances = 0;
  long long skipped = 0;  // instances where the hypothesis fails
  long long violation_count = 0;
  std::vector<Finding> violations;  // the first max_recorded
  std::vector<Finding> exhibits;
  bool needs_exhibit = false;
  double runtime = 0.0;

  bool passed() const { return violation_count == 0 && (!needs_exhibit || !exhibits.empty()); }
};

// Memoized exact mof_k / MOF_k by labeled graph; safe for concurrent use.
class GraphTable {
 public:
  int mof(const Graph& g, int k);
  int MOF(const Graph& g, int k);  // NOLINT(readability-identifier-naming)

 private:
  int lookup(const Graph& g, int k, bool maximize);
  std::mutex mu_;
  std::map<std::tuple<int, std::uint64_t, int, bool>, int> values_;
};

const std::vector<CheckSpec>& check_catalog();

// Throws LimitError when the options ask for a universe beyond the exact solvers' reach.
void validate_suite_options(const SuiteOptions& options);

CheckResult run_check(const std::string& id, const SuiteOptions& options);
CheckResult run_check(const std::string& id, const SuiteOptions& options, GraphTable& table);
// ids empty means every check.
std::vector<CheckResult> run_suite(const std::vector<std::string>& ids, const SuiteOptions& options);

nlohmann::json to_json(const CheckResult& r);

struct ScanRecord {
  Graph graph;
  int k = 1;
  int value = 0;          // exact MOF_k
  std::string orientation_bits;  // realizing orientation
  std::vector<int> witness;      // its minimum forcing set
  double threshold = 0.0;
  bool satisfied = false;
};

struct ScanReport {
  std::string problem;  // p1 | p2 | p3 | p4
  std::string universe;
  std::vector<ScanRecord> records;
  std::vector<ScanRecord> counterexamples;
  std::vector<std::string> notes;
  std::string verdict;  // "no counterexample in universe" or "counterexample found"
};

struct ScanOptions {
  int nmax = 6;
  bool trees = false;  // labeled trees instead of connected labeled graphs
  int k = 0;           // p1: fixed k; 0 scans every k in 1..Delta
  int threads = 1;
};

// p1: MOF_k >= ceil(n/(k+1)); p2: MOF >= n/2; p3: MOF >= n - mu; p4: tabulates MOF = n - 1.
ScanReport scan(const std::string& problem, const ScanOptions& options);

nlohmann::json to_json(const ScanReport& r, bool include_records = true);

}  // namespace okf
