#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "bei/cas.hpp"
#include "bei/cutsets.hpp"
#include "bei/graph.hpp"

namespace bei {

/// Position in the diameter filtration D_1 ⊂ D_2 ⊂ ….  k is empty for a
/// disconnected graph.
struct DiameterClass {
  std::optional<int> k;
  /// Exact diameter known, so the graph lies in D_k minus D_{k-1}.
  bool strict = true;
};

DiameterClass diameter_class(const Graph& g);

struct DistanceMismatch {
  int u;
  int v;
  int expected;
  int actual;
};

struct ReductionCheck {
  Graph gadget;
  std::optional<int> diameter;
  bool diameter_ok = false;
  bool accessible_transfer_ok = false;
  /// Every pair matches the case analysis (with the completed case for d3).
  bool distance_formula_ok = false;
  /// Pairs where the case analysis as printed disagrees with BFS.
  std::vector<DistanceMismatch> literal_formula_exceptions;
};

/// Throws precondition unless h is connected and accessible.
ReductionCheck verify_reduction_d2(const Graph& h, const EnumerationOptions& options = {});
ReductionCheck verify_reduction_d3(const Graph& h, const EnumerationOptions& options = {});

struct ScanOptions {
  /// Diameters to keep; empty keeps all.  Disconnected graphs are dropped
  /// whenever the set is nonempty.
  std::set<int> diameters;
  std::optional<int> max_n;
  /// Accessible graphs get a script here when set.
  std::optional<std::filesystem::path> cas_dir;
  CasDialect dialect = CasDialect::m2;
  EnumerationOptions enumeration;
  /// Worker threads over graphs; 0 means hardware concurrency.
  int jobs = 0;
};

struct ScanRecord {
  int line = 0;
  std::string graph6;
  int n = 0;
  std::optional<int> diameter;
  bool unmixed = false;
  bool accessible = false;
  bool disconnected_extension = false;
  std::optional<std::string> cas_script_path;
};

struct ScanSummary {
  int records = 0;
  int filtered = 0;
  int errors = 0;
};

std::string to_json(const ScanRecord& record);

/// Reads graph6 lines, writes one JSON line per kept graph in input order.
/// Bad lines are reported on `errors` as JSON with their line number and
/// the scan continues.
ScanSummary bms_scan(std::istream& corpus, std::ostream& out, std::ostream& errors,
                     const ScanOptions& options = {});

}  // namespace bei
