#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

inline constexpr int kDefaultEnumerationBound = 24;
/// Masks are 64-bit, so no override can go past this.
inline constexpr int kMaxEnumerationBound = 64;

/// kDefaultEnumerationBound unless the BEI_BOUND environment variable holds
/// another value.
int default_enumeration_bound();

struct EnumerationOptions {
  /// Largest vertex count accepted; 0 means default_enumeration_bound().
  int bound = 0;
  /// Only report cutsets with at most this many vertices.
  std::optional<int> size_cap;
  /// Worker threads; 0 means hardware concurrency.
  int jobs = 0;
};

struct CutsetReport {
  /// By size, then lexicographic.  Always starts with the empty set.
  std::vector<VertexSet> cutsets;
  /// ω(G∖T) for each entry of `cutsets`.
  std::vector<int> components;
  /// ω(G∖T) = |T| + ω(G) for every listed T.  For connected graphs this is
  /// the usual |T| + 1 condition; the general form is an extension.
  bool is_unmixed = false;
  bool is_accessible_system = false;
  /// |V| + max over listed T of (ω(G∖T) − |T|).
  int oracle_dimension = 0;
  /// False when size_cap cut the enumeration short; the three verdicts above
  /// then only describe the listed cutsets.
  bool complete = true;
  bool disconnected_extension = false;
  /// First cutset in canonical order that breaks unmixedness.
  std::optional<VertexSet> unmixed_witness;
};

bool is_cutset(const Graph& g, const VertexSet& t);

/// Throws bound_exceeded when the graph has more vertices than the bound.
CutsetReport enumerate_cutsets(const Graph& g, const EnumerationOptions& options = {});

bool is_unmixed(const Graph& g, const EnumerationOptions& options = {});
std::optional<VertexSet> unmixed_witness(const Graph& g, const EnumerationOptions& options = {});
bool is_accessible_system(const Graph& g, const EnumerationOptions& options = {});
/// Unmixed and an accessible set system.
bool is_accessible(const Graph& g, const EnumerationOptions& options = {});
/// Krull dimension of the quotient by the binomial edge ideal.
int dimension_oracle(const Graph& g, const EnumerationOptions& options = {});

/// JSON object with the verdicts and every cutset; labels are included
/// when the graph has them.
std::string to_json(const CutsetReport& report, const Graph& g);
/// One JSON object per cutset, newline separated.
std::string to_jsonl(const CutsetReport& report, const Graph& g);

/// A removal order t_1, t_2, … such that every intermediate T∖{t_1..t_i} is
/// a cutset, ending at the empty set.  Prefers lower indices.  nullopt when
/// no such chain exists; throws not_a_cutset when t itself is not one.
std::optional<std::vector<int>> accessibility_witness_chain(const Graph& g, const VertexSet& t);

}  // namespace bei
