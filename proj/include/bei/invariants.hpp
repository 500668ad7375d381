#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bei/corona.hpp"
#include "bei/cutsets.hpp"
#include "bei/graph.hpp"

namespace bei {

enum class Provenance { formula, closed_form, oracle, user_supplied };
std::string_view to_string(Provenance p) noexcept;

/// A number together with where it came from.  `value` is empty when no
/// available method produces it.
struct Quantity {
  std::optional<int> value;
  Provenance provenance = Provenance::formula;
  std::string rule;
};

/// Algebraic data of the pendant graph H, all for S_H/J_H.
struct BaseInvariants {
  int h = 0;
  std::optional<int> dim_q;
  std::optional<int> depth_q;
  std::optional<int> reg_q;
  /// 2h − depth_q.
  std::optional<int> pd;
  /// r_H with β_{p_H, p_H + r_H} extremal; r_H ≥ 2.
  std::optional<int> r_extremal;
  bool is_complete = false;
  std::optional<bool> is_unmixed;
  std::optional<bool> is_cm;
  std::optional<bool> is_accessible;
  Provenance provenance = Provenance::closed_form;
  std::vector<std::string> notes;

  /// dim_q − depth_q when both are known.
  std::optional<int> cmdef() const;
  /// Throws precondition when the stored numbers contradict each other.
  void validate() const;
};

/// Depth |V|+1 and pd |V|−1 hold for every block graph.  When no vertex lies
/// in three or more blocks the graph is Cohen-Macaulay, dim = |V|+1 and
/// reg = iv+1; otherwise dim comes from the cutset oracle and reg is left
/// for the caller.  Throws precondition for non-block graphs.
BaseInvariants base_invariants_block_graph(const Graph& g, const EnumerationOptions& options = {});

/// Block-graph closed forms when they apply, otherwise only what the cutset
/// oracle decides (dim, unmixed, accessible).
BaseInvariants base_invariants_for(const Graph& g, const EnumerationOptions& options = {});

/// {"h":..,"dim":..,"depth":..,"reg":..,"r_extremal":..,"complete":..,
///  "unmixed":..,"cm":..,"accessible":..}; pd is derived.
BaseInvariants base_invariants_from_json(std::string_view text);
std::string to_json(const BaseInvariants& base);

enum class Family { l_corona_complete, full_corona_complete, corona_cm_closed, corona_path };
std::string_view to_string(Family f) noexcept;

struct Verdict {
  std::optional<bool> value;
  std::string rule;
};

struct ClassifyResult {
  Verdict unmixed;
  Verdict accessible;
  Verdict cm;
};

struct ExtremalPosition {
  int p;
  int j;
  std::string rule;
  std::vector<std::string> notes;

  int degree() const { return p + j; }
};

struct InvariantReport {
  Family family = Family::l_corona_complete;
  /// n for K_n families, b = |V(B)| for the CM-closed families.
  int n = 0;
  int ell = 0;
  std::string base_description;
  BaseInvariants pendant;
  int vertex_count = 0;
  Quantity dim;
  Quantity depth;
  Quantity reg;
  Quantity pd;
  Quantity cmdef;
  std::optional<ExtremalPosition> extremal;
  /// Why `extremal` is empty.
  std::string extremal_unavailable;
  std::optional<ClassifyResult> verdicts;
  /// Cutset-oracle dimension of the concrete product, when computed.
  std::optional<int> dim_oracle;
  std::vector<std::string> notes;
};

/// n − ℓ + 1 + ℓ·dim_q for K_n ∘_ℓ H.
int dim_l_corona(int n, int ell, const BaseInvariants& base);

/// K_n ∘_1 H with n ≥ 2.
InvariantReport depth_reg_one_corona(int n, const BaseInvariants& base);
/// K_n ∘_ℓ H with 1 ≤ ℓ < n.  Stated for n ≥ 3; n = 2 is evaluated but
/// flagged.
InvariantReport depth_reg_t_corona(int n, int ell, const BaseInvariants& base);
/// K_n ∘ H, n ≥ 1.
InvariantReport depth_reg_full_corona(int n, const BaseInvariants& base);
/// Dispatches on (n, ℓ): ℓ = n full corona, ℓ = 1 one-corona, else t-corona.
InvariantReport depth_reg_corona_complete(int n, int ell, const BaseInvariants& base);

/// B ∘ H for a Cohen-Macaulay closed B.  dim is filled from the formula when
/// B is complete, otherwise from the cutset oracle when `pendant` is given
/// and the product fits the bound.
InvariantReport depth_reg_corona_cm_closed(const Graph& b_graph, const BaseInvariants& base,
                                           const Graph* pendant = nullptr,
                                           const EnumerationOptions& options = {});
InvariantReport depth_reg_corona_path(int n, const BaseInvariants& base,
                                      const Graph* pendant = nullptr,
                                      const EnumerationOptions& options = {});

/// Piecewise CM-defect of K_n ∘_ℓ H.
int cmdef_report(int n, int ell, const BaseInvariants& base);

/// (p, p+j) of the extremal Betti number each family's statement names.
/// `size` is n for K_n families and b for CM-closed ones; `ell` only
/// matters for l_corona_complete.
ExtremalPosition extremal_betti_position(Family family, int size, int ell,
                                         const BaseInvariants& base);

/// Unmixed / accessible / CM verdicts for G ∘_L H from proved statements
/// only; anything else is reported as unknown.
ClassifyResult classify(const CoronaSpec& spec, const BaseInvariants& base);

/// Builds K_n ∘_ℓ H from a concrete pendant and stores its cutset-oracle
/// dimension in report.dim_oracle.  Leaves the report unchanged when the
/// product exceeds the enumeration bound.
void cross_check_dimension(InvariantReport& report, const Graph& pendant,
                           const EnumerationOptions& options = {});

std::string to_json(const InvariantReport& report);

}  // namespace bei
