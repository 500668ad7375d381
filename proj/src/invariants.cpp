#include "bei/invariants.hpp"

#include <algorithm>

#include "json.hpp"

#include "bei/blocks.hpp"
#include "bei/catalog.hpp"
#include "bei/error.hpp"

namespace bei {

using nlohmann::ordered_json;

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::formula: return "formula";
    case Provenance::closed_form: return "closed-form";
    case Provenance::oracle: return "oracle";
    case Provenance::user_supplied: return "user-supplied";
  }
  return "unknown";
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::l_corona_complete: return "l-corona";
    case Family::full_corona_complete: return "full-corona";
    case Family::corona_cm_closed: return "cm-closed";
    case Family::corona_path: return "path";
  }
  return "unknown";
}

std::optional<int> BaseInvariants::cmdef() const {
  if (!dim_q || !depth_q) return std::nullopt;
  return *dim_q - *depth_q;
}

void BaseInvariants::validate() const {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::precondition, "inconsistent base invariants: " + why);
  };
  if (h < 1) fail("h must be positive");
  if (pd && depth_q && *pd + *depth_q != 2 * h) fail("pd + depth must equal 2h");
  if (pd && *pd < h - 1) fail("pd must be at least h-1");
  if (depth_q && dim_q && *depth_q > *dim_q) fail("depth exceeds dim");
  if (dim_q && *dim_q < h + 1) fail("dim must be at least h+1");
  if (is_complete) {
    if (reg_q && *reg_q != (h == 1 ? 0 : 1)) fail("complete graphs have reg 1 (0 for K1)");
    if (depth_q && *depth_q != h + 1) fail("complete graphs have depth h+1");
    if (dim_q && *dim_q != h + 1) fail("complete graphs have dim h+1");
  }
  if (r_extremal && *r_extremal < 2) fail("r_H must be at least 2");
  if (is_cm && *is_cm && is_unmixed && !*is_unmixed) fail("Cohen-Macaulay but not unmixed");
  if (is_accessible && *is_accessible && is_unmixed && !*is_unmixed) {
    fail("accessible but not unmixed");
  }
}

namespace {

[[noreturn]] void missing(const char* what) {
  throw Error(ErrorCode::precondition, std::string("base invariant '") + what + "' is required");
}

int need(const std::optional<int>& v, const char* what) {
  if (!v) missing(what);
  return *v;
}

void fill_oracle_verdicts(BaseInvariants& b, const Graph& g, const EnumerationOptions& options) {
  const auto report = enumerate_cutsets(g, options);
  b.is_unmixed = report.is_unmixed;
  b.is_accessible = report.is_unmixed && report.is_accessible_system;
  if (!b.dim_q) b.dim_q = report.oracle_dimension;
}

bool fits(const Graph& g, const EnumerationOptions& options) {
  int bound = options.bound > 0 ? options.bound : default_enumeration_bound();
  return g.order() <= std::min(bound, kMaxEnumerationBound);
}

Quantity formula(int value, std::string rule) {
  return {value, Provenance::formula, std::move(rule)};
}

void finish(InvariantReport& r) {
  if (r.depth.value) {
    r.pd = formula(2 * r.vertex_count - *r.depth.value, "auslander-buchsbaum");
  }
}

}  // namespace

BaseInvariants base_invariants_block_graph(const Graph& g, const EnumerationOptions& options) {
  if (!is_block_graph(g)) {
    throw Error(ErrorCode::precondition, "graph is not a connected block graph");
  }
  const int h = g.order();
  BaseInvariants b;
  b.h = h;
  b.provenance = Provenance::closed_form;
  b.is_complete = is_complete(g);
  b.depth_q = h + 1;
  b.pd = h - 1;
  const int spread = max_blocks_per_vertex(block_decomposition(g), h);
  if (spread <= 2) {
    b.dim_q = h + 1;
    b.reg_q = h == 1 ? 0 : internal_vertex_count(g) + 1;
    b.is_cm = true;
    b.is_unmixed = true;
    b.is_accessible = true;
  } else {
    b.notes.push_back("a vertex lies in three or more blocks: dim from the cutset oracle, "
                      "reg not available in closed form");
  }
  if (fits(g, options)) {
    fill_oracle_verdicts(b, g, options);
    if (spread > 2) b.provenance = Provenance::oracle;
  }
  if (b.dim_q) b.is_cm = *b.dim_q == *b.depth_q;
  return b;
}

BaseInvariants base_invariants_for(const Graph& g, const EnumerationOptions& options) {
  if (is_block_graph(g)) return base_invariants_block_graph(g, options);
  BaseInvariants b;
  b.h = g.order();
  b.provenance = Provenance::oracle;
  b.is_complete = is_complete(g);
  fill_oracle_verdicts(b, g, options);
  if (!*b.is_unmixed) b.is_cm = false;
  b.notes.push_back("not a block graph: depth and reg must be supplied");
  return b;
}

BaseInvariants base_invariants_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("base invariants: ") + e.what());
  }
  if (!j.is_object() || !j.contains("h") || !j["h"].is_number_integer()) {
    throw Error(ErrorCode::parse_error, "base invariants need an integer 'h'");
  }
  BaseInvariants b;
  b.provenance = Provenance::user_supplied;
  b.h = j["h"].get<int>();
  auto get_int = [&](const char* key, std::optional<int>& out) {
    if (!j.contains(key) || j[key].is_null()) return;
    if (!j[key].is_number_integer()) {
      throw Error(ErrorCode::parse_error, std::string("'") + key + "' must be an integer");
    }
    out = j[key].get<int>();
  };
  auto get_bool = [&](const char* key, std::optional<bool>& out) {
    if (!j.contains(key) || j[key].is_null()) return;
    if (!j[key].is_boolean()) {
      throw Error(ErrorCode::parse_error, std::string("'") + key + "' must be a boolean");
    }
    out = j[key].get<bool>();
  };
  get_int("dim", b.dim_q);
  get_int("depth", b.depth_q);
  get_int("reg", b.reg_q);
  get_int("r_extremal", b.r_extremal);
  std::optional<bool> complete;
  get_bool("complete", complete);
  b.is_complete = complete.value_or(false);
  get_bool("unmixed", b.is_unmixed);
  get_bool("cm", b.is_cm);
  get_bool("accessible", b.is_accessible);
  if (b.depth_q) b.pd = 2 * b.h - *b.depth_q;
  std::optional<int> pd;
  get_int("pd", pd);
  if (pd && b.pd && *pd != *b.pd) {
    throw Error(ErrorCode::precondition, "pd + depth must equal 2h");
  }
  if (pd && !b.pd) {
    b.pd = pd;
    b.depth_q = 2 * b.h - *pd;
  }
  b.validate();
  return b;
}

namespace {

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

std::string to_json(const BaseInvariants& b) {
  ordered_json j;
  j["h"] = b.h;
  j["dim"] = opt(b.dim_q);
  j["depth"] = opt(b.depth_q);
  j["reg"] = opt(b.reg_q);
  j["pd"] = opt(b.pd);
  j["r_extremal"] = opt(b.r_extremal);
  j["complete"] = b.is_complete;
  j["unmixed"] = opt(b.is_unmixed);
  j["cm"] = opt(b.is_cm);
  j["accessible"] = opt(b.is_accessible);
  j["provenance"] = std::string(to_string(b.provenance));
  if (!b.notes.empty()) j["notes"] = b.notes;
  return j.dump();
}

int dim_l_corona(int n, int ell, const BaseInvariants& base) {
  if (n < 1 || ell < 1 || ell > n) {
    throw Error(ErrorCode::invalid_argument, "need 1 <= l <= n");
  }
  return n - ell + 1 + ell * need(base.dim_q, "dim");
}

namespace {

InvariantReport complete_family_shell(int n, int ell, const BaseInvariants& base) {
  InvariantReport r;
  r.family = ell == n ? Family::full_corona_complete : Family::l_corona_complete;
  r.n = n;
  r.ell = ell;
  r.base_description = "K" + std::to_string(n);
  r.pendant = base;
  r.vertex_count = n + ell * base.h;
  if (base.dim_q) r.dim = formula(dim_l_corona(n, ell, base), "l-corona-dimension");
  return r;
}

void attach_extremal(InvariantReport& r, Family family, int size, int ell) {
  try {
    r.extremal = extremal_betti_position(family, size, ell, r.pendant);
  } catch (const Error& e) {
    r.extremal_unavailable = e.what();
  }
}

ClassifyResult classify_impl(const Graph& g, const VertexSet& attach, const BaseInvariants& base);

void attach_complete_verdicts(InvariantReport& r) {
  VertexSet attach(r.n);
  for (int v = 0; v < r.ell; ++v) attach.insert(v);
  r.verdicts = classify_impl(complete_graph(r.n), attach, r.pendant);
}

}  // namespace

InvariantReport depth_reg_one_corona(int n, const BaseInvariants& base) {
  if (n < 2) throw Error(ErrorCode::unproved_range, "the one-corona statement needs n >= 2");
  InvariantReport r = complete_family_shell(n, 1, base);
  r.depth = formula(n + need(base.depth_q, "depth"), "one-corona-depth");
  if (base.is_complete) {
    r.reg = formula(2, "one-corona-regularity-complete-pendant");
  } else if (base.reg_q) {
    r.reg = formula(1 + *base.reg_q, "one-corona-regularity");
  } else {
    r.reg = {std::nullopt, Provenance::formula, "one-corona-regularity (needs reg of H)"};
  }
  finish(r);
  if (base.cmdef()) r.cmdef = formula(cmdef_report(n, 1, base), "corona-cm-defect");
  attach_extremal(r, Family::l_corona_complete, n, 1);
  attach_complete_verdicts(r);
  return r;
}

InvariantReport depth_reg_t_corona(int n, int ell, const BaseInvariants& base) {
  if (n < 2 || ell < 1 || ell >= n) {
    throw Error(ErrorCode::unproved_range, "the t-corona statement needs 1 <= l < n");
  }
  InvariantReport r = complete_family_shell(n, ell, base);
  if (n == 2) r.notes.push_back("statement-range ambiguity: stated for n >= 3, evaluated at n = 2");
  r.depth = formula(n - ell + 1 + ell * need(base.depth_q, "depth"), "t-corona-depth");
  if (base.is_complete) {
    // The block-graph case: iv + 1 = ℓ + 1, which is 1 + ℓ·reg(K_h) for h ≥ 2.
    r.reg = formula(1 + ell, "t-corona-regularity-complete-pendant");
    if (base.h == 1) r.notes.push_back("pendant K1 has reg 0; regularity taken as iv + 1 = l + 1");
  } else if (base.reg_q) {
    r.reg = formula(1 + ell * *base.reg_q, "t-corona-regularity");
  } else {
    r.reg = {std::nullopt, Provenance::formula, "t-corona-regularity (needs reg of H)"};
  }
  finish(r);
  if (base.cmdef()) r.cmdef = formula(cmdef_report(n, ell, base), "corona-cm-defect");
  attach_extremal(r, Family::l_corona_complete, n, ell);
  attach_complete_verdicts(r);
  return r;
}

InvariantReport depth_reg_full_corona(int n, const BaseInvariants& base) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "need n >= 1");
  InvariantReport r = complete_family_shell(n, n, base);
  const int depth_q = need(base.depth_q, "depth");
  if (base.is_complete) {
    r.depth = formula(1 + n * depth_q, "full-corona-depth-complete-pendant");
    if (n == 1) {
      // K1 ∘ K_h = K_{h+1}.
      r.reg = formula(1, "full-corona-regularity-single-vertex-base");
      r.notes.push_back("n = 1 with complete pendant is K_{h+1}: reg = iv + 1 = 1, not n + 1");
    } else {
      r.reg = formula(n + 1, "full-corona-regularity-complete-pendant");
    }
  } else {
    r.depth = formula(n * depth_q, "full-corona-depth");
    if (base.reg_q) {
      r.reg = formula(n * *base.reg_q, "full-corona-regularity");
    } else {
      r.reg = {std::nullopt, Provenance::formula, "full-corona-regularity (needs reg of H)"};
    }
  }
  finish(r);
  if (base.cmdef()) r.cmdef = formula(cmdef_report(n, n, base), "corona-cm-defect");
  attach_extremal(r, Family::full_corona_complete, n, n);
  attach_complete_verdicts(r);
  return r;
}

InvariantReport depth_reg_corona_complete(int n, int ell, const BaseInvariants& base) {
  if (n < 1 || ell < 1 || ell > n) throw Error(ErrorCode::invalid_argument, "need 1 <= l <= n");
  if (ell == n) return depth_reg_full_corona(n, base);
  if (ell == 1) return depth_reg_one_corona(n, base);
  return depth_reg_t_corona(n, ell, base);
}

namespace {

InvariantReport cm_closed_report(Family family, const Graph& b_graph, std::string description,
                                 const BaseInvariants& base, const Graph* pendant,
                                 const EnumerationOptions& options) {
  if (!is_cm_closed(b_graph)) {
    throw Error(ErrorCode::precondition, "base graph is not Cohen-Macaulay closed");
  }
  const int b = b_graph.order();
  InvariantReport r;
  r.family = family;
  r.n = b;
  r.ell = b;
  r.base_description = std::move(description);
  r.pendant = base;
  r.vertex_count = b * (1 + base.h);
  const char* depth_rule = family == Family::corona_path ? "path-corona-depth" : "cm-closed-corona-depth";
  const char* reg_rule =
      family == Family::corona_path ? "path-corona-regularity" : "cm-closed-corona-regularity";
  const int depth_q = need(base.depth_q, "depth");
  if (base.is_complete) {
    r.depth = formula(1 + b * depth_q, std::string(depth_rule) + "-complete-pendant");
    if (b == 1) {
      r.reg = formula(1, std::string(reg_rule) + "-single-vertex-base");
      r.notes.push_back("b = 1 with complete pendant is K_{h+1}: reg = iv + 1 = 1, not b + 1");
    } else {
      r.reg = formula(b + 1, std::string(reg_rule) + "-complete-pendant");
    }
  } else {
    r.depth = formula(b * depth_q, depth_rule);
    if (base.reg_q) {
      r.reg = formula(b * *base.reg_q, reg_rule);
    } else {
      r.reg = {std::nullopt, Provenance::formula, std::string(reg_rule) + " (needs reg of H)"};
    }
  }
  finish(r);

  if (is_complete(b_graph) && base.dim_q) {
    r.dim = formula(dim_l_corona(b, b, base), "l-corona-dimension");
  } else if (pendant != nullptr && b * (1 + pendant->order()) <= kMaxEnumerationBound) {
    try {
      const auto product = corona(b_graph, *pendant);
      r.dim_oracle = dimension_oracle(product.graph, options);
      r.dim = {r.dim_oracle, Provenance::oracle, "minimal-prime-oracle"};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::bound_exceeded) throw;
      r.dim = {std::nullopt, Provenance::oracle, "oracle-unavailable"};
    }
  } else {
    r.dim = {std::nullopt, Provenance::oracle, "oracle-unavailable"};
  }
  if (r.dim.value && r.depth.value) {
    r.cmdef = {*r.dim.value - *r.depth.value, r.dim.provenance, "dim-minus-depth"};
  }
  attach_extremal(r, family, b, b);
  r.verdicts = classify_impl(b_graph, b_graph.vertices(), base);
  return r;
}

}  // namespace

InvariantReport depth_reg_corona_cm_closed(const Graph& b_graph, const BaseInvariants& base,
                                           const Graph* pendant, const EnumerationOptions& options) {
  return cm_closed_report(Family::corona_cm_closed, b_graph,
                          "B on " + std::to_string(b_graph.order()) + " vertices", base, pendant,
                          options);
}

InvariantReport depth_reg_corona_path(int n, const BaseInvariants& base, const Graph* pendant,
                                      const EnumerationOptions& options) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "need n >= 1");
  return cm_closed_report(Family::corona_path, path_graph(n), "P" + std::to_string(n), base,
                          pendant, options);
}

int cmdef_report(int n, int ell, const BaseInvariants& base) {
  if (n < 1 || ell < 1 || ell > n) throw Error(ErrorCode::invalid_argument, "need 1 <= l <= n");
  const auto defect = base.cmdef();
  if (!defect) missing("dim and depth");
  if (ell < n) return ell * *defect;
  if (base.is_complete) return 0;
  return 1 + ell * *defect;
}

ExtremalPosition extremal_betti_position(Family family, int size, int ell,
                                         const BaseInvariants& base) {
  if (base.is_complete) {
    throw Error(ErrorCode::precondition,
                "no extremal Betti statement applies when the pendant is complete");
  }
  if (!base.r_extremal) {
    throw Error(ErrorCode::precondition, "r_H required: pass r_extremal for the pendant");
  }
  const int r = *base.r_extremal;
  if (r < 2) throw Error(ErrorCode::invalid_argument, "r_H must be at least 2");
  const int p_h = need(base.pd, "pd");
  ExtremalPosition out{};
  switch (family) {
    case Family::l_corona_complete:
      if (ell < 1 || ell > size) throw Error(ErrorCode::invalid_argument, "need 1 <= l <= n");
      if (ell == size) return extremal_betti_position(Family::full_corona_complete, size, ell, base);
      if (ell == 1) {
        if (size < 2) throw Error(ErrorCode::unproved_range, "one-corona needs n >= 2");
        out.p = size + p_h;
        out.j = size == 2 ? r : r + 1;
        out.rule = "one-corona-extremal-betti";
      } else {
        out.p = size + ell - 1 + ell * p_h;
        out.j = size == 2 ? ell * r : ell * r + 1;
        out.rule = "t-corona-extremal-betti";
        if (size == 2) out.notes.push_back("statement-range ambiguity: n = 2");
      }
      return out;
    case Family::full_corona_complete:
      if (size < 2) {
        throw Error(ErrorCode::unproved_range, "the full-corona statement covers n = 2 and n >= 3");
      }
      out.p = 2 * size + size * p_h;
      out.j = size == 2 ? size * r : size * r + 1;
      out.rule = "full-corona-extremal-betti";
      return out;
    case Family::corona_cm_closed:
    case Family::corona_path:
      if (size < 1) throw Error(ErrorCode::invalid_argument, "need b >= 1");
      out.p = 2 * size + size * p_h;
      out.j = size * r + 1;
      out.rule = family == Family::corona_path ? "path-corona-extremal-betti"
                                               : "cm-closed-corona-extremal-betti";
      if (family == Family::corona_path) {
        out.notes.push_back("path family read off the CM-closed statement");
      }
      if (size == 2) {
        out.notes.push_back("b = 2 offset is +1 here but not in the full-corona statement at n = 2");
      }
      return out;
  }
  throw Error(ErrorCode::invalid_argument, "unknown family");
}

namespace {

// Some L0 ⊆ L disconnects G.  Exhaustive for |L| ≤ 20, else singletons and L.
bool some_attach_subset_disconnects(const Graph& g, const VertexSet& attach) {
  const auto members = attach.to_vector();
  const int k = static_cast<int>(members.size());
  auto disconnects = [&](const VertexSet& l0) {
    return l0.count() < g.order() && component_count(g, l0) > 1;
  };
  if (k <= 20) {
    for (std::uint32_t m = 1; m < (1U << k); ++m) {
      VertexSet l0(g.order());
      for (int i = 0; i < k; ++i) {
        if ((m >> i) & 1U) l0.insert(members[i]);
      }
      if (disconnects(l0)) return true;
    }
    return false;
  }
  for (int v : members) {
    if (disconnects(VertexSet::of(g.order(), {v}))) return true;
  }
  return disconnects(attach);
}

Verdict inherit(const std::optional<bool>& v, const char* rule) { return {v, rule}; }

ClassifyResult classify_impl(const Graph& g, const VertexSet& attach, const BaseInvariants& base) {
  const int n = g.order();
  const bool proper = attach.count() < n;
  ClassifyResult out;
  const std::string unknown = "unknown (outside proved families)";
  out.unmixed = out.accessible = out.cm = {std::nullopt, unknown};

  if (n >= 2 && !proper) {
    const bool both = is_complete(g) && base.is_complete;
    const char* rule = "full corona: unmixed iff CM iff both factors complete";
    out.unmixed = out.accessible = out.cm = {both, rule};
    return out;
  }
  if (n >= 2 && is_complete(g)) {
    out.unmixed = inherit(base.is_unmixed, "complete base, proper L: unmixed iff H is");
    out.accessible = inherit(base.is_accessible, "complete base, proper L: accessible iff H is");
    out.cm = inherit(base.is_cm, "complete base, proper L: CM iff H is");
    return out;
  }
  if (n < 2) return out;

  // Non-complete base with proper L: only negative conclusions are proved.
  if (base.is_unmixed && !*base.is_unmixed) {
    out.unmixed = {false, "unmixed L-corona forces an unmixed pendant"};
  } else if (some_attach_subset_disconnects(g, attach)) {
    out.unmixed = {false, "unmixed L-corona keeps G minus every subset of L connected"};
  }
  if (out.unmixed.value == false) {
    out.accessible = {false, "accessible requires unmixed"};
    out.cm = {false, "Cohen-Macaulay requires unmixed"};
  } else if (base.is_accessible == false && base.is_unmixed == true) {
    out.accessible = {false, "accessible system of the L-corona forces one on the pendant"};
  }
  return out;
}

}  // namespace

ClassifyResult classify(const CoronaSpec& spec, const BaseInvariants& base) {
  if (spec.attach.universe() != spec.base.order() || spec.attach.empty()) {
    throw Error(ErrorCode::invalid_argument, "attach set must be a nonempty subset of V(G)");
  }
  return classify_impl(spec.base, spec.attach, base);
}

void cross_check_dimension(InvariantReport& report, const Graph& pendant,
                           const EnumerationOptions& options) {
  if (report.dim_oracle) return;
  if (report.family != Family::l_corona_complete &&
      report.family != Family::full_corona_complete) {
    return;
  }
  VertexSet attach(report.n);
  for (int v = 0; v < report.ell; ++v) attach.insert(v);
  CoronaSpec spec{complete_graph(report.n), attach, pendant};
  spec.require_connected = false;
  const auto product = l_corona(spec);
  if (!fits(product.graph, options)) return;
  report.dim_oracle = dimension_oracle(product.graph, options);
}

namespace {

ordered_json quantity_json(const Quantity& q) {
  ordered_json j;
  j["value"] = opt(q.value);
  j["provenance"] = std::string(to_string(q.provenance));
  j["rule"] = q.rule;
  return j;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["value"] = opt(v.value);
  j["rule"] = v.rule;
  return j;
}

}  // namespace

std::string to_json(const InvariantReport& r) {
  ordered_json j;
  j["family"] = std::string(to_string(r.family));
  j["n"] = r.n;
  j["l"] = r.ell;
  j["base"] = r.base_description;
  j["pendant"] = ordered_json::parse(to_json(r.pendant));
  j["vertices"] = r.vertex_count;
  j["dim"] = quantity_json(r.dim);
  j["depth"] = quantity_json(r.depth);
  j["reg"] = quantity_json(r.reg);
  j["pd"] = quantity_json(r.pd);
  j["cmdef"] = quantity_json(r.cmdef);
  if (r.extremal) {
    ordered_json e;
    e["p"] = r.extremal->p;
    e["degree"] = r.extremal->degree();
    e["j"] = r.extremal->j;
    e["rule"] = r.extremal->rule;
    if (!r.extremal->notes.empty()) e["notes"] = r.extremal->notes;
    j["extremal_betti"] = e;
  } else {
    j["extremal_betti"] = {{"unavailable", r.extremal_unavailable}};
  }
  if (r.verdicts) {
    j["verdicts"] = {{"unmixed", verdict_json(r.verdicts->unmixed)},
                     {"accessible", verdict_json(r.verdicts->accessible)},
                     {"cm", verdict_json(r.verdicts->cm)}};
  }
  if (r.dim_oracle) j["dim_oracle"] = *r.dim_oracle;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j.dump();
}

}  // namespace bei
