#include "bei/corona.hpp"

#include <algorithm>

#include "json.hpp"

#include "bei/catalog.hpp"
#include "bei/cutsets.hpp"
#include "bei/error.hpp"
#include "bei/graph_io.hpp"

namespace bei {

void CoronaSpec::validate() const {
  if (base.order() == 0) throw Error(ErrorCode::invalid_argument, "base graph is empty");
  if (attach.universe() != base.order()) {
    throw Error(ErrorCode::invalid_argument, "attach set is not over the base vertex set");
  }
  if (attach.empty()) throw Error(ErrorCode::invalid_argument, "attach set L is empty");
  if (require_connected && !is_connected(base)) {
    throw Error(ErrorCode::disconnected, "base graph is disconnected");
  }
  if (require_connected && (pendant.order() == 0 || !is_connected(pendant))) {
    throw Error(ErrorCode::disconnected, "pendant graph is empty or disconnected");
  }
}

CoronaSpec full_corona_spec(const Graph& base, const Graph& pendant) {
  return CoronaSpec{base, base.vertices(), pendant};
}

std::string to_json(const CoronaSpec& spec) {
  nlohmann::ordered_json j;
  j["base"] = to_graph6(spec.base);
  j["L"] = spec.attach.to_vector();
  j["pendant"] = to_graph6(spec.pendant);
  return j.dump();
}

CoronaSpec corona_spec_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("corona spec: ") + e.what());
  }
  if (!j.is_object() || !j.contains("base") || !j.contains("L") || !j.contains("pendant") ||
      !j["base"].is_string() || !j["pendant"].is_string() || !j["L"].is_array()) {
    throw Error(ErrorCode::parse_error,
                "corona spec needs string 'base', string 'pendant' and array 'L'");
  }
  CoronaSpec spec;
  spec.base = from_graph6(j["base"].get<std::string>());
  spec.pendant = from_graph6(j["pendant"].get<std::string>());
  spec.attach = VertexSet(spec.base.order());
  for (const auto& v : j["L"]) {
    if (!v.is_number_integer()) throw Error(ErrorCode::parse_error, "L entries must be integers");
    spec.attach.insert(v.get<int>());
  }
  spec.validate();
  return spec;
}

CoronaLayout::CoronaLayout(const CoronaSpec& spec)
    : base_order_(spec.base.order()),
      pendant_order_(spec.pendant.order()),
      attached_(spec.attach.to_vector()),
      offset_(static_cast<std::size_t>(spec.base.order()), -1) {
  int next = base_order_;
  for (int v : attached_) {
    offset_[v] = next;
    next += pendant_order_;
  }
}

int CoronaLayout::copy_offset(int v) const {
  if (v < 0 || v >= base_order_) {
    throw Error(ErrorCode::invalid_vertex, "base vertex " + std::to_string(v) + " out of range");
  }
  return offset_[v];
}

int CoronaLayout::product_index(int base_vertex, int pendant_vertex) const {
  if (pendant_vertex < 0) {
    copy_offset(base_vertex);
    return base_vertex;
  }
  const int offset = copy_offset(base_vertex);
  if (offset < 0 || pendant_vertex >= pendant_order_) {
    throw Error(ErrorCode::invalid_vertex, "no such pendant vertex");
  }
  return offset + pendant_vertex;
}

CoronaLayout::Origin CoronaLayout::origin(int product_vertex) const {
  if (product_vertex < 0 || product_vertex >= order()) {
    throw Error(ErrorCode::invalid_vertex,
                "product vertex " + std::to_string(product_vertex) + " out of range");
  }
  if (product_vertex < base_order_) return {product_vertex, -1};
  const int copy = (product_vertex - base_order_) / pendant_order_;
  return {attached_[copy], (product_vertex - base_order_) % pendant_order_};
}

CoronaProduct l_corona(const CoronaSpec& spec) {
  spec.validate();
  CoronaLayout layout(spec);
  std::vector<Edge> edges = spec.base.edges();
  const auto pendant_edges = spec.pendant.edges();
  for (int v : layout.attached()) {
    const int offset = layout.copy_offset(v);
    for (const auto& e : pendant_edges) edges.push_back({offset + e.u, offset + e.v});
    for (int x = 0; x < spec.pendant.order(); ++x) edges.push_back({v, offset + x});
  }
  std::vector<std::string> labels;
  if (spec.base.has_labels() || spec.pendant.has_labels()) {
    for (int v = 0; v < spec.base.order(); ++v) labels.push_back(spec.base.label(v));
    for (int v : layout.attached()) {
      for (int x = 0; x < spec.pendant.order(); ++x) {
        labels.push_back(spec.base.label(v) + "." + spec.pendant.label(x));
      }
    }
  }
  return {Graph(layout.order(), edges, std::move(labels)), std::move(layout)};
}

CoronaProduct corona(const Graph& base, const Graph& pendant) {
  if (base.order() == 0) throw Error(ErrorCode::invalid_argument, "base graph is empty");
  auto spec = full_corona_spec(base, pendant);
  spec.require_connected = false;
  return l_corona(spec);
}

namespace {

void check_subset(const CoronaLayout& layout, const VertexSet& t) {
  if (t.universe() != layout.order()) {
    throw Error(ErrorCode::invalid_vertex, "subset is not over the product vertex set");
  }
}

}  // namespace

CoronaDecomposition decompose_cutset(const CoronaSpec& spec, const VertexSet& t) {
  const CoronaLayout layout(spec);
  check_subset(layout, t);
  CoronaDecomposition d;
  d.t0 = VertexSet(spec.base.order());
  d.nonempty_set = VertexSet(spec.base.order());
  d.counted_set = VertexSet(spec.base.order());
  for (int v : layout.attached()) d.tv.emplace(v, VertexSet(spec.pendant.order()));
  for (int x : t) {
    const auto o = layout.origin(x);
    if (o.pendant_vertex < 0) {
      d.t0.insert(o.base_vertex);
    } else {
      d.tv.at(o.base_vertex).insert(o.pendant_vertex);
    }
  }

  const int pendant_omega = component_count(spec.pendant);
  int predicted = component_count(spec.base, d.t0);
  int split_copies = 0;
  for (const auto& [v, tv] : d.tv) {
    if (tv.empty()) continue;
    d.nonempty_set.insert(v);
    if (d.t0.contains(v)) {
      d.counted_set.insert(v);
      predicted += component_count(spec.pendant, tv);
    }
  }
  for (int v : layout.attached()) split_copies += d.t0.contains(v) ? 1 : 0;
  predicted += pendant_omega * (split_copies - d.counted_set.count());
  d.predicted_components = predicted;
  return d;
}

std::vector<AssertionVerdict> check_cutset_structure(const CoronaSpec& spec, const VertexSet& t) {
  const auto product = l_corona(spec);
  check_subset(product.layout, t);
  if (t.empty() || !is_cutset(product.graph, t)) {
    throw Error(ErrorCode::not_a_cutset, t.to_string() + " is not a nonempty cutset");
  }
  const auto d = decompose_cutset(spec, t);
  const VertexSet& L = spec.attach;
  const VertexSet t0_in_l = d.t0 & L;
  std::vector<AssertionVerdict> out;

  {
    bool nonempty = !d.t0.empty();
    bool proper = d.t0.count() < spec.base.order();
    bool holds = nonempty && (!spec.attach_is_proper() || proper);
    out.push_back({1, holds, true,
                   spec.attach_is_proper() ? "T0 nonempty and proper"
                                           : "T0 nonempty (L = V(G), properness not claimed)"});
  }
  {
    bool holds = true;
    for (int v : L) {
      if (!d.t0.contains(v) && !d.tv.at(v).empty()) holds = false;
    }
    out.push_back({2, holds, L.count() > t0_in_l.count(), "T_v empty for v in L outside T0"});
  }
  {
    bool holds = true;
    bool applicable = false;
    for (int v : t0_in_l) {
      applicable = true;
      const auto& tv = d.tv.at(v);
      if (!tv.empty() && !is_cutset(spec.pendant, tv)) holds = false;
    }
    out.push_back({3, holds, applicable, "T_v empty or a cutset of H_v for v in T0"});
  }
  {
    bool holds = true;
    bool applicable = false;
    for (int v : t0_in_l) {
      if (!spec.base.neighbors(v).is_subset_of(d.t0)) continue;
      applicable = true;
      if (d.tv.at(v).empty()) holds = false;
    }
    out.push_back({4, holds, applicable, "T_v nonempty when N_G(v) is inside T0"});
  }
  {
    // The literal statement, summing over N itself.
    int literal = component_count(spec.base, d.t0);
    for (int v : d.nonempty_set) literal += component_count(spec.pendant, d.tv.at(v));
    literal += t0_in_l.count() - d.nonempty_set.count();
    const int actual = component_count(product.graph, t);
    out.push_back({5, literal == actual, true,
                   "predicted " + std::to_string(literal) + ", counted " + std::to_string(actual)});
  }
  {
    const VertexSet simplicial_in_t0 = simplicial_vertices(spec.base) & d.t0;
    out.push_back({6, simplicial_in_t0.is_subset_of(L), !simplicial_in_t0.empty(),
                   "simplicial vertices of G in T0 lie in L"});
  }
  {
    bool applicable = t0_in_l.empty();
    bool holds = true;
    if (applicable) {
      bool only_t0 = d.nonempty_set.empty();
      bool base_cutset = is_cutset(spec.base, d.t0);
      bool no_simplicial = !simplicial_vertices(spec.base).intersects(d.t0);
      holds = only_t0 && base_cutset && no_simplicial;
    }
    out.push_back({7, holds, applicable, "T = T0 is a cutset of G with no simplicial vertex"});
  }
  return out;
}

Graph gadget_d2(const Graph& h) {
  return cone(disjoint_union(h.with_labels({}), complete_graph(1)));
}

CoronaProduct gadget_d3_product(const Graph& h) {
  CoronaSpec spec{complete_graph(3), VertexSet::of(3, {0, 1}), h.with_labels({})};
  spec.require_connected = false;
  return l_corona(spec);
}

Graph gadget_d3(const Graph& h) { return gadget_d3_product(h).graph; }

}  // namespace bei
