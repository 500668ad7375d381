#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// G ∘_L H: copy H_v of the pendant coned to v for every v in L.
struct CoronaSpec {
  Graph base;
  VertexSet attach;
  Graph pendant;
  /// Base and pendant must be connected unless this is cleared (oracle
  /// tests build disconnected instances on purpose).
  bool require_connected = true;

  /// Throws invalid_argument / disconnected on a bad spec.
  void validate() const;
  bool attach_is_proper() const { return attach.count() < base.order(); }
};

/// L = V(G).
CoronaSpec full_corona_spec(const Graph& base, const Graph& pendant);

/// {"base": graph6, "L": [...], "pendant": graph6}
std::string to_json(const CoronaSpec& spec);
CoronaSpec corona_spec_from_json(std::string_view text);

/// Index layout of the product: base vertices first, then one block of
/// |V(H)| vertices per attached base vertex in ascending order.
class CoronaLayout {
 public:
  struct Origin {
    /// Base vertex this product vertex is, or the vertex its copy hangs off.
    int base_vertex;
    /// Index inside the pendant, or -1 for a base vertex.
    int pendant_vertex;
  };

  CoronaLayout() = default;
  explicit CoronaLayout(const CoronaSpec& spec);

  int base_order() const noexcept { return base_order_; }
  int pendant_order() const noexcept { return pendant_order_; }
  int order() const noexcept {
    return base_order_ + static_cast<int>(attached_.size()) * pendant_order_;
  }
  const std::vector<int>& attached() const noexcept { return attached_; }

  /// First product index of H_v, or -1 when v is not in L.
  int copy_offset(int v) const;
  int product_index(int base_vertex, int pendant_vertex) const;
  Origin origin(int product_vertex) const;

 private:
  int base_order_ = 0;
  int pendant_order_ = 0;
  std::vector<int> attached_;
  std::vector<int> offset_;
};

struct CoronaProduct {
  Graph graph;
  CoronaLayout layout;
};

CoronaProduct l_corona(const CoronaSpec& spec);
CoronaProduct corona(const Graph& base, const Graph& pendant);

/// A subset T of the product split as T₀ ∪ ⋃ T_v.
struct CoronaDecomposition {
  VertexSet t0;
  /// Every v in L, with T_v in pendant-local indices.
  std::map<int, VertexSet> tv;
  /// N = {v ∈ L : T_v ≠ ∅}.
  VertexSet nonempty_set;
  /// N ∩ T₀, the copies that actually split off.  Equal to N on cutsets.
  VertexSet counted_set;
  /// ω(G∖T₀) + Σ_{v∈N∩T₀} ω(H_v∖T_v) + ω(H)·(|T₀∩L| − |N∩T₀|).
  int predicted_components = 0;
};

/// Works for any subset of the product.
CoronaDecomposition decompose_cutset(const CoronaSpec& spec, const VertexSet& t);

struct AssertionVerdict {
  int index;
  bool holds;
  /// False when the assertion's hypothesis is not met (it then holds).
  bool applicable;
  std::string detail;
};

/// Evaluates the seven structural assertions on a nonempty cutset of the
/// product.  Throws not_a_cutset otherwise.
std::vector<AssertionVerdict> check_cutset_structure(const CoronaSpec& spec, const VertexSet& t);

/// cone over {w} ⊔ H: H keeps indices 0..h-1, w is h, the apex is h+1.
Graph gadget_d2(const Graph& h);
/// K₃ ∘_{w₁,w₂} H with w₁=0, w₂=1, w₃=2, H_{w₁} at 3.. and H_{w₂} after it.
CoronaProduct gadget_d3_product(const Graph& h);
Graph gadget_d3(const Graph& h);

}  // namespace bei
