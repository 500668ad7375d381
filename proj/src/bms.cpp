#include "bei/bms.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "json.hpp"

#include "bei/corona.hpp"
#include "bei/error.hpp"
#include "bei/graph_io.hpp"

namespace bei {

DiameterClass diameter_class(const Graph& g) { return {diameter(g), true}; }

namespace {

void require_accessible(const Graph& h, const EnumerationOptions& options) {
  if (h.order() == 0 || !is_connected(h)) {
    throw Error(ErrorCode::precondition, "pendant graph must be connected");
  }
  if (!is_accessible(h, options)) {
    throw Error(ErrorCode::precondition, "pendant graph is not accessible");
  }
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

// `completed` and `literal` give the case analysis for an unordered pair.
template <class Completed, class Literal>
void compare_distances(ReductionCheck& check, Completed completed, Literal literal) {
  const auto d = distance_matrix(check.gadget);
  check.distance_formula_ok = true;
  for (int u = 0; u < check.gadget.order(); ++u) {
    for (int v = u + 1; v < check.gadget.order(); ++v) {
      if (completed(u, v) != d[u][v]) check.distance_formula_ok = false;
      const int printed = literal(u, v);
      if (printed != d[u][v]) check.literal_formula_exceptions.push_back({u, v, printed, d[u][v]});
    }
  }
}

}  // namespace

ReductionCheck verify_reduction_d2(const Graph& h, const EnumerationOptions& options) {
  require_accessible(h, options);
  ReductionCheck check;
  check.gadget = gadget_d2(h);
  check.diameter = diameter(check.gadget);
  check.diameter_ok = check.diameter == 2;
  check.accessible_transfer_ok = is_accessible(check.gadget, options);
  const int apex = h.order() + 1;
  auto formula = [&](int u, int v) {
    if (u == apex || v == apex) return 1;
    if (u < h.order() && v < h.order() && h.adjacent(u, v)) return 1;
    return 2;
  };
  compare_distances(check, formula, formula);
  return check;
}

ReductionCheck verify_reduction_d3(const Graph& h, const EnumerationOptions& options) {
  require_accessible(h, options);
  ReductionCheck check;
  const auto product = gadget_d3_product(h);
  check.gadget = product.graph;
  check.diameter = diameter(check.gadget);
  check.diameter_ok = check.diameter == 3;
  check.accessible_transfer_ok = is_accessible(check.gadget, options);

  const auto& layout = product.layout;
  constexpr int w3 = 2;
  // Which copy a vertex belongs to: 0 / 1 for H_{w1} / H_{w2}, -1 for K3.
  auto copy_of = [&](int x) {
    const auto o = layout.origin(x);
    return o.pendant_vertex < 0 ? -1 : o.base_vertex;
  };
  auto literal = [&](int u, int v) {
    const int cu = copy_of(u);
    const int cv = copy_of(v);
    if (cu >= 0 && cv >= 0) {
      if (cu != cv) return 3;
      return h.adjacent(layout.origin(u).pendant_vertex, layout.origin(v).pendant_vertex) ? 1 : 2;
    }
    if ((u == w3 && cv >= 0) || (v == w3 && cu >= 0)) return 2;
    return 1;
  };
  // The printed cases omit w_i against a vertex of H_{w_j}, i ≠ j.
  auto completed = [&](int u, int v) {
    const int cu = copy_of(u);
    const int cv = copy_of(v);
    if ((cu < 0 && u != w3 && cv >= 0 && cv != u) || (cv < 0 && v != w3 && cu >= 0 && cu != v)) {
      return 2;
    }
    return literal(u, v);
  };
  compare_distances(check, completed, literal);
  return check;
}

std::string to_json(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["line"] = r.line;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["diameter"] = r.diameter ? nlohmann::ordered_json(*r.diameter) : nlohmann::ordered_json(nullptr);
  j["unmixed"] = r.unmixed;
  j["accessible"] = r.accessible;
  if (r.disconnected_extension) j["extension"] = "disconnected";
  j["cas_script"] = r.cas_script_path ? nlohmann::ordered_json(*r.cas_script_path)
                                      : nlohmann::ordered_json(nullptr);
  return j.dump();
}

namespace {

struct Item {
  int line = 0;
  std::string text;
  enum class Kind { record, filtered, error } kind = Kind::filtered;
  ScanRecord record;
  std::string error_code;
  std::string error_message;
};

void process(Item& item, const ScanOptions& options) {
  try {
    const Graph g = from_graph6(item.text);
    if (options.max_n && g.order() > *options.max_n) return;
    const auto diam = diameter(g);
    if (!options.diameters.empty() && (!diam || !options.diameters.contains(*diam))) return;
    EnumerationOptions enumeration = options.enumeration;
    enumeration.jobs = 1;
    const auto report = enumerate_cutsets(g, enumeration);
    ScanRecord& r = item.record;
    r.line = item.line;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.diameter = diam;
    r.unmixed = report.is_unmixed;
    r.accessible = report.is_unmixed && report.is_accessible_system;
    r.disconnected_extension = report.disconnected_extension;
    if (r.accessible && options.cas_dir && g.order() > 0) {
      const auto path = *options.cas_dir / ("scan_" + std::to_string(item.line) +
                                            std::string(script_extension(options.dialect)));
      std::ofstream file(path, std::ios::binary);
      if (!file) throw Error(ErrorCode::io_error, "cannot write " + path.string());
      file << emit_cas_script(g, options.dialect,
                              {{"dim", report.oracle_dimension, "cutset oracle"},
                               {"depth", report.oracle_dimension,
                                "if Cohen-Macaulay; the graph is accessible"}});
      r.cas_script_path = path.string();
    }
    item.kind = Item::Kind::record;
  } catch (const Error& e) {
    item.kind = Item::Kind::error;
    item.error_code = std::string(to_string(e.code()));
    item.error_message = e.what();
  } catch (const std::exception& e) {
    item.kind = Item::Kind::error;
    item.error_code = std::string(to_string(ErrorCode::io_error));
    item.error_message = e.what();
  }
}

void run_batch(std::vector<Item>& batch, const ScanOptions& options) {
  unsigned jobs = options.jobs > 0 ? static_cast<unsigned>(options.jobs)
                                   : std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(batch.size()));
  if (jobs <= 1) {
    for (auto& item : batch) process(item, options);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) process(batch[i], options);
    });
  }
}

}  // namespace

ScanSummary bms_scan(std::istream& corpus, std::ostream& out, std::ostream& errors,
                     const ScanOptions& options) {
  if (options.cas_dir) std::filesystem::create_directories(*options.cas_dir);
  constexpr std::size_t kBatch = 1024;
  ScanSummary summary;
  std::vector<Item> batch;
  auto flush = [&] {
    run_batch(batch, options);
    for (const auto& item : batch) {
      switch (item.kind) {
        case Item::Kind::record:
          out << to_json(item.record) << '\n';
          ++summary.records;
          break;
        case Item::Kind::filtered:
          ++summary.filtered;
          break;
        case Item::Kind::error: {
          nlohmann::ordered_json j;
          j["line"] = item.line;
          j["error"] = item.error_code;
          j["message"] = item.error_message;
          errors << j.dump() << '\n';
          ++summary.errors;
          break;
        }
      }
    }
    batch.clear();
  };

  std::string line;
  int line_no = 0;
  while (std::getline(corpus, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    Item item;
    item.line = line_no;
    item.text = line.substr(first, last - first + 1);
    batch.push_back(std::move(item));
    if (batch.size() == kBatch) flush();
  }
  flush();
  return summary;
}

}  // namespace bei
