#include "bei/cutsets.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "bei/error.hpp"

namespace bei {

namespace {

using Mask = std::uint64_t;

struct Found {
  Mask set;
  int components;
};

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v).mask();
  return adj;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Splits `alive` into connected components; returns how many were written.
int label_components(const std::vector<Mask>& adj, Mask alive, Mask* out) {
  int count = 0;
  while (alive) {
    Mask comp = alive & (~alive + 1);
    Mask frontier = comp;
    while (frontier) {
      Mask grown = 0;
      for (Mask f = frontier; f; f &= f - 1) grown |= adj[std::countr_zero(f)];
      grown &= alive & ~comp;
      comp |= grown;
      frontier = grown;
    }
    out[count++] = comp;
    alive &= ~comp;
  }
  return count;
}

// Cutset test on masks: every removed vertex must touch two or more
// components of what is left.  Returns the component count, or -1.
int cutset_components(const std::vector<Mask>& adj, Mask all, Mask t) {
  for (Mask r = t; r; r &= r - 1) {
    if (std::popcount(adj[std::countr_zero(r)] & ~t) < 2) return -1;
  }
  Mask comps[64];
  const int count = label_components(adj, all & ~t, comps);
  for (Mask r = t; r; r &= r - 1) {
    const Mask nb = adj[std::countr_zero(r)];
    int touched = 0;
    for (int c = 0; c < count && touched < 2; ++c) touched += (nb & comps[c]) != 0;
    if (touched < 2) return -1;
  }
  return count;
}

int resolve_bound(const EnumerationOptions& options) {
  int bound = options.bound > 0 ? options.bound : default_enumeration_bound();
  return std::min(bound, kMaxEnumerationBound);
}

void check_bound(const Graph& g, int bound) {
  if (g.order() > bound) {
    throw Error(ErrorCode::bound_exceeded,
                "graph has " + std::to_string(g.order()) +
                    " vertices; cutset enumeration is capped at " + std::to_string(bound));
  }
}

Mask spread(Mask local, const std::vector<int>& candidates) {
  Mask out = 0;
  for (Mask r = local; r; r &= r - 1) out |= Mask{1} << candidates[std::countr_zero(r)];
  return out;
}

}  // namespace

int default_enumeration_bound() {
  const char* env = std::getenv("BEI_BOUND");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBound;
  std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1 ||
      value > kMaxEnumerationBound) {
    throw Error(ErrorCode::invalid_argument,
                "BEI_BOUND must be an integer in [1, 64], got '" + std::string(text) + "'");
  }
  return value;
}

bool is_cutset(const Graph& g, const VertexSet& t) {
  if (t.empty()) return true;
  const auto comps = components(g, t);
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int v : comps[c]) owner[v] = static_cast<int>(c);
  }
  for (int v : t) {
    int first = -1;
    bool split = false;
    for (int w : g.neighbors(v)) {
      if (owner[w] < 0) continue;
      if (first < 0) {
        first = owner[w];
      } else if (owner[w] != first) {
        split = true;
        break;
      }
    }
    if (!split) return false;
  }
  return true;
}

CutsetReport enumerate_cutsets(const Graph& g, const EnumerationOptions& options) {
  check_bound(g, resolve_bound(options));
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  const Mask all = full_mask(n);

  // Simplicial vertices never lie in a cutset.
  std::vector<int> candidates;
  const VertexSet simplicial = simplicial_vertices(g);
  for (int v = 0; v < n; ++v) {
    if (!simplicial.contains(v)) candidates.push_back(v);
  }
  const int c = static_cast<int>(candidates.size());
  const int cap = options.size_cap.value_or(n);

  unsigned jobs = options.jobs > 0 ? static_cast<unsigned>(options.jobs)
                                   : std::max(1U, std::thread::hardware_concurrency());
  // Too little work to be worth spawning threads.
  if (c < 12) jobs = 1;
  const Mask total = c == 64 ? ~Mask{0} : (Mask{1} << c);

  std::vector<std::vector<Found>> partial(jobs);
  auto work = [&](unsigned worker) {
    auto& out = partial[worker];
    for (Mask local = 1 + worker; local < total; local += jobs) {
      if (std::popcount(local) > cap) continue;
      const Mask t = spread(local, candidates);
      const int omega = cutset_components(adj, all, t);
      if (omega >= 0) out.push_back({t, omega});
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  std::vector<Found> found;
  Mask dummy[64];
  found.push_back({0, label_components(adj, all, dummy)});
  for (auto& part : partial) found.insert(found.end(), part.begin(), part.end());
  std::sort(found.begin() + 1, found.end(),
            [](const Found& a, const Found& b) { return canonical_less_mask(a.set, b.set); });

  CutsetReport report;
  const int base_omega = found.front().components;
  report.disconnected_extension = base_omega > 1;
  report.complete = !options.size_cap || *options.size_cap >= c;
  report.is_unmixed = true;
  report.is_accessible_system = true;
  int best = base_omega;

  std::unordered_set<Mask> present;
  for (const auto& f : found) present.insert(f.set);

  for (const auto& f : found) {
    const int size = std::popcount(f.set);
    report.cutsets.push_back(VertexSet::from_mask(n, f.set));
    report.components.push_back(f.components);
    best = std::max(best, f.components - size);
    if (f.components != size + base_omega && report.is_unmixed) {
      report.is_unmixed = false;
      report.unmixed_witness = report.cutsets.back();
    }
    if (f.set != 0 && report.is_accessible_system) {
      bool reachable = false;
      for (Mask r = f.set; r && !reachable; r &= r - 1) {
        reachable = present.contains(f.set & ~(r & (~r + 1)));
      }
      report.is_accessible_system = reachable;
    }
  }
  report.oracle_dimension = n + best;
  return report;
}

bool is_unmixed(const Graph& g, const EnumerationOptions& options) {
  return enumerate_cutsets(g, options).is_unmixed;
}

std::optional<VertexSet> unmixed_witness(const Graph& g, const EnumerationOptions& options) {
  return enumerate_cutsets(g, options).unmixed_witness;
}

bool is_accessible_system(const Graph& g, const EnumerationOptions& options) {
  return enumerate_cutsets(g, options).is_accessible_system;
}

bool is_accessible(const Graph& g, const EnumerationOptions& options) {
  const auto report = enumerate_cutsets(g, options);
  return report.is_unmixed && report.is_accessible_system;
}

int dimension_oracle(const Graph& g, const EnumerationOptions& options) {
  return enumerate_cutsets(g, options).oracle_dimension;
}

namespace {

nlohmann::ordered_json set_json(const VertexSet& s, const Graph& g) {
  nlohmann::ordered_json j;
  j["set"] = s.to_vector();
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (int v : s) labels.push_back(g.label(v));
    j["labels"] = labels;
  }
  return j;
}

}  // namespace

std::string to_json(const CutsetReport& report, const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  j["complete"] = report.complete;
  j["unmixed"] = report.is_unmixed;
  j["accessible_system"] = report.is_accessible_system;
  j["accessible"] = report.is_unmixed && report.is_accessible_system;
  j["dimension"] = report.oracle_dimension;
  if (report.disconnected_extension) j["extension"] = "disconnected";
  j["unmixed_witness"] =
      report.unmixed_witness ? set_json(*report.unmixed_witness, g) : nlohmann::ordered_json(nullptr);
  j["count"] = report.cutsets.size();
  auto list = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.cutsets.size(); ++i) {
    auto entry = set_json(report.cutsets[i], g);
    entry["components"] = report.components[i];
    list.push_back(std::move(entry));
  }
  j["cutsets"] = std::move(list);
  return j.dump();
}

std::string to_jsonl(const CutsetReport& report, const Graph& g) {
  std::string out;
  for (std::size_t i = 0; i < report.cutsets.size(); ++i) {
    auto entry = set_json(report.cutsets[i], g);
    entry["components"] = report.components[i];
    out += entry.dump();
    out += '\n';
  }
  return out;
}

std::optional<std::vector<int>> accessibility_witness_chain(const Graph& g, const VertexSet& t) {
  if (!is_cutset(g, t)) throw Error(ErrorCode::not_a_cutset, t.to_string() + " is not a cutset");
  check_bound(g, kMaxEnumerationBound);
  const auto adj = adjacency_masks(g);
  const Mask all = full_mask(g.order());

  std::unordered_set<Mask> dead;
  std::vector<int> chain;
  auto search = [&](auto&& self, Mask current) -> bool {
    if (current == 0) return true;
    if (dead.contains(current)) return false;
    for (Mask r = current; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      const Mask next = current & ~(Mask{1} << v);
      if (next != 0 && cutset_components(adj, all, next) < 0) continue;
      chain.push_back(v);
      if (self(self, next)) return true;
      chain.pop_back();
    }
    dead.insert(current);
    return false;
  };
  if (!search(search, t.mask())) return std::nullopt;
  return chain;
}

}  // namespace bei
