// Acceptance suite: one PASS/FAIL line per criterion.  Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bei/blocks.hpp"
#include "bei/bms.hpp"
#include "bei/catalog.hpp"
#include "bei/cli.hpp"
#include "bei/corona.hpp"
#include "bei/cutsets.hpp"
#include "bei/error.hpp"
#include "bei/graph_io.hpp"
#include "bei/invariants.hpp"
#include "oracles.hpp"

using namespace bei;

namespace {

// Every comparison below is exact.
constexpr int kTolerance = 0;
constexpr double kCutsetBudgetSeconds = 60.0;
constexpr double kGadgetBudgetSeconds = 300.0;
// Connected graphs on exactly 7 vertices, and on at most 7.
constexpr int kExpectedConnectedOn7 = 853;
constexpr int kExpectedConnectedUpTo7 = 996;
constexpr int kStructurePairs = 1000;
constexpr int kArbitrarySubsets = 1000;
constexpr unsigned kSeed = 20240611;
constexpr int kDeterminismRuns = 3;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 12) failures.push_back(std::move(why));
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool exact(long long expected, long long actual) {
  return std::llabs(expected - actual) <= kTolerance;
}

std::string g6(const Graph& g) { return to_graph6(g); }

CoronaSpec complete_spec(int n, int ell, const Graph& h) {
  VertexSet attach(n);
  for (int v = 0; v < ell; ++v) attach.insert(v);
  return {complete_graph(n), attach, h};
}

std::vector<Graph> pendants_up_to_4() { return connected_graphs_up_to(4); }

// Base data for H taken straight from cutset enumeration on H; depth only
// where a block-graph closed form exists.
BaseInvariants base_data(const Graph& h) { return base_invariants_for(h); }

Outcome criterion_cutsets() {
  Outcome o;
  const auto start = Clock::now();
  const auto corpus = connected_graphs_up_to(7);
  int mismatches = 0;
  for (const auto& g : corpus) {
    const auto report = enumerate_cutsets(g, {.jobs = 1});
    std::vector<std::uint64_t> got;
    for (const auto& t : report.cutsets) got.push_back(t.mask());
    auto expected = oracle::cutsets(g);
    std::sort(expected.begin(), expected.end(), canonical_less_mask);
    bool same = got == expected;
    for (std::size_t i = 0; same && i < got.size(); ++i) {
      same = exact(oracle::components(g, got[i]), report.components[i]);
    }
    if (!same) {
      ++mismatches;
      o.fail("cutset list differs for " + g6(g));
    }
  }
  const double elapsed = seconds_since(start);
  if (static_cast<int>(corpus.size()) != kExpectedConnectedUpTo7) {
    o.fail("corpus has " + std::to_string(corpus.size()) + " graphs");
  }
  const auto on7 = std::count_if(corpus.begin(), corpus.end(),
                                 [](const Graph& g) { return g.order() == 7; });
  if (on7 != kExpectedConnectedOn7) o.fail(std::to_string(on7) + " graphs on 7 vertices");
  if (elapsed >= kCutsetBudgetSeconds) o.fail("took " + std::to_string(elapsed) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu graphs (%ld on 7 vertices), %d mismatches, %.1f s single-threaded",
                corpus.size(), static_cast<long>(on7), mismatches, elapsed);
  o.summary = buf;
  return o;
}

Outcome criterion_dimension() {
  Outcome o;
  int points = 0;
  int mismatches = 0;
  for (const auto& h : pendants_up_to_4()) {
    const auto base = base_data(h);
    for (int n = 1; n <= 4; ++n) {
      for (int ell = 1; ell <= n; ++ell) {
        ++points;
        const auto spec = complete_spec(n, ell, h);
        const int formula = dim_l_corona(n, ell, base);
        const int oracle_dim = dimension_oracle(l_corona(spec).graph);
        if (!exact(formula, oracle_dim)) {
          ++mismatches;
          o.fail("n=" + std::to_string(n) + " l=" + std::to_string(ell) + " H=" + g6(h) +
                 ": formula " + std::to_string(formula) + ", oracle " + std::to_string(oracle_dim));
        }
      }
    }
  }
  o.summary = std::to_string(points) + " grid points, " + std::to_string(mismatches) + " mismatches";
  return o;
}

struct GridResult {
  int n;
  int ell;
  Graph h;
  bool product_unmixed;
};

std::vector<GridResult> unmixed_grid;

Outcome criterion_unmixed() {
  Outcome o;
  int points = 0;
  for (const auto& h : pendants_up_to_4()) {
    const bool h_unmixed = oracle::is_unmixed(h);
    for (int n = 2; n <= 4; ++n) {
      for (int ell = 1; ell < n; ++ell) {
        ++points;
        const bool p = is_unmixed(l_corona(complete_spec(n, ell, h)).graph);
        unmixed_grid.push_back({n, ell, h, p});
        if (p != h_unmixed) {
          o.fail("n=" + std::to_string(n) + " l=" + std::to_string(ell) + " H=" + g6(h));
        }
      }
    }
  }
  o.summary = std::to_string(points) + " grid points";
  return o;
}

Outcome criterion_accessible() {
  Outcome o;
  int points = 0;
  for (const auto& h : pendants_up_to_4()) {
    const bool h_accessible = oracle::is_accessible(h);
    for (int n = 2; n <= 4; ++n) {
      for (int ell = 1; ell < n; ++ell) {
        ++points;
        const bool p = is_accessible(l_corona(complete_spec(n, ell, h)).graph);
        if (p != h_accessible) {
          o.fail("n=" + std::to_string(n) + " l=" + std::to_string(ell) + " H=" + g6(h));
        }
      }
    }
  }
  o.summary = std::to_string(points) + " grid points";
  return o;
}

Outcome criterion_figure1() {
  Outcome o;
  const Graph base = oracle::figure1_base();
  const CoronaSpec spec{base, VertexSet::of(6, {1, 2}), complete_graph(2)};
  const Graph product = l_corona(spec).graph;
  if (!is_unmixed(base)) o.fail("base graph reported not unmixed");
  if (!oracle::is_unmixed(base)) o.fail("base graph not unmixed by brute force");
  if (is_unmixed(product)) o.fail("corona reported unmixed");
  const auto witness = unmixed_witness(product);
  const auto s = VertexSet::of(10, {0, 2});
  if (!witness || *witness != s) o.fail("witness is not {u,w}");
  if (!is_cutset(product, s) || !oracle::is_cutset(product, s.mask())) o.fail("{u,w} not a cutset");
  const int omega = component_count(product, s);
  if (!exact(4, omega) || !exact(4, oracle::components(product, s.mask()))) {
    o.fail("omega(G o_L H minus {u,w}) = " + std::to_string(omega));
  }
  if (!exact(3, s.count() + 1)) o.fail("|S|+1 != 3");
  o.summary = "omega = " + std::to_string(omega) + " vs |S|+1 = 3";
  return o;
}

Outcome criterion_structure() {
  Outcome o;
  std::mt19937 rng(kSeed);
  const auto bases = connected_graphs_up_to(5);
  const auto pendants = connected_graphs_up_to(3);
  auto pick = [&](std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  };
  int pairs = 0;
  int subsets = 0;
  int attempts = 0;
  while ((pairs < kStructurePairs || subsets < kArbitrarySubsets) && attempts < 100000) {
    ++attempts;
    const Graph& g = bases[pick(bases.size())];
    const Graph& h = pendants[pick(pendants.size())];
    std::uint64_t l_mask = 0;
    while (l_mask == 0) {
      l_mask = std::uniform_int_distribution<std::uint64_t>(1, (1U << g.order()) - 1)(rng);
    }
    const CoronaSpec spec{g, VertexSet::from_mask(g.order(), l_mask), h};
    const Graph product = l_corona(spec).graph;
    const int n = product.order();

    if (pairs < kStructurePairs) {
      const auto report = enumerate_cutsets(product, {.jobs = 1});
      if (report.cutsets.size() > 1) {
        const auto& t = report.cutsets[1 + pick(report.cutsets.size() - 1)];
        ++pairs;
        for (const auto& v : check_cutset_structure(spec, t)) {
          if (!v.holds) {
            o.fail("assertion (" + std::to_string(v.index) + ") " + v.detail + " on " + to_json(spec) +
                   " T=" + t.to_string());
          }
        }
        const int predicted = decompose_cutset(spec, t).predicted_components;
        if (!exact(oracle::components(product, t.mask()), predicted)) {
          o.fail("predicted count differs on cutset " + t.to_string());
        }
      }
    }
    if (subsets < kArbitrarySubsets) {
      const std::uint64_t s =
          std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng);
      ++subsets;
      const int predicted = decompose_cutset(spec, VertexSet::from_mask(n, s)).predicted_components;
      if (!exact(oracle::components(product, s), predicted)) {
        o.fail("formula fails on subset " + VertexSet::from_mask(n, s).to_string() + " of " +
               to_json(spec));
      }
    }
  }
  if (pairs < kStructurePairs) o.fail("only " + std::to_string(pairs) + " cutset pairs drawn");
  o.summary = std::to_string(pairs) + " (spec, cutset) pairs, " + std::to_string(subsets) +
              " arbitrary subsets, seed " + std::to_string(kSeed);
  return o;
}

bool same_quantity(const Quantity& a, const Quantity& b) { return a.value == b.value; }

Outcome criterion_consistency() {
  Outcome o;
  int comparisons = 0;
  for (int h = 1; h <= 5; ++h) {
    for (const Graph& pendant : {complete_graph(h), path_graph(h)}) {
      const auto base = base_invariants_block_graph(pendant);
      for (int n = 1; n <= 5; ++n) {
        const std::string where = "n=" + std::to_string(n) + " H=" + g6(pendant);
        const auto a = depth_reg_corona_cm_closed(complete_graph(n), base);
        const auto b = depth_reg_corona_complete(n, n, base);
        ++comparisons;
        if (!same_quantity(a.depth, b.depth) || !same_quantity(a.reg, b.reg) ||
            !same_quantity(a.pd, b.pd) || !same_quantity(a.dim, b.dim) ||
            !same_quantity(a.cmdef, b.cmdef)) {
          o.fail("cm-closed(K_n) differs from complete l=n at " + where);
        }
        const auto p = depth_reg_corona_path(n, base);
        const auto q = depth_reg_corona_cm_closed(path_graph(n), base);
        ++comparisons;
        if (!same_quantity(p.depth, q.depth) || !same_quantity(p.reg, q.reg) ||
            !same_quantity(p.pd, q.pd)) {
          o.fail("path corollary differs from cm-closed(P_n) at " + where);
        }
      }
    }
    // Complete pendant: the product is a block graph.
    const auto base = base_invariants_block_graph(complete_graph(h));
    for (int n = 1; n <= 5; ++n) {
      const Graph product = corona(complete_graph(n), complete_graph(h)).graph;
      const auto r = depth_reg_corona_complete(n, n, base);
      ++comparisons;
      if (!is_block_graph(product)) o.fail("K_n o K_h not a block graph");
      if (!exact(product.order() + 1, *r.depth.value)) {
        o.fail("depth != |V|+1 for n=" + std::to_string(n) + " h=" + std::to_string(h));
      }
      const int iv = internal_vertex_count(product);
      if (!exact(iv + 1, *r.reg.value)) {
        o.fail("reg != iv+1 for n=" + std::to_string(n) + " h=" + std::to_string(h));
      }
      if (n >= 2 && !exact(n, iv)) o.fail("iv != n for n=" + std::to_string(n));
    }
  }
  o.summary = std::to_string(comparisons) + " family comparisons";
  return o;
}

Outcome criterion_cmdef() {
  Outcome o;
  int points = 0;
  for (const auto& h : pendants_up_to_4()) {
    if (!is_block_graph(h)) continue;  // depth formulas need depth of H
    const auto base = base_invariants_block_graph(h);
    for (int n = 1; n <= 4; ++n) {
      for (int ell = 1; ell <= n; ++ell) {
        ++points;
        const auto r = depth_reg_corona_complete(n, ell, base);
        const int expected = dim_l_corona(n, ell, base) - *r.depth.value;
        if (!exact(expected, cmdef_report(n, ell, base))) {
          o.fail("n=" + std::to_string(n) + " l=" + std::to_string(ell) + " H=" + g6(h));
        }
      }
    }
  }
  const auto p3 = base_invariants_block_graph(path_graph(3));
  for (int n = 1; n <= 2; ++n) {
    if (!exact(1, cmdef_report(n, n, p3))) o.fail("cmdef(K_n o P3) != 1 at n=" + std::to_string(n));
  }
  const Graph k2p3 = corona(complete_graph(2), path_graph(3)).graph;
  const int dim8 = oracle::dimension(k2p3);
  const int depth8 = *depth_reg_corona_complete(2, 2, p3).depth.value;
  if (k2p3.order() != 8 || !exact(9, dim8) || !exact(8, depth8)) {
    o.fail("K2 o P3: dim " + std::to_string(dim8) + ", depth " + std::to_string(depth8));
  }
  o.summary = std::to_string(points) + " grid points; K2 o P3 dim " + std::to_string(dim8) +
              " depth " + std::to_string(depth8);
  return o;
}

Outcome criterion_gadgets() {
  Outcome o;
  const auto start = Clock::now();
  const auto corpus = connected_graphs_up_to(6);
  struct Row {
    std::optional<int> d2, d3;
    bool accessible = false;
    bool d2_accessible = false;
    bool d3_accessible = false;
  };
  std::vector<Row> rows(corpus.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    const unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
          const Graph& h = corpus[i];
          Row& r = rows[i];
          const Graph a = gadget_d2(h);
          const Graph b = gadget_d3(h);
          r.d2 = diameter(a);
          r.d3 = diameter(b);
          r.accessible = is_accessible(h, {.jobs = 1});
          r.d3_accessible = is_accessible(b, {.jobs = 1});
          if (r.accessible) r.d2_accessible = is_accessible(a, {.jobs = 1});
        }
      });
    }
  }
  int accessible = 0;
  int d3_transfer_mismatch = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& r = rows[i];
    const std::string name = g6(corpus[i]);
    if (r.d2 != 2) o.fail("diam d2(" + name + ") != 2");
    if (r.d3 != 3) o.fail("diam d3(" + name + ") != 3");
    if (r.accessible) {
      ++accessible;
      if (!r.d2_accessible) o.fail("d2(" + name + ") not accessible");
      if (!r.d3_accessible) o.fail("d3(" + name + ") not accessible");
    }
    if (r.accessible != r.d3_accessible) ++d3_transfer_mismatch;
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kGadgetBudgetSeconds) o.fail("took " + std::to_string(elapsed) + " s");
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%zu pendants, %d accessible, d3 transfer reversed on %d, %.1f s parallel",
                corpus.size(), accessible, d3_transfer_mismatch, elapsed);
  o.summary = buf;
  return o;
}

Outcome criterion_unmixed_structure() {
  Outcome o;
  int instances = 0;
  int subsets = 0;
  for (const auto& point : unmixed_grid) {
    if (!point.product_unmixed || point.ell >= point.n) continue;
    ++instances;
    const auto spec = complete_spec(point.n, point.ell, point.h);
    const Graph product = l_corona(spec).graph;
    const auto members = spec.attach.to_vector();
    for (std::uint32_t m = 1; m < (1U << members.size()); ++m) {
      VertexSet l0(point.n);
      for (std::size_t i = 0; i < members.size(); ++i) {
        if ((m >> i) & 1U) l0.insert(members[i]);
      }
      ++subsets;
      const auto in_product = VertexSet::from(product.order(), l0.to_vector());
      if (!is_cutset(product, in_product) || !oracle::is_cutset(product, in_product.mask())) {
        o.fail("L0=" + l0.to_string() + " not a cutset at n=" + std::to_string(point.n) +
               " H=" + g6(point.h));
      }
      if (component_count(spec.base, l0) != 1) o.fail("G minus L0 disconnected");
    }
  }
  if (instances == 0) o.fail("no unmixed instances recorded");
  o.summary = std::to_string(instances) + " unmixed instances, " + std::to_string(subsets) +
              " subsets L0";
  return o;
}

Outcome criterion_extremal() {
  Outcome o;
  int checks = 0;
  auto expect = [&](Family f, int size, int ell, const BaseInvariants& b, int p, int j,
                    const std::string& what) {
    ++checks;
    try {
      const auto e = extremal_betti_position(f, size, ell, b);
      if (!exact(p, e.p) || !exact(j, e.j) || !exact(p + j, e.degree())) {
        o.fail(what + ": got (" + std::to_string(e.p) + ", " + std::to_string(e.degree()) + ")");
      }
    } catch (const Error& e) {
      o.fail(what + ": " + e.what());
    }
  };
  for (int h = 3; h <= 6; ++h) {
    for (int ph = h - 1; ph <= 2 * h - 3; ++ph) {
      for (int r = 2; r <= 4; ++r) {
        BaseInvariants b;
        b.h = h;
        b.depth_q = 2 * h - ph;
        b.pd = ph;
        b.r_extremal = r;
        const std::string tag = " p_H=" + std::to_string(ph) + " r_H=" + std::to_string(r);
        // One-corona: p = n + p_H; j = r_H at n = 2, r_H + 1 for n >= 3.
        expect(Family::l_corona_complete, 2, 1, b, 2 + ph, r, "1-corona n=2" + tag);
        for (int n = 3; n <= 5; ++n) {
          expect(Family::l_corona_complete, n, 1, b, n + ph, r + 1, "1-corona n=" + std::to_string(n) + tag);
        }
        // t-corona: p = n + l - 1 + l p_H; j = l r_H + 1 for n >= 3.
        for (int n = 3; n <= 6; ++n) {
          for (int ell = 2; ell < n; ++ell) {
            expect(Family::l_corona_complete, n, ell, b, n + ell - 1 + ell * ph, ell * r + 1,
                   "t-corona n=" + std::to_string(n) + " l=" + std::to_string(ell) + tag);
          }
        }
        // Full corona: p = 2n + n p_H; j = n r_H at n = 2, n r_H + 1 for n >= 3.
        expect(Family::full_corona_complete, 2, 2, b, 4 + 2 * ph, 2 * r, "full n=2" + tag);
        for (int n = 3; n <= 6; ++n) {
          expect(Family::full_corona_complete, n, n, b, 2 * n + n * ph, n * r + 1,
                 "full n=" + std::to_string(n) + tag);
        }
        // CM-closed base and paths: p = 2b + b p_H; j = b r_H + 1.
        for (int bsize = 1; bsize <= 6; ++bsize) {
          expect(Family::corona_cm_closed, bsize, bsize, b, 2 * bsize + bsize * ph, bsize * r + 1,
                 "cm-closed b=" + std::to_string(bsize) + tag);
          expect(Family::corona_path, bsize, bsize, b, 2 * bsize + bsize * ph, bsize * r + 1,
                 "path b=" + std::to_string(bsize) + tag);
        }
      }
    }
  }
  o.summary = std::to_string(checks) + " golden positions";
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  std::string corpus;
  for (const auto& g : connected_graphs_up_to(6)) corpus += to_graph6(g) + "\n";
  std::vector<std::string> outputs;
  const std::vector<std::vector<std::string>> variants = {
      {"scan"}, {"scan", "--jobs", "1"}, {"scan", "--jobs", "7"}};
  for (int run = 0; run < kDeterminismRuns; ++run) {
    for (const auto& args : variants) {
      std::istringstream in(corpus);
      std::ostringstream out;
      std::ostringstream err;
      if (cli::run(args, in, out, err) != 0) o.fail("scan exited nonzero: " + err.str());
      outputs.push_back(out.str());
    }
  }
  for (const auto& text : outputs) {
    if (text != outputs.front()) o.fail("scan outputs differ");
  }
  const auto lines = std::count(outputs.front().begin(), outputs.front().end(), '\n');
  if (lines != 143) o.fail("expected 143 records, got " + std::to_string(lines));
  o.summary = std::to_string(outputs.size()) + " runs, " + std::to_string(lines) + " records, " +
              std::to_string(outputs.front().size()) + " bytes each";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "cutset oracle equivalence", criterion_cutsets},
      {2, "l-corona dimension formula", criterion_dimension},
      {3, "unmixedness equivalence", criterion_unmixed},
      {4, "accessibility equivalence", criterion_accessible},
      {5, "Figure-1 regression", criterion_figure1},
      {6, "corona cutset structure", criterion_structure},
      {7, "cross-family consistency", criterion_consistency},
      {8, "CM defect", criterion_cmdef},
      {9, "gadget diameters", criterion_gadgets},
      {10, "unmixed L-corona structure", criterion_unmixed_structure},
      {11, "extremal Betti positions", criterion_extremal},
      {12, "scan determinism", criterion_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.summary.c_str());
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
