#include "bei/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bei/blocks.hpp"
#include "bei/bms.hpp"
#include "bei/cas.hpp"
#include "bei/catalog.hpp"
#include "bei/corona.hpp"
#include "bei/cutsets.hpp"
#include "bei/error.hpp"
#include "bei/graph_io.hpp"
#include "bei/invariants.hpp"

namespace bei::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string out_format;
  int bound = 0;
  int jobs = 0;
  std::string dialect = "m2";
};

struct GraphInput {
  std::string input;
  std::string input_format;
  std::string graph;
  std::vector<std::string> corona;
  std::string base;
  std::string pendant;
  std::string attach;
};

struct Loaded {
  Graph graph;
  std::optional<CoronaSpec> spec;
};

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  return read_all(file);
}

std::string infer_format(const std::string& path, const std::string& explicit_format) {
  if (!explicit_format.empty()) return explicit_format;
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".g6") || ends_with(".graph6")) return "graph6";
  if (ends_with(".json")) return "spec-json";
  return "edgelist";
}

Graph first_graph6(const std::string& text) {
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return from_graph6(line);
  }
  throw Error(ErrorCode::parse_error, "no graph6 line in input");
}

Loaded parse_text(const std::string& text, const std::string& format) {
  if (format == "graph6") return {first_graph6(text), std::nullopt};
  if (format == "edgelist") return {parse_edge_list(text), std::nullopt};
  if (format == "spec-json") {
    auto spec = corona_spec_from_json(text);
    return {l_corona(spec).graph, spec};
  }
  throw Error(ErrorCode::invalid_argument, "unknown input format '" + format + "'");
}

// "g6:<code>", a shorthand name (K4, P3, C5, S3) or a file path.
Graph resolve_graph(const std::string& ref, const std::string& format = "") {
  if (ref.rfind("g6:", 0) == 0) return from_graph6(ref.substr(3));
  if (auto named = named_graph(ref)) return *named;
  auto loaded = parse_text(read_file(ref), infer_format(ref, format));
  return loaded.graph;
}

VertexSet parse_vertex_list(const Graph& g, const std::string& text) {
  VertexSet s(g.order());
  std::string token;
  std::istringstream parts(text);
  while (std::getline(parts, token, ',')) {
    token.erase(0, token.find_first_not_of(" {"));
    token.erase(token.find_last_not_of(" }") + 1);
    if (token.empty()) continue;
    int label_match = -1;
    for (int v = 0; v < g.order() && g.has_labels(); ++v) {
      if (g.label(v) == token) label_match = v;
    }
    if (label_match >= 0) {
      s.insert(label_match);
      continue;
    }
    int v = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::invalid_vertex, "unknown vertex '" + token + "'");
    }
    s.insert(v);
  }
  return s;
}

Loaded load(const GraphInput& gi, std::istream& in) {
  const int sources = (!gi.input.empty()) + (!gi.graph.empty()) + (!gi.corona.empty()) +
                      (!gi.base.empty() || !gi.pendant.empty());
  if (sources != 1) {
    throw Error(ErrorCode::invalid_argument,
                "give exactly one of --input, --graph, --corona or --base/--pendant");
  }
  if (!gi.input.empty()) {
    if (gi.input == "-") return parse_text(read_all(in), gi.input_format.empty() ? "graph6" : gi.input_format);
    return parse_text(read_file(gi.input), infer_format(gi.input, gi.input_format));
  }
  if (!gi.graph.empty()) return {resolve_graph(gi.graph, gi.input_format), std::nullopt};
  CoronaSpec spec;
  if (!gi.corona.empty()) {
    spec = full_corona_spec(resolve_graph(gi.corona.at(0)), resolve_graph(gi.corona.at(1)));
  } else {
    if (gi.base.empty() || gi.pendant.empty()) {
      throw Error(ErrorCode::invalid_argument, "--base and --pendant go together");
    }
    spec.base = resolve_graph(gi.base);
    spec.pendant = resolve_graph(gi.pendant);
    spec.attach = gi.attach.empty() ? spec.base.vertices() : parse_vertex_list(spec.base, gi.attach);
  }
  spec.validate();
  return {l_corona(spec).graph, spec};
}

void add_graph_input(CLI::App* sub, GraphInput& gi) {
  sub->add_option("-i,--input", gi.input, "graph6, edge-list or spec-json file ('-' for stdin)");
  sub->add_option("--input-format", gi.input_format, "graph6 | edgelist | spec-json")
      ->check(CLI::IsMember({"graph6", "edgelist", "spec-json"}));
  sub->add_option("-g,--graph", gi.graph, "Kn, Pn, Cn, Sn, g6:<code> or a file");
  sub->add_option("--corona", gi.corona, "G H: the corona product G o H")->expected(2);
  sub->add_option("--base", gi.base, "base graph G of an L-corona");
  sub->add_option("--pendant", gi.pendant, "pendant graph H of an L-corona");
  sub->add_option("--attach", gi.attach, "L as a comma list (default V(G))");
}

EnumerationOptions enumeration(const Common& c) {
  EnumerationOptions o;
  if (c.bound < 0 || c.bound > kMaxEnumerationBound) {
    throw Error(ErrorCode::invalid_argument, "--bound must lie in [1, 64]");
  }
  if (c.jobs < 0) throw Error(ErrorCode::invalid_argument, "--jobs must be non-negative");
  o.bound = c.bound;
  o.jobs = c.jobs;
  return o;
}

CasDialect dialect(const Common& c) {
  auto d = parse_cas_dialect(c.dialect);
  if (!d) throw Error(ErrorCode::invalid_argument, "unknown dialect '" + c.dialect + "'");
  return *d;
}

ordered_json graph_json(const Graph& g) {
  ordered_json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  auto edges = ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

ordered_json set_json(const Graph& g, const VertexSet& s) {
  ordered_json j;
  j["set"] = s.to_vector();
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (int v : s) labels.push_back(g.label(v));
    j["labels"] = labels;
  }
  return j;
}

// Formula values for a corona in one of the supported families, for CAS
// script comments.
std::vector<CasExpectation> expectations(const Loaded& loaded, const EnumerationOptions& options) {
  std::vector<CasExpectation> out;
  auto push = [&](const char* name, const Quantity& q) {
    if (q.value) out.push_back({name, *q.value, q.rule});
  };
  if (loaded.spec && is_connected(loaded.spec->pendant) && is_connected(loaded.spec->base)) {
    const auto& spec = *loaded.spec;
    try {
      const auto base = base_invariants_for(spec.pendant, options);
      std::optional<InvariantReport> report;
      if (is_complete(spec.base)) {
        report = depth_reg_corona_complete(spec.base.order(), spec.attach.count(), base);
      } else if (!spec.attach_is_proper() && is_cm_closed(spec.base)) {
        report = depth_reg_corona_cm_closed(spec.base, base, &spec.pendant, options);
      }
      if (report) {
        push("dim", report->dim);
        push("depth", report->depth);
        push("reg", report->reg);
      }
    } catch (const Error&) {
      // Families outside the formulas simply get no expectations.
    }
  }
  if (loaded.graph.order() <= std::min(options.bound > 0 ? options.bound : default_enumeration_bound(),
                                       kMaxEnumerationBound)) {
    out.push_back({"dim", dimension_oracle(loaded.graph, options), "cutset oracle"});
  }
  return out;
}

void write_graph(std::ostream& out, const Loaded& loaded, const std::string& format,
                 const Common& common, const EnumerationOptions& options) {
  if (format == "graph6") {
    out << to_graph6(loaded.graph) << '\n';
  } else if (format == "dot") {
    out << to_dot(loaded.graph);
  } else if (format == "edgelist") {
    out << to_edge_list(loaded.graph);
  } else if (format == "cas") {
    out << emit_cas_script(loaded.graph, dialect(common), expectations(loaded, options));
  } else if (format == "json") {
    auto j = graph_json(loaded.graph);
    if (loaded.spec) j["spec"] = ordered_json::parse(to_json(*loaded.spec));
    out << j.dump() << '\n';
  } else {
    throw Error(ErrorCode::invalid_argument, "output format '" + format + "' not valid here");
  }
}

int emit_error(std::ostream& err, std::string_view code, const std::string& message) {
  ordered_json j;
  j["error"] = std::string(code);
  j["message"] = message;
  err << j.dump() << '\n';
  return code == "usage" ? kExitUsage : kExitError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Binomial edge ideals of corona products: cutsets, invariants, gadgets"};
  app.name("bei");
  app.require_subcommand(1);

  Common common;
  GraphInput gi;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--bound", common.bound, "enumeration cap (default 24 or $BEI_BOUND)");
    sub->add_option("--jobs", common.jobs, "worker threads (0 = all cores)");
  };

  auto* construct = app.add_subcommand("construct", "build a graph or corona product");
  add_graph_input(construct, gi);
  add_common(construct);
  construct->add_option("--out", common.out_format, "json | dot | graph6 | edgelist");

  auto* cutsets = app.add_subcommand("cutsets", "enumerate all cutsets");
  add_graph_input(cutsets, gi);
  add_common(cutsets);
  cutsets->add_option("--out", common.out_format, "json | jsonl");
  std::optional<int> size_cap;
  cutsets->add_option("--size-cap", size_cap, "only cutsets of at most this size");

  auto* check = app.add_subcommand("check", "unmixed / accessible / cutset checks");
  add_graph_input(check, gi);
  add_common(check);
  bool want_unmixed = false;
  bool want_accessible = false;
  bool want_structure = false;
  std::string cutset_text;
  check->add_flag("--unmixed", want_unmixed, "decide unmixedness");
  check->add_flag("--accessible", want_accessible, "decide accessibility");
  check->add_option("--cutset", cutset_text, "comma list; test it and find a removal chain");
  check->add_flag("--structure", want_structure,
                  "evaluate the corona cutset assertions on --cutset");

  auto* invariants = app.add_subcommand("invariants", "closed-form dim/depth/reg/pd/cmdef");
  add_common(invariants);
  std::string family;
  int n = 0;
  int ell = 0;
  std::string pendant_block;
  std::string pendant_graph;
  std::string pendant_json;
  std::string b_graph;
  std::optional<int> r_extremal;
  invariants->add_option("--family", family, "l-corona | full-corona | cm-closed | path")
      ->required()
      ->check(CLI::IsMember({"l-corona", "full-corona", "cm-closed", "path"}));
  invariants->add_option("--n", n, "order of the complete or path base");
  invariants->add_option("--l", ell, "number of attached copies (l-corona)");
  invariants->add_option("--b-graph", b_graph, "Cohen-Macaulay closed base (cm-closed)");
  invariants->add_option("--pendant-block-graph", pendant_block, "block-graph pendant H");
  invariants->add_option("--pendant", pendant_graph, "pendant H (closed forms or oracle)");
  invariants->add_option("--pendant-json", pendant_json, "user-supplied base invariants");
  invariants->add_option("--r-extremal", r_extremal, "r_H for the extremal Betti position");

  auto* gadget = app.add_subcommand("gadget", "diameter gadgets of the reduction");
  add_common(gadget);
  std::string kind;
  std::string gadget_pendant;
  bool verify = false;
  gadget->add_option("kind", kind, "d2 | d3")->required()->check(CLI::IsMember({"d2", "d3"}));
  gadget->add_option("--pendant,-g,--graph", gadget_pendant, "pendant graph H")->required();
  gadget->add_flag("--verify", verify, "check diameter, accessibility and distances");
  gadget->add_option("--out", common.out_format, "json | dot | graph6 | edgelist");

  auto* scan = app.add_subcommand("scan", "stream a graph6 corpus into JSON lines");
  add_common(scan);
  std::string scan_input = "-";
  std::vector<int> diameters;
  std::optional<int> max_n;
  std::string cas_dir;
  scan->add_option("-i,--input", scan_input, "graph6 file ('-' for stdin)");
  scan->add_option("--diameter", diameters, "keep these diameters")->delimiter(',');
  scan->add_option("--max-n", max_n, "skip graphs with more vertices");
  scan->add_option("--cas-dir", cas_dir, "write CAS scripts for accessible graphs here");
  scan->add_option("--dialect", common.dialect, "m2 | singular");

  auto* exporter = app.add_subcommand("export", "write a graph as graph6, DOT, edge list or CAS");
  add_graph_input(exporter, gi);
  add_common(exporter);
  exporter->add_option("--out", common.out_format, "cas | graph6 | dot | edgelist | json");
  exporter->add_option("--dialect", common.dialect, "m2 | singular");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error(err, "usage", e.what());
  }

  try {
    const auto options = enumeration(common);

    if (construct->parsed()) {
      write_graph(out, load(gi, in), common.out_format.empty() ? "json" : common.out_format, common,
                  options);
      return 0;
    }

    if (cutsets->parsed()) {
      const auto loaded = load(gi, in);
      EnumerationOptions o = options;
      o.size_cap = size_cap;
      const auto report = enumerate_cutsets(loaded.graph, o);
      if (common.out_format == "jsonl") {
        out << to_jsonl(report, loaded.graph);
      } else if (common.out_format == "json" || common.out_format.empty()) {
        out << to_json(report, loaded.graph) << '\n';
      } else {
        throw Error(ErrorCode::invalid_argument, "cutsets writes json or jsonl");
      }
      return 0;
    }

    if (check->parsed()) {
      const auto loaded = load(gi, in);
      const Graph& g = loaded.graph;
      if (!want_unmixed && !want_accessible && cutset_text.empty()) {
        want_unmixed = want_accessible = true;
      }
      ordered_json j;
      j["n"] = g.order();
      if (want_unmixed || want_accessible) {
        const auto report = enumerate_cutsets(g, options);
        const int omega = component_count(g);
        if (report.disconnected_extension) j["extension"] = "disconnected";
        if (want_unmixed) {
          ordered_json u;
          u["value"] = report.is_unmixed;
          if (report.unmixed_witness) {
            auto w = set_json(g, *report.unmixed_witness);
            w["components"] = component_count(g, *report.unmixed_witness);
            w["expected"] = report.unmixed_witness->count() + omega;
            u["witness"] = w;
          } else {
            u["witness"] = nullptr;
          }
          j["unmixed"] = u;
        }
        if (want_accessible) {
          ordered_json a;
          a["value"] = report.is_unmixed && report.is_accessible_system;
          a["accessible_system"] = report.is_accessible_system;
          j["accessible"] = a;
        }
      }
      if (!cutset_text.empty()) {
        const VertexSet t = parse_vertex_list(g, cutset_text);
        ordered_json c = set_json(g, t);
        const bool cut = is_cutset(g, t);
        c["is_cutset"] = cut;
        c["components"] = component_count(g, t);
        if (cut) {
          const auto chain = accessibility_witness_chain(g, t);
          c["chain"] = chain ? ordered_json(*chain) : ordered_json(nullptr);
        }
        if (want_structure) {
          if (!loaded.spec) {
            throw Error(ErrorCode::invalid_argument, "--structure needs a corona input");
          }
          const auto d = decompose_cutset(*loaded.spec, t);
          c["predicted_components"] = d.predicted_components;
          if (cut && !t.empty()) {
            auto list = ordered_json::array();
            for (const auto& v : check_cutset_structure(*loaded.spec, t)) {
              list.push_back({{"assertion", v.index},
                              {"holds", v.holds},
                              {"applicable", v.applicable},
                              {"detail", v.detail}});
            }
            c["structure"] = list;
          }
        }
        j["cutset"] = c;
      } else if (want_structure) {
        throw Error(ErrorCode::invalid_argument, "--structure needs --cutset");
      }
      out << j.dump() << '\n';
      return 0;
    }

    if (invariants->parsed()) {
      const int pendant_sources =
          (!pendant_block.empty()) + (!pendant_graph.empty()) + (!pendant_json.empty());
      if (pendant_sources != 1) {
        throw Error(ErrorCode::invalid_argument,
                    "give exactly one of --pendant-block-graph, --pendant, --pendant-json");
      }
      std::optional<Graph> h;
      BaseInvariants base;
      if (!pendant_block.empty()) {
        h = resolve_graph(pendant_block);
        base = base_invariants_block_graph(*h, options);
      } else if (!pendant_graph.empty()) {
        h = resolve_graph(pendant_graph);
        base = base_invariants_for(*h, options);
      } else {
        const std::string text =
            pendant_json.front() == '{' ? pendant_json : read_file(pendant_json);
        base = base_invariants_from_json(text);
      }
      if (r_extremal) base.r_extremal = r_extremal;
      base.validate();

      InvariantReport report;
      const Graph* pendant = h ? &*h : nullptr;
      if (family == "l-corona" || family == "full-corona") {
        if (n < 1) throw Error(ErrorCode::invalid_argument, "--n is required");
        const int l = family == "full-corona" ? n : ell;
        report = depth_reg_corona_complete(n, l, base);
        if (pendant) cross_check_dimension(report, *pendant, options);
      } else if (family == "path") {
        if (n < 1) throw Error(ErrorCode::invalid_argument, "--n is required");
        report = depth_reg_corona_path(n, base, pendant, options);
      } else {
        if (b_graph.empty()) throw Error(ErrorCode::invalid_argument, "--b-graph is required");
        report = depth_reg_corona_cm_closed(resolve_graph(b_graph), base, pendant, options);
      }
      out << to_json(report) << '\n';
      return 0;
    }

    if (gadget->parsed()) {
      const Graph h = resolve_graph(gadget_pendant);
      if (verify) {
        const auto c = kind == "d2" ? verify_reduction_d2(h, options) : verify_reduction_d3(h, options);
        ordered_json j;
        j["kind"] = kind;
        j["gadget"] = to_graph6(c.gadget);
        j["n"] = c.gadget.order();
        j["diameter"] = c.diameter ? ordered_json(*c.diameter) : ordered_json(nullptr);
        j["diameter_ok"] = c.diameter_ok;
        j["accessible_transfer_ok"] = c.accessible_transfer_ok;
        j["distance_formula_ok"] = c.distance_formula_ok;
        auto ex = ordered_json::array();
        for (const auto& m : c.literal_formula_exceptions) {
          ex.push_back({{"u", m.u}, {"v", m.v}, {"printed", m.expected}, {"bfs", m.actual}});
        }
        j["printed_formula_exceptions"] = ex;
        out << j.dump() << '\n';
        return 0;
      }
      Loaded loaded{kind == "d2" ? gadget_d2(h) : gadget_d3(h), std::nullopt};
      write_graph(out, loaded, common.out_format.empty() ? "json" : common.out_format, common,
                  options);
      return 0;
    }

    if (scan->parsed()) {
      ScanOptions so;
      so.diameters = {diameters.begin(), diameters.end()};
      so.max_n = max_n;
      if (!cas_dir.empty()) so.cas_dir = cas_dir;
      so.dialect = dialect(common);
      so.enumeration = options;
      so.jobs = common.jobs;
      if (scan_input == "-") {
        bms_scan(in, out, err, so);
      } else {
        std::ifstream file(scan_input, std::ios::binary);
        if (!file) throw Error(ErrorCode::io_error, "cannot open '" + scan_input + "'");
        bms_scan(file, out, err, so);
      }
      return 0;
    }

    if (exporter->parsed()) {
      write_graph(out, load(gi, in), common.out_format.empty() ? "cas" : common.out_format, common,
                  options);
      return 0;
    }
  } catch (const Error& e) {
    return emit_error(err, to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return emit_error(err, "internal", e.what());
  }
  return emit_error(err, "usage", "no command given");
}

}  // namespace bei::cli
