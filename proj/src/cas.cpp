#include "bei/cas.hpp"

#include <sstream>

#include "bei/error.hpp"
#include "bei/graph_io.hpp"

namespace bei {

std::string_view to_string(CasDialect d) noexcept {
  return d == CasDialect::m2 ? "m2" : "singular";
}

std::optional<CasDialect> parse_cas_dialect(std::string_view text) {
  if (text == "m2" || text == "macaulay2") return CasDialect::m2;
  if (text == "singular") return CasDialect::singular;
  return std::nullopt;
}

std::string_view script_extension(CasDialect d) noexcept {
  return d == CasDialect::m2 ? ".m2" : ".sing";
}

namespace {

std::vector<std::string> generators(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) {
    const std::string i = std::to_string(e.u + 1);
    const std::string j = std::to_string(e.v + 1);
    out.push_back("x" + i + "*y" + j + "-x" + j + "*y" + i);
  }
  return out;
}

std::string variables(int n) {
  std::string out;
  for (char c : {'x', 'y'}) {
    for (int i = 1; i <= n; ++i) {
      if (!out.empty()) out += ",";
      out += c + std::to_string(i);
    }
  }
  return out;
}

void header(std::ostringstream& out, const Graph& g, std::string_view comment,
            const std::vector<CasExpectation>& expectations) {
  out << comment << " binomial edge ideal of graph6 " << to_graph6(g) << '\n';
  out << comment << " vertices " << g.order() << ", edges " << g.size() << '\n';
  for (const auto& e : expectations) {
    out << comment << " expected " << e.name << " " << e.value;
    if (!e.source.empty()) out << " (" << e.source << ")";
    out << '\n';
  }
}

}  // namespace

std::string emit_cas_script(const Graph& g, CasDialect dialect,
                            const std::vector<CasExpectation>& expectations) {
  if (g.order() < 1) throw Error(ErrorCode::invalid_argument, "CAS scripts need n >= 1");
  const auto gens = generators(g);
  std::ostringstream out;
  if (dialect == CasDialect::m2) {
    header(out, g, "--", expectations);
    out << "needsPackage \"Depth\";\n";
    out << "S = QQ[x1..x" << g.order() << ",y1..y" << g.order() << "];\n";
    out << "J = ideal(";
    if (gens.empty()) out << "0_S";
    for (std::size_t k = 0; k < gens.size(); ++k) out << (k ? ", " : "") << gens[k];
    out << ");\n";
    out << "M = S^1/J;\n";
    out << "print(\"dim \" | toString dim M);\n";
    out << "print(\"depth \" | toString depth M);\n";
    out << "print(\"reg \" | toString regularity M);\n";
    out << "print betti res M;\n";
  } else {
    header(out, g, "//", expectations);
    out << "LIB \"homolog.lib\";\n";
    out << "ring S = 0, (" << variables(g.order()) << "), dp;\n";
    out << "ideal J = ";
    if (gens.empty()) out << "0";
    for (std::size_t k = 0; k < gens.size(); ++k) out << (k ? ", " : "") << gens[k];
    out << ";\n";
    out << "ideal G = std(J);\n";
    out << "print(\"dim \" + string(dim(G)));\n";
    out << "module M = J;\n";
    out << "print(\"depth \" + string(depth(M)));\n";
    out << "resolution R = mres(J, 0);\n";
    out << "// reg(S/J) = regularity(J) - 1\n";
    out << "print(\"regularity(J) \" + string(regularity(R)));\n";
    out << "print(betti(R), \"betti\");\n";
  }
  return out.str();
}

}  // namespace bei
