#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

enum class CasDialect { m2, singular };

std::string_view to_string(CasDialect d) noexcept;
/// "m2" / "macaulay2" / "singular"; nullopt otherwise.
std::optional<CasDialect> parse_cas_dialect(std::string_view text);
/// ".m2" or ".sing".
std::string_view script_extension(CasDialect d) noexcept;

/// A value the script's output should reproduce, written as a comment.
struct CasExpectation {
  std::string name;
  int value;
  std::string source;
};

/// Script computing dim, depth, regularity and the Betti table of S/J_G in
/// the ring with variables x1..xn, y1..yn.  Generators x_i*y_j - x_j*y_i
/// follow the ascending edge order.  Byte-stable for equal input.
std::string emit_cas_script(const Graph& g, CasDialect dialect,
                            const std::vector<CasExpectation>& expectations = {});

}  // namespace bei
