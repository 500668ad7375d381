#include "bei/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "bei/error.hpp"

namespace bei {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail_graph6(const std::string& why) {
  throw Error(ErrorCode::parse_error, "malformed graph6: " + why);
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) fail_graph6(std::string("byte '") + c + "' out of range");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  append_size(out, n);
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) fail_graph6("empty string");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) fail_graph6("truncated size field");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos]));
  } else {
    if (text.size() < 8) fail_graph6("truncated size field");
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[pos]));
  }
  if (n > 1U << 16) fail_graph6("vertex count too large");

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (pairs + 5) / 6;
  if (text.size() - pos != expected) {
    fail_graph6("expected " + std::to_string(expected) + " adjacency bytes, found " +
                std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (pairs % 6 != 0) {
    int last = sextet(text.back());
    if ((last & ((1 << (6 - pairs % 6)) - 1)) != 0) fail_graph6("nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) {
      throw Error(ErrorCode::parse_error,
                  "edge list line " + std::to_string(line_no) + " has more than two tokens");
    }
    if (tokens.size() == 2 && tokens[0] == tokens[1]) {
      throw Error(ErrorCode::parse_error,
                  "edge list line " + std::to_string(line_no) + " is a self-loop");
    }
    rows.push_back(std::move(tokens));
  }

  auto as_index = [](const std::string& t) -> int {
    int v = -1;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    return (ec == std::errc{} && ptr == t.data() + t.size() && v >= 0) ? v : -1;
  };
  bool numeric = std::all_of(rows.begin(), rows.end(), [&](const auto& r) {
    return std::all_of(r.begin(), r.end(), [&](const auto& t) { return as_index(t) >= 0; });
  });

  std::vector<Edge> edges;
  if (numeric) {
    int n = 0;
    for (const auto& r : rows) {
      for (const auto& t : r) n = std::max(n, as_index(t) + 1);
    }
    for (const auto& r : rows) {
      if (r.size() == 2) edges.push_back({as_index(r[0]), as_index(r[1])});
    }
    return Graph(n, edges);
  }

  std::map<std::string, int> index;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& t) {
    auto [it, fresh] = index.emplace(t, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(t);
    return it->second;
  };
  for (const auto& r : rows) {
    int a = intern(r[0]);
    if (r.size() == 2) edges.push_back({a, intern(r[1])});
  }
  const int n = static_cast<int>(labels.size());
  return Graph(n, edges, std::move(labels));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  std::vector<bool> touched(static_cast<std::size_t>(g.order()), false);
  for (const auto& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    touched[e.u] = touched[e.v] = true;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (!touched[v]) out << g.label(v) << '\n';
  }
  return out.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) {
    std::string label = g.label(v);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped.push_back('\\');
      escaped.push_back(c);
    }
    out << "  " << v << " [label=\"" << escaped << "\"];\n";
  }
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bei
