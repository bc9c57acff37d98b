#pragma once

// Line-oriented graph and instance files:
//
//   # comment
//   p edge <n> <m>
//   e <u> <v>        (m lines, 1 <= u,v <= n, 1-based)
//   k <budget>       (instance files only)

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/graph.hpp"
#include "hfree/instance.hpp"

namespace hfree {

enum class ParseErrorCode {
  malformed_header,
  malformed_line,
  duplicate_edge,
  endpoint_out_of_range,
  self_loop,
  edge_count_mismatch,
  missing_budget,
  malformed_budget,
};

inline std::string_view to_string(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::malformed_header: return "malformed-header";
    case ParseErrorCode::malformed_line: return "malformed-line";
    case ParseErrorCode::duplicate_edge: return "duplicate-edge";
    case ParseErrorCode::endpoint_out_of_range: return "endpoint-out-of-range";
    case ParseErrorCode::self_loop: return "self-loop";
    case ParseErrorCode::edge_count_mismatch: return "edge-count-mismatch";
    case ParseErrorCode::missing_budget: return "missing-budget";
    case ParseErrorCode::malformed_budget: return "malformed-budget";
  }
  return "unknown";
}

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, std::size_t line, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + " at line " + std::to_string(line) +
                           ": " + detail),
        code_(code),
        line_(line) {}

  ParseErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorCode code_;
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::size_t> to_size(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct ParsedFile {
  Graph graph;
  std::optional<std::size_t> budget;
};

inline ParsedFile parse_file(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::size_t line_no = 0;
  std::optional<std::size_t> budget;
  Graph g;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;

    if (!n) {
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "edge") {
        throw ParseError(ParseErrorCode::malformed_header, line_no, std::string(line));
      }
      auto nv = to_size(tokens[2]);
      auto mv = to_size(tokens[3]);
      if (!nv || !mv) throw ParseError(ParseErrorCode::malformed_header, line_no, std::string(line));
      n = *nv;
      declared_m = *mv;
      g = Graph(*n);
      continue;
    }

    if (budget) {
      throw ParseError(ParseErrorCode::malformed_line, line_no, "content after budget line");
    }

    if (tokens[0] == "e") {
      if (tokens.size() != 3) throw ParseError(ParseErrorCode::malformed_line, line_no, std::string(line));
      auto a = to_size(tokens[1]);
      auto b = to_size(tokens[2]);
      if (!a || !b) throw ParseError(ParseErrorCode::malformed_line, line_no, std::string(line));
      if (*a < 1 || *b < 1 || *a > *n || *b > *n) {
        throw ParseError(ParseErrorCode::endpoint_out_of_range, line_no, std::string(line));
      }
      if (*a == *b) throw ParseError(ParseErrorCode::self_loop, line_no, std::string(line));
      if (!g.add_edge(*a - 1, *b - 1)) {
        throw ParseError(ParseErrorCode::duplicate_edge, line_no, std::string(line));
      }
    } else if (tokens[0] == "k") {
      if (tokens.size() != 2) throw ParseError(ParseErrorCode::malformed_budget, line_no, std::string(line));
      auto k = to_size(tokens[1]);
      if (!k) throw ParseError(ParseErrorCode::malformed_budget, line_no, std::string(line));
      if (g.edge_count() != declared_m) {
        throw ParseError(ParseErrorCode::edge_count_mismatch, line_no,
                         "header declares " + std::to_string(declared_m) + " edges, found " +
                             std::to_string(g.edge_count()));
      }
      budget = *k;
    } else {
      throw ParseError(ParseErrorCode::malformed_line, line_no, std::string(line));
    }
  }

  if (!n) throw ParseError(ParseErrorCode::malformed_header, line_no, "missing 'p edge' header");
  if (g.edge_count() != declared_m) {
    throw ParseError(ParseErrorCode::edge_count_mismatch, line_no,
                     "header declares " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(g.edge_count()));
  }
  return {std::move(g), budget};
}

}  // namespace detail

/// Parses a graph file. A trailing budget line is tolerated and ignored, so
/// instance files can be used wherever a pattern is expected.
inline Graph parse_graph(std::string_view text) { return detail::parse_file(text).graph; }

inline Instance parse_instance(std::string_view text) {
  auto parsed = detail::parse_file(text);
  if (!parsed.budget) {
    throw ParseError(ParseErrorCode::missing_budget, 0, "instance file requires a 'k <budget>' line");
  }
  return {std::move(parsed.graph), *parsed.budget};
}

inline std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

inline std::string write_instance(const Instance& inst) {
  return write_graph(inst.graph) + "k " + std::to_string(inst.budget) + "\n";
}

/// Single-line rendering with " / " in place of newlines, used inside reports.
inline std::string inline_text(std::string_view multi_line) {
  std::string out;
  for (char c : multi_line) {
    if (c == '\n') {
      out += " / ";
    } else {
      out += c;
    }
  }
  while (out.ends_with(" / ")) out.resize(out.size() - 3);
  return out;
}

}  // namespace hfree
