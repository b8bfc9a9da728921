#ifndef LPA_GRAPH_IO_HPP
#define LPA_GRAPH_IO_HPP

// Line-oriented graph files:
//
//   vertex v
//   edge e: v -> w
//   bundle b: v -> w * inf     (omega parallel edges)
//   bundle b: v -> w * 3       (three parallel edges)
//
// `#` starts a comment. Vertices may be declared after the edges using them.

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"

namespace lpa {

namespace detail {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

inline std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ':' || c == '*') {
      out.push_back({std::string(1, c), i + 1});
      ++i;
    } else if (line.substr(i, 2) == "->") {
      out.push_back({"->", i + 1});
      i += 2;
    } else if (is_name_char(c)) {
      std::size_t j = i;
      while (j < line.size() && is_name_char(line[j])) ++j;
      out.push_back({std::string(line.substr(i, j - i)), i + 1});
      i = j;
    } else {
      throw ParseError(line_no, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

struct PendingBundle {
  std::size_t line = 0;
  Token name, source, range;
  Multiplicity multiplicity = Multiplicity::finite(1);
};

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  using detail::Token;
  std::vector<std::string> vertices;
  std::unordered_map<std::string, VertexId> vertex_ids;
  std::unordered_map<std::string, std::size_t> declared_at;  // name -> line
  std::vector<detail::PendingBundle> pending;

  auto declare = [&](const Token& t, std::size_t line) {
    auto [it, fresh] = declared_at.emplace(t.text, line);
    if (!fresh) {
      throw ParseError(line, t.column,
                       "duplicate name '" + t.text + "' (first declared on line " +
                           std::to_string(it->second) + ")");
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    std::vector<Token> t = detail::tokenize(line, line_no);
    if (t.empty()) continue;
    auto expect = [&](std::size_t i, std::string_view what, bool name) -> const Token& {
      if (i >= t.size()) {
        throw ParseError(line_no, line.size() + 1, "expected " + std::string(what));
      }
      bool ok = name ? detail::is_name_char(t[i].text[0]) : t[i].text == what;
      if (!ok) {
        throw ParseError(line_no, t[i].column,
                         "expected " + std::string(what) + ", found '" + t[i].text + "'");
      }
      return t[i];
    };
    auto no_trailing = [&](std::size_t i) {
      if (i < t.size()) throw ParseError(line_no, t[i].column, "unexpected '" + t[i].text + "'");
    };

    if (t[0].text == "vertex") {
      const Token& name = expect(1, "vertex name", true);
      no_trailing(2);
      declare(name, line_no);
      vertex_ids.emplace(name.text, static_cast<VertexId>(vertices.size()));
      vertices.push_back(name.text);
    } else if (t[0].text == "edge" || t[0].text == "bundle") {
      detail::PendingBundle b;
      b.line = line_no;
      b.name = expect(1, "edge name", true);
      expect(2, ":", false);
      b.source = expect(3, "source vertex", true);
      expect(4, "->", false);
      b.range = expect(5, "range vertex", true);
      if (t[0].text == "bundle") {
        expect(6, "*", false);
        const Token& m = expect(7, "multiplicity", true);
        if (m.text == "inf") {
          b.multiplicity = Multiplicity::omega();
        } else {
          std::uint64_t n = 0;
          auto [p, ec] = std::from_chars(m.text.data(), m.text.data() + m.text.size(), n);
          if (ec != std::errc{} || p != m.text.data() + m.text.size() || n == 0) {
            throw ParseError(line_no, m.column,
                             "multiplicity must be 'inf' or a positive integer, found '" + m.text +
                                 "'");
          }
          b.multiplicity = Multiplicity::finite(n);
        }
        no_trailing(8);
      } else {
        no_trailing(6);
      }
      declare(b.name, line_no);
      pending.push_back(std::move(b));
    } else {
      throw ParseError(line_no, t[0].column, "unknown declaration '" + t[0].text + "'");
    }
  }

  std::vector<Bundle> bundles;
  for (const auto& p : pending) {
    auto endpoint = [&](const Token& tok) {
      auto it = vertex_ids.find(tok.text);
      if (it == vertex_ids.end()) {
        throw ParseError(p.line, tok.column, "undeclared vertex '" + tok.text + "'");
      }
      return it->second;
    };
    bundles.push_back({p.name.text, endpoint(p.source), endpoint(p.range), p.multiplicity});
  }
  return Graph(std::move(vertices), std::move(bundles));
}

inline Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline std::string serialize_graph(const Graph& g) {
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out += "vertex " + g.vertex_name(v) + "\n";
  for (const Bundle& b : g.bundles()) {
    const bool single = !b.multiplicity.is_omega() && b.multiplicity.value() == 1;
    out += single ? "edge " : "bundle ";
    out += b.name + ": " + g.vertex_name(b.source) + " -> " + g.vertex_name(b.range);
    if (b.multiplicity.is_omega()) {
      out += " * inf";
    } else if (!single) {
      out += " * " + std::to_string(b.multiplicity.value());
    }
    out += "\n";
  }
  return out;
}

}  // namespace lpa

#endif  // LPA_GRAPH_IO_HPP
