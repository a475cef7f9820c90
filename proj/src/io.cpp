#include "pdlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "pdlab/constructors.hpp"
#include "pdlab/error.hpp"

namespace pdlab {

namespace {

constexpr std::size_t kGraph6MaxOrder = 62;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class SourceParser {
 public:
  explicit SourceParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = source();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return g;
  }

 private:
  Graph source() {
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name.empty()) throw ParseError(pos_, "expected a family, transform, g6: or file:");
    if (name == "g6" && peek(':')) {
      ++pos_;
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && text_[pos_] >= 63 && text_[pos_] <= 126) ++pos_;
      try {
        return parse_graph6(text_.substr(begin, pos_ - begin));
      } catch (const ParseError& e) {
        throw ParseError(begin + e.position(), "graph6: " + strip_position(e.what()));
      }
    }
    if (name == "file" && peek(':')) {
      ++pos_;
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')' && text_[pos_] != ',') ++pos_;
      if (pos_ == begin) throw ParseError(begin, "empty file path");
      return read_graph_file(std::string(text_.substr(begin, pos_ - begin)));
    }
    if (peek('(')) {
      ++pos_;
      Graph result;
      if (name == "prod") {
        Graph a = source();
        expect(',');
        Graph b = source();
        result = cartesian_product(a, b);
      } else {
        const auto kind = transform_kind(name, start);
        result = apply_transform(kind, source());
      }
      expect(')');
      return result;
    }
    std::vector<std::size_t> params;
    if (peek(':')) {
      ++pos_;
      params.push_back(number());
      // A comma continues the parameter list only when a digit follows;
      // otherwise it separates the operands of prod(...).
      while (peek(',') && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        params.push_back(number());
      }
    }
    try {
      return make_family(family_spec(name, std::move(params), start));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::invalid_argument) throw;
      throw ParseError(start, e.what());
    }
  }

  static std::string strip_position(const std::string& what) {
    const auto at = what.rfind(" at position ");
    return at == std::string::npos ? what : what.substr(0, at);
  }

  static TransformKind transform_kind(const std::string& name, std::size_t at) {
    if (name == "mu" || name == "mycielskian") return TransformKind::mycielskian;
    if (name == "shadow") return TransformKind::shadow;
    if (name == "central") return TransformKind::central;
    if (name == "middle") return TransformKind::middle;
    throw ParseError(at, "unknown transform '" + name + "'");
  }

  static FamilySpec family_spec(const std::string& name, std::vector<std::size_t> params,
                                std::size_t at) {
    static const std::pair<const char*, FamilyKind> kFamilies[] = {
        {"path", FamilyKind::path},
        {"cycle", FamilyKind::cycle},
        {"complete", FamilyKind::complete},
        {"star", FamilyKind::star},
        {"wheel", FamilyKind::wheel},
        {"kpartite", FamilyKind::complete_multipartite},
        {"bipartite", FamilyKind::complete_bipartite},
        {"hgraph", FamilyKind::h_graph},
        {"spider", FamilyKind::spider},
    };
    for (const auto& [label, kind] : kFamilies)
      if (name == label) return {kind, std::move(params)};
    throw ParseError(at, "unknown family '" + name + "'");
  }

  std::string identifier() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  std::size_t number() {
    const std::size_t begin = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > kMaxVertices * kMaxVertices) throw ParseError(begin, "number too large");
      ++pos_;
    }
    if (pos_ == begin) throw ParseError(pos_, "expected a number");
    return value;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError(0, "empty graph6 line");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError(i, "byte outside graph6 range 63..126");
  }
  if (line[0] == 126) throw ParseError(0, "extended-size graph6 header is not supported");
  const std::size_t n = static_cast<std::size_t>(line[0] - 63);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() < 1 + bytes) throw ParseError(line.size(), "truncated graph6 bit field");
  if (line.size() > 1 + bytes) throw ParseError(1 + bytes, "trailing bytes after graph6 bit field");
  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit_at = [&](std::size_t index) {
    const auto byte = static_cast<unsigned>(line[1 + index / 6] - 63);
    return (byte >> (5 - index % 6)) & 1u;
  };
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (bit_at(k)) edges.push_back({i, j});
  for (; k < bytes * 6; ++k)
    if (bit_at(k)) throw ParseError(1 + k / 6, "nonzero graph6 padding bits");
  return build_graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw Error(ErrorCode::cap_exceeded, "graph6 small format supports n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    for (const auto& t : tokens)
      if (!all_digits(t))
        throw ParseError(line_offset, "edge list line " + std::to_string(line_no) +
                                          ": expected non-negative integers");
    if (!n) {
      if (tokens.size() != 1)
        throw ParseError(line_offset, "edge list must start with the vertex count");
      n = std::stoul(tokens[0]);
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError(line_offset,
                       "edge list line " + std::to_string(line_no) + ": expected 'u v'");
    edges.push_back({static_cast<Vertex>(std::stoul(tokens[0])),
                     static_cast<Vertex>(std::stoul(tokens[1]))});
  }
  if (!n) throw ParseError(0, "edge list is empty");
  return build_graph(*n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (all_digits(t)) return parse_edge_list(text);
    return parse_graph6(t);
  }
  throw Error(ErrorCode::io, "'" + path + "' holds no graph");
}

Graph parse_source(std::string_view expr) { return SourceParser(trim(expr)).parse(); }

std::string emit_dot(const Graph& g, const PropagationTrace* trace) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << g.display_name(v) << "\"";
    if (trace != nullptr) {
      if (trace->seed.contains(v))
        out << ", style=filled, fillcolor=black, fontcolor=white";
      else if (trace->dominated && trace->dominated->contains(v))
        out << ", peripheries=2";
      if (!trace->final.contains(v)) out << ", style=dashed, color=gray";
    }
    out << "];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  if (trace != nullptr)
    for (const ForceStep& s : trace->steps)
      out << "  " << s.forcer << " -- " << s.forced << " [dir=forward, color=red, constraint=false, label=\""
          << s.round << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string format_vertex_set(const VertexSet& s) {
  std::ostringstream out;
  bool first = true;
  for (Vertex v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  return out.str();
}

VertexSet parse_vertex_list(std::string_view text) {
  VertexSet out;
  std::size_t pos = 0;
  text = trim(text);
  if (text.empty()) return out;
  while (pos <= text.size()) {
    const std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == begin) throw ParseError(pos, "expected a vertex id");
    const auto v = std::stoul(std::string(text.substr(begin, pos - begin)));
    if (v >= kMaxVertices) throw ParseError(begin, "vertex id out of range");
    out.insert(static_cast<Vertex>(v));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
  return out;
}

std::string render_trace(const Graph& g, const PropagationTrace& trace) {
  std::ostringstream out;
  out << "process: " << (trace.dominated ? "power-domination" : "zero-forcing") << "\n";
  out << "seed: {" << format_vertex_set(trace.seed) << "}\n";
  if (trace.dominated) out << "dominated: {" << format_vertex_set(*trace.dominated) << "}\n";
  std::size_t round = 0;
  for (const ForceStep& s : trace.steps) {
    if (s.round != round) {
      out << (round ? "\n" : "") << "round " << s.round << ":";
      round = s.round;
    }
    out << " " << s.forcer << "->" << s.forced;
  }
  if (round) out << "\n";
  out << "final: {" << format_vertex_set(trace.final) << "} (" << trace.final.count() << "/"
      << g.order() << ")\n";
  if (!trace.complete())
    out << "unmonitored: {" << format_vertex_set(g.vertices() - trace.final) << "}\n";
  out << "chains:";
  for (const auto& chain : forcing_chains(trace)) {
    out << " (";
    for (std::size_t i = 0; i < chain.size(); ++i) out << (i ? " " : "") << chain[i];
    out << ")";
  }
  out << "\n";
  return out.str();
}

}  // namespace pdlab
