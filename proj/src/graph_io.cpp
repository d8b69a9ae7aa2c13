#include "graphprod/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "graphprod/error.hpp"

namespace graphprod {

bool is_valid_vertex_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.')
      return false;
  return true;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  std::vector<LabeledGraph::Vertex> vertices;
  std::vector<LabeledGraph::Edge> edges;
  std::map<std::string, VertexIndex, std::less<>> declared;
  std::set<std::pair<std::string, std::string>> seen_edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;

    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;

    const Token& kw = tokens[0];
    auto check_name = [&](const Token& t) {
      if (!is_valid_vertex_name(t.text))
        throw ParseError("invalid vertex name '" + std::string(t.text) + "'",
                         line_no, t.column);
    };
    auto check_arity = [&](std::size_t n) {
      if (tokens.size() < n)
        throw ParseError("'" + std::string(kw.text) + "' expects " +
                             std::to_string(n - 1) + " arguments",
                         line_no, line.size() + 1);
      if (tokens.size() > n)
        throw ParseError("unexpected token '" + std::string(tokens[n].text) +
                             "'",
                         line_no, tokens[n].column);
    };

    if (kw.text == "vertex") {
      check_arity(3);
      check_name(tokens[1]);
      std::string name(tokens[1].text);
      if (declared.count(name))
        throw ParseError("duplicate vertex '" + name + "'", line_no,
                         tokens[1].column);
      try {
        vertices.push_back({name, AbelianLabel::parse(tokens[2].text)});
      } catch (const ParseError& e) {
        throw e.relocated(line_no, tokens[2].column - 1);
      }
      declared.emplace(name, vertices.size() - 1);
    } else if (kw.text == "edge") {
      check_arity(3);
      for (std::size_t k : {1, 2}) {
        check_name(tokens[k]);
        if (!declared.count(tokens[k].text))
          throw ParseError("undeclared vertex '" +
                               std::string(tokens[k].text) + "'",
                           line_no, tokens[k].column);
      }
      std::string u(tokens[1].text), v(tokens[2].text);
      if (u == v)
        throw ParseError("self-loop at '" + u + "'", line_no, tokens[2].column);
      auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
      if (!seen_edges.insert(key).second)
        throw ParseError("duplicate edge '" + u + "' -- '" + v + "'", line_no,
                         kw.column);
      edges.emplace_back(std::move(u), std::move(v));
    } else {
      throw ParseError("unknown directive '" + std::string(kw.text) + "'",
                       line_no, kw.column);
    }
  }
  if (vertices.empty()) throw ParseError("graph has no vertices", line_no, 1);
  if (vertices.size() > kMaxVertices)
    throw ParseError("graph has more than " + std::to_string(kMaxVertices) +
                         " vertices",
                     line_no, 1);
  return LabeledGraph(std::move(vertices), edges);
}

LabeledGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize(const LabeledGraph& g) {
  std::string out;
  for (const auto& v : g.vertices())
    out += "vertex " + v.name + " " + v.label.to_string() + "\n";
  for (auto [i, j] : g.edge_indices())
    out += "edge " + g.name(i) + " " + g.name(j) + "\n";
  return out;
}

}  // namespace graphprod
