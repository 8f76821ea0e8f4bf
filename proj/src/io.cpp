#include "kmin/io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "kmin/error.hpp"

namespace kmin {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Integer tokens of all non-comment lines.
std::vector<long long> integer_tokens(std::string_view text) {
  std::vector<long long> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    std::istringstream tokens{std::string(body)};
    std::string token;
    while (tokens >> token) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        fail(ErrorCode::Parse, "expected an integer, got '" + token + "'");
      out.push_back(value);
    }
  }
  return out;
}

void check_count(long long value, const char* what) {
  if (value < 0 || value > 1'000'000) fail(ErrorCode::Parse, std::string("bad ") + what);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    fail(ErrorCode::TooLarge, "graph6 supports at most 258047 vertices");
  }
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) fail(ErrorCode::Parse, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) fail(ErrorCode::Parse, "graph6 byte out of range");
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') fail(ErrorCode::Parse, "unsupported graph6 size prefix");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t needed = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos != needed)
    fail(ErrorCode::Parse, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                               std::to_string(needed));
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long long> t = integer_tokens(text);
  if (t.size() < 2) fail(ErrorCode::Parse, "edge list needs an 'n m' header");
  check_count(t[0], "vertex count");
  check_count(t[1], "edge count");
  if (t.size() != 2 + 2 * static_cast<std::size_t>(t[1]))
    fail(ErrorCode::Parse, "edge list declares " + std::to_string(t[1]) + " edges but has " +
                               std::to_string((t.size() - 2) / 2));
  std::vector<Edge> edges;
  for (std::size_t i = 2; i < t.size(); i += 2) {
    if (t[i] < 0 || t[i] >= t[0] || t[i + 1] < 0 || t[i + 1] >= t[0]) fail(ErrorCode::Parse, "edge end out of range");
    edges.push_back(Edge::of(static_cast<Vertex>(t[i]), static_cast<Vertex>(t[i + 1])));
  }
  try {
    return Graph(static_cast<int>(t[0]), edges);
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

std::string to_multi_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edges().size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.multiplicity << '\n';
  return out.str();
}

MultiGraph parse_multi_edge_list(std::string_view text) {
  std::vector<long long> t = integer_tokens(text);
  if (t.size() < 2) fail(ErrorCode::Parse, "multigraph edge list needs an 'n m' header");
  check_count(t[0], "vertex count");
  check_count(t[1], "edge count");
  if (t.size() != 2 + 3 * static_cast<std::size_t>(t[1])) fail(ErrorCode::Parse, "multigraph edge count mismatch");
  std::vector<MultiEdge> edges;
  for (std::size_t i = 2; i < t.size(); i += 3) {
    if (t[i] < 0 || t[i] >= t[0] || t[i + 1] < 0 || t[i + 1] >= t[0]) fail(ErrorCode::Parse, "edge end out of range");
    if (t[i + 2] < 1 || t[i + 2] > 1'000'000) fail(ErrorCode::Parse, "multiplicity must be positive");
    edges.push_back({static_cast<Vertex>(t[i]), static_cast<Vertex>(t[i + 1]), static_cast<int>(t[i + 2])});
  }
  try {
    return MultiGraph(static_cast<int>(t[0]), edges);
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

std::string to_json(const LabeledGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.graph.order();
  nlohmann::json edges = nlohmann::json::array();
  for (Edge e : g.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  j["labels"] = g.labels;
  return j.dump();
}

LabeledGraph parse_json_graph(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    const int n = j.at("n").get<int>();
    if (n < 0) fail(ErrorCode::Parse, "negative vertex count");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
      if (u < 0 || u >= n || v < 0 || v >= n) fail(ErrorCode::Parse, "edge end out of range");
      edges.push_back(Edge::of(u, v));
    }
    LabeledGraph out{Graph(n, edges), {}};
    if (j.contains("labels")) out.labels = j["labels"].get<std::vector<std::string>>();
    if (out.labels.empty())
      for (int i = 0; i < n; ++i) out.labels.push_back(std::to_string(i));
    if (static_cast<int>(out.labels.size()) != n) fail(ErrorCode::Parse, "label count differs from n");
    return out;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("bad JSON graph: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    fail(ErrorCode::Parse, e.what());
  }
}

GraphFormat parse_format(std::string_view name) {
  if (name == "auto") return GraphFormat::Auto;
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "edges" || name == "edge-list") return GraphFormat::EdgeList;
  if (name == "json") return GraphFormat::Json;
  fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

LabeledGraph parse_graph(std::string_view text, GraphFormat format) {
  std::string_view body = trim(text);
  if (format == GraphFormat::Auto) {
    if (body.starts_with("{")) {
      format = GraphFormat::Json;
    } else {
      std::string_view first = body.substr(0, body.find('\n'));
      std::istringstream in{std::string(first)};
      long long a = 0, b = 0;
      std::string rest;
      format = (in >> a >> b) && !(in >> rest) ? GraphFormat::EdgeList : GraphFormat::Graph6;
    }
  }
  auto plain = [](Graph g) {
    LabeledGraph out{std::move(g), {}};
    for (int i = 0; i < out.graph.order(); ++i) out.labels.push_back(std::to_string(i));
    return out;
  };
  switch (format) {
    case GraphFormat::Json: return parse_json_graph(body);
    case GraphFormat::EdgeList: return plain(parse_edge_list(body));
    default: return plain(from_graph6(body));
  }
}

std::vector<std::string> graph6_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = trim(line);
    if (body.starts_with(">>graph6<<")) body.remove_prefix(10);
    if (body.empty() || body.front() == '#') continue;
    out.emplace_back(body);
  }
  return out;
}

}  // namespace kmin
