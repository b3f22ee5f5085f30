#include "mimicnet/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "mimicnet/errors.hpp"

namespace mimicnet {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool valid_label(std::string_view label) {
  return !label.empty() && std::none_of(label.begin(), label.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  });
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank, non-comment line; false at end of input.
  bool next() {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) {
        pos_ = text_.size() + 1;
        return false;
      }
      const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
      line_ = text_.substr(pos_, end - pos_);
      if (!line_.empty() && line_.back() == '\r') line_.remove_suffix(1);
      pos_ = end + 1;
      ++number_;
      const auto fields = split(line_);
      if (fields.empty() || fields.front().front() == '#') continue;
      fields_ = fields;
      return true;
    }
    return false;
  }

  const std::vector<std::string_view>& fields() const { return fields_; }
  std::string_view line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, "line " + std::to_string(number_) + ": " + what);
  }

  void require(const std::string& what) {
    if (!next()) throw Error(ErrorCode::Parse, "unexpected end of input, expected " + what);
  }

  std::size_t count(std::string_view keyword) {
    require(std::string(keyword));
    if (fields_.size() != 2 || fields_[0] != keyword) fail("expected '" + std::string(keyword) + " <count>'");
    const std::string_view n = fields_[1];
    if (n.empty() || n.size() > 12 ||
        !std::all_of(n.begin(), n.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail("field 2: malformed count '" + std::string(n) + "'");
    }
    return static_cast<std::size_t>(std::stoull(std::string(n)));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
  std::string_view line_;
  std::vector<std::string_view> fields_;
};

}  // namespace

Rational parse_coordinate(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const Weight magnitude = Weight::parse(body);
  Rational out = magnitude.value();
  if (negative) out = -out;
  return out;
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::optional<std::string> GraphDocument::meta_value(const std::string& key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  return std::nullopt;
}

bool GraphDocument::has_coordinates() const {
  return !coordinates.empty() &&
         std::all_of(coordinates.begin(), coordinates.end(), [](const auto& c) { return c.has_value(); });
}

GraphDocument GraphDocument::from_graph(const TerminalGraph& g) {
  GraphDocument doc;
  doc.labels.assign(g.labels().begin(), g.labels().end());
  doc.coordinates.assign(g.vertex_count(), std::nullopt);
  doc.terminals.assign(g.terminals().begin(), g.terminals().end());
  for (const Edge& e : g.edges()) doc.edges.push_back(EdgeRecord{e.u, e.v, e.weight});
  return doc;
}

GraphDocument GraphDocument::from_plane_graph(const PlaneGraph& p, std::span<const Weight> weights,
                                              std::vector<std::string> labels) {
  if (weights.size() != p.edge_count() || labels.size() != p.vertex_count()) {
    throw Error(ErrorCode::Parameter, "weights or labels do not match the plane graph");
  }
  GraphDocument doc;
  doc.labels = std::move(labels);
  for (const Point& pt : p.points()) doc.coordinates.emplace_back(pt);
  for (EdgeId e = 0; e < p.edge_count(); ++e) {
    doc.edges.push_back(EdgeRecord{p.edge(e).u, p.edge(e).v, weights[e]});
  }
  return doc;
}

TerminalGraph GraphDocument::to_graph() const {
  if (terminals.size() < 2) {
    throw Error(ErrorCode::Parse, "document lists " + std::to_string(terminals.size()) +
                                      " terminals, a terminal graph needs at least 2");
  }
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(Edge{e.u, e.v, e.weight});
  return TerminalGraph(labels, terminals, std::move(out));
}

std::string serialize(const GraphDocument& doc) {
  std::ostringstream os;
  os << "mimicnet-graph " << kGraphFormatVersion << '\n';
  for (const auto& [k, v] : doc.meta) os << "meta " << k << ' ' << v << '\n';
  os << "vertices " << doc.labels.size() << '\n';
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    os << "v " << doc.labels[i];
    if (i < doc.coordinates.size() && doc.coordinates[i]) {
      os << ' ' << format_rational(doc.coordinates[i]->x) << ' '
         << format_rational(doc.coordinates[i]->y);
    }
    os << '\n';
  }
  os << "terminals " << doc.terminals.size() << '\n';
  for (VertexId t : doc.terminals) os << "t " << doc.labels.at(t) << '\n';
  os << "edges " << doc.edges.size() << '\n';
  for (const auto& e : doc.edges) {
    os << "e " << doc.labels.at(e.u) << ' ' << doc.labels.at(e.v) << ' ' << e.weight.to_string() << '\n';
  }
  os << "end\n";
  return os.str();
}

GraphDocument parse_document(std::string_view text) {
  LineReader in(text);
  GraphDocument doc;
  in.require("header");
  if (in.fields().size() != 2 || in.fields()[0] != "mimicnet-graph") {
    in.fail("expected header 'mimicnet-graph " + std::to_string(kGraphFormatVersion) + "'");
  }
  if (in.fields()[1] != std::to_string(kGraphFormatVersion)) {
    in.fail("unsupported format version '" + std::string(in.fields()[1]) + "'");
  }

  // Meta lines, then the vertex count.
  std::unordered_map<std::string, VertexId> index;
  std::size_t vertices = 0;
  while (true) {
    in.require("'vertices'");
    const auto& f = in.fields();
    if (f[0] == "meta") {
      if (f.size() < 3) in.fail("expected 'meta <key> <value>'");
      const std::string_view line = in.line();
      const auto at = static_cast<std::size_t>(f[2].data() - line.data());
      std::string_view value = line.substr(at);
      while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.remove_suffix(1);
      doc.meta.emplace_back(std::string(f[1]), std::string(value));
      continue;
    }
    if (f.size() != 2 || f[0] != "vertices") in.fail("expected 'vertices <count>'");
    const std::string_view n = f[1];
    if (!std::all_of(n.begin(), n.end(), [](char c) { return c >= '0' && c <= '9'; }) || n.size() > 12) {
      in.fail("field 2: malformed count '" + std::string(n) + "'");
    }
    vertices = std::stoull(std::string(n));
    break;
  }
  for (std::size_t i = 0; i < vertices; ++i) {
    in.require("vertex line");
    const auto& f = in.fields();
    if (f[0] != "v" || (f.size() != 2 && f.size() != 4)) in.fail("expected 'v <label> [<x> <y>]'");
    const std::string label(f[1]);
    if (!valid_label(label)) in.fail("field 2: invalid label");
    if (!index.emplace(label, i).second) in.fail("field 2: duplicate vertex label '" + label + "'");
    doc.labels.push_back(label);
    if (f.size() == 4) {
      try {
        doc.coordinates.emplace_back(Point{parse_coordinate(f[2]), parse_coordinate(f[3])});
      } catch (const Error& e) {
        in.fail("fields 3-4: " + std::string(e.what()));
      }
    } else {
      doc.coordinates.emplace_back(std::nullopt);
    }
  }

  const std::size_t terminals = in.count("terminals");
  for (std::size_t i = 0; i < terminals; ++i) {
    in.require("terminal line");
    const auto& f = in.fields();
    if (f.size() != 2 || f[0] != "t") in.fail("expected 't <label>'");
    const auto it = index.find(std::string(f[1]));
    if (it == index.end()) in.fail("field 2: unknown terminal '" + std::string(f[1]) + "'");
    if (std::find(doc.terminals.begin(), doc.terminals.end(), it->second) != doc.terminals.end()) {
      in.fail("field 2: terminal '" + std::string(f[1]) + "' listed twice");
    }
    doc.terminals.push_back(it->second);
  }

  const std::size_t edges = in.count("edges");
  for (std::size_t i = 0; i < edges; ++i) {
    in.require("edge line");
    const auto& f = in.fields();
    if (f.size() != 4 || f[0] != "e") in.fail("expected 'e <u> <v> <p/q>'");
    const auto u = index.find(std::string(f[1]));
    if (u == index.end()) in.fail("field 2: unknown vertex '" + std::string(f[1]) + "'");
    const auto v = index.find(std::string(f[2]));
    if (v == index.end()) in.fail("field 3: unknown vertex '" + std::string(f[2]) + "'");
    if (u->second == v->second) in.fail("self-loop at '" + std::string(f[1]) + "'");
    try {
      doc.edges.push_back(GraphDocument::EdgeRecord{u->second, v->second, Weight::parse(f[3])});
    } catch (const Error& e) {
      in.fail("field 4: " + std::string(e.what()));
    }
  }
  in.require("'end'");
  if (in.fields().size() != 1 || in.fields()[0] != "end") in.fail("expected 'end'");
  if (in.next()) in.fail("content after 'end'");
  return doc;
}

std::string serialize_graph(const TerminalGraph& g) { return serialize(GraphDocument::from_graph(g)); }

TerminalGraph parse_graph(std::string_view text) { return parse_document(text).to_graph(); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::NotFound, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::NotFound, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::NotFound, "failed writing '" + path.string() + "'");
}

}  // namespace mimicnet
