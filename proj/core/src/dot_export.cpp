#include "mimicnet/dot_export.hpp"

#include <map>
#include <sstream>

namespace mimicnet {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

// Three decimals, truncated toward zero; display only.
std::string decimal(const Rational& value) {
  Rational v = abs(value) * 1000;
  BigInt scaled = v.get_num() / v.get_den();
  std::string digits = scaled.get_str();
  while (digits.size() < 4) digits.insert(digits.begin(), '0');
  std::string out = (sgn(value) < 0 && scaled != 0) ? "-" : "";
  out += digits.substr(0, digits.size() - 3) + "." + digits.substr(digits.size() - 3);
  return out;
}

char layer_of(const std::string& label) {
  return label.empty() ? '?' : label.front();
}

}  // namespace

std::string export_dot(const GraphDocument& doc, const DotOptions& options) {
  std::ostringstream os;
  const auto kind = doc.meta_value("kind").value_or("");
  std::optional<Weight> heavy;
  if (auto h = doc.meta_value("heavy")) heavy = Weight::parse(*h);
  const bool pinned = doc.has_coordinates();

  std::vector<bool> terminal(doc.labels.size(), false);
  for (VertexId t : doc.terminals) terminal[t] = true;

  os << "graph " << quote(options.graph_name) << " {\n";
  if (!kind.empty()) os << "  label=" << quote(kind) << ";\n";
  if (kind == "dblexp") os << "  rankdir=LR;\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t v = 0; v < doc.labels.size(); ++v) {
    os << "  " << quote(doc.labels[v]) << " [";
    os << (terminal[v] ? "shape=box, style=filled, fillcolor=lightgray" : "shape=circle");
    if (pinned) {
      const Point& p = *doc.coordinates[v];
      os << ", pos=\"" << decimal(p.x * options.scale) << "," << decimal(p.y * options.scale) << "!\"";
    }
    os << "];\n";
  }
  if (kind == "dblexp") {
    std::map<char, std::vector<std::string>> ranks;
    for (const auto& label : doc.labels) ranks[layer_of(label)].push_back(label);
    for (const auto& [layer, members] : ranks) {
      os << "  { rank=same;";
      for (const auto& m : members) os << ' ' << quote(m) << ';';
      os << " }\n";
    }
  }
  for (const auto& e : doc.edges) {
    os << "  " << quote(doc.labels[e.u]) << " -- " << quote(doc.labels[e.v]) << " [tooltip="
       << quote(e.weight.to_string());
    if (heavy && e.weight == *heavy) {
      os << ", penwidth=3, color=red";
    } else if (e.weight.is_zero()) {
      os << ", style=dotted";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mimicnet
