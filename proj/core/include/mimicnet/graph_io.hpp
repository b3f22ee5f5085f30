#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mimicnet/plane_graph.hpp"
#include "mimicnet/terminal_graph.hpp"
#include "mimicnet/weight.hpp"

namespace mimicnet {

inline constexpr int kGraphFormatVersion = 1;

/// Text form of a graph:
///
///   mimicnet-graph 1
///   meta <key> <value>        (optional, any number)
///   vertices N
///   v <label> [<x> <y>]       (N lines; coordinates are rationals "p/q")
///   terminals K
///   t <label>                 (K lines, in terminal order)
///   edges M
///   e <u-label> <v-label> <p/q>
///   end
///
/// Labels are non-empty and contain no whitespace. Weights always carry an
/// explicit denominator.
struct GraphDocument {
  struct EdgeRecord {
    VertexId u = 0;
    VertexId v = 0;
    Weight weight;
  };

  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> labels;
  std::vector<std::optional<Point>> coordinates;
  std::vector<VertexId> terminals;
  std::vector<EdgeRecord> edges;

  std::optional<std::string> meta_value(const std::string& key) const;
  bool has_coordinates() const;

  static GraphDocument from_graph(const TerminalGraph& g);
  static GraphDocument from_plane_graph(const PlaneGraph& p, std::span<const Weight> weights,
                                        std::vector<std::string> labels);
  /// Throws Parse if the document has fewer than two terminals.
  TerminalGraph to_graph() const;
};

std::string serialize(const GraphDocument& doc);
GraphDocument parse_document(std::string_view text);

std::string serialize_graph(const TerminalGraph& g);
TerminalGraph parse_graph(std::string_view text);

/// Rational coordinate text: "p/q" with optional leading '-'.
Rational parse_coordinate(std::string_view text);
std::string format_rational(const Rational& value);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mimicnet
