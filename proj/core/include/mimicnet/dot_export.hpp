#pragma once

#include <string>

#include "mimicnet/graph_io.hpp"

namespace mimicnet {

struct DotOptions {
  std::string graph_name = "G";
  /// Scale applied to coordinates before pinning.
  long scale = 1;
};

/// Graphviz rendering. Terminals are boxes; coordinates, when every vertex
/// has one, are pinned with pos="x,y!". Document metadata adds styling:
/// "heavy" emphasises edges of that weight and kind "dblexp" groups x, Q_0,
/// U and W into ranks.
std::string export_dot(const GraphDocument& doc, const DotOptions& options = {});

}  // namespace mimicnet
