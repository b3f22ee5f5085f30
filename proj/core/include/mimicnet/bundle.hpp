#pragma once

#include <filesystem>
#include <string>

#include "mimicnet/dblexp_instance.hpp"
#include "mimicnet/graph_io.hpp"
#include "mimicnet/planar_instance.hpp"

namespace mimicnet {

/// An instance bundle is a directory with fixed member names. Planar bundles
/// hold all three; doubly exponential bundles have no drawing and omit
/// dual.graph.
inline constexpr const char* kDualFile = "dual.graph";
inline constexpr const char* kPrimalFile = "primal.graph";
inline constexpr const char* kMetaFile = "meta";

enum class BundleKind { Planar, DblExp };

BundleKind bundle_kind(const std::filesystem::path& dir);
std::string to_string(BundleKind kind);

/// Labels of the drawn graph: "v" for the root, "v<index>" for branching
/// vertices, "w" for the apex and "x<n>" for crossings.
std::vector<std::string> planar_dual_labels(const PlanarInstance& inst);

GraphDocument planar_dual_document(const PlanarInstance& inst);
/// Primal graph with face-centroid coordinates.
GraphDocument planar_primal_document(const PlanarInstance& inst);
GraphDocument dblexp_document(const DblExpInstance& inst);

void write_planar_bundle(const PlanarInstance& inst, const std::filesystem::path& dir);
void write_dblexp_bundle(const DblExpInstance& inst, const std::filesystem::path& dir);

/// Rebuilds the drawing from dual.graph and meta, re-traces its faces and
/// requires primal.graph to be exactly its dual.
PlanarInstance read_planar_bundle(const std::filesystem::path& dir);
/// Requires primal.graph to be exactly the construction named in meta.
DblExpInstance read_dblexp_bundle(const std::filesystem::path& dir);

}  // namespace mimicnet
