#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mimicnet/profile.hpp"
#include "mimicnet/report.hpp"
#include "mimicnet/weight.hpp"

namespace mimicnet {

struct PlanarInstance;

enum class RowMode { All, UniqueOnly, ImportantOnly };

RowMode parse_row_mode(const std::string& text);
std::string to_string(RowMode mode);

/// Cutset-edge incidence matrix: one row per selected bipartition, one column
/// per edge, entry 1 iff the edge crosses that bipartition's canonical cut.
struct IncidenceMatrix {
  std::size_t cols = 0;
  std::vector<Bipartition> row_bipartitions;
  std::vector<bool> row_unique;
  std::vector<std::vector<std::uint8_t>> rows;
  /// Non-fatal notes, e.g. rows dropped for non-uniqueness.
  std::vector<std::string> warnings;

  std::size_t row_count() const noexcept { return rows.size(); }
  /// Header "rows cols", then one line of 0/1 characters per row.
  std::string dump() const;
};

/// Builds the matrix from a profile of g.
///
/// - All: every bipartition.
/// - UniqueOnly: drops rows whose minimum cut is not unique, with a warning.
/// - ImportantOnly: keeps bipartitions whose S side excludes the second
///   terminal (the south face of a planar instance, whose first terminal is
///   the north face).
///
/// With `strict`, any non-unique row that would be kept raises a
/// Precondition error naming the offending bipartitions.
IncidenceMatrix build_incidence_matrix(const TerminalGraph& g, const CutProfile& profile,
                                       RowMode mode, bool strict = false);

/// Rank over the rationals by fraction-free (Bareiss) elimination on integers.
std::size_t exact_rank(std::vector<std::vector<BigInt>> matrix);
std::size_t exact_rank(const IncidenceMatrix& m);

/// Rank over GF(2), reported for diagnostics.
std::size_t rank_mod2(const IncidenceMatrix& m);

/// Checks that rows of the important bipartitions, ordered by reversed
/// signature, against the weight-C apex-fan columns, ordered by leaf index,
/// form an identity matrix of size 2^(k-2).
VerificationReport verify_identity_submatrix(const PlanarInstance& inst, const IncidenceMatrix& m);

/// Full rank certificate for a planar instance: the identity submatrix, exact
/// rank of the important rows equal to 2^(k-2), and rank of all unique rows
/// at least 2^(k-2).
VerificationReport verify_rank_certificate(const PlanarInstance& inst, Parallelism p = {});

}  // namespace mimicnet
