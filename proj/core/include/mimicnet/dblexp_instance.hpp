#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mimicnet/parallel.hpp"
#include "mimicnet/report.hpp"
#include "mimicnet/terminal_graph.hpp"
#include "mimicnet/weight.hpp"

namespace mimicnet {

/// Default cap on |W| = binom(l, l/2).
inline const BigInt kDefaultMaxOuter{10000};

struct EllParity {
  BigInt ell;
  bool even = false;
};

/// l = binom(2r+1, r) and its parity.
EllParity check_ell_even(std::size_t r);

/// Four-layer instance: terminals x and q_1..q_{2r+1}, a middle vertex u_S for
/// every r-subset S of Q_0 = {q_1..q_{2r+1}}, and an outer vertex w_Z for every
/// (l/2)-subset Z of the middle layer.
///
/// Terminal order is (x, q_1, ..., q_{2r+1}), so canonical bipartitions keep x
/// in S and the important ones are exactly those with |S| = r+1.
struct DblExpInstance {
  std::size_t r = 0;
  std::size_t ell = 0;
  Weight alpha;
  /// middle_subsets[i] lists the 0-based q indices of S for u[i], sorted;
  /// subsets are in lexicographic order.
  std::vector<std::vector<std::size_t>> middle_subsets;
  /// outer_subsets[i] lists the 0-based middle positions of Z for w[i].
  std::vector<std::vector<std::size_t>> outer_subsets;

  TerminalGraph graph{{"a", "b"}, {0, 1}, {}};
  VertexId x = 0;
  std::vector<VertexId> q;
  std::vector<VertexId> u;
  std::vector<VertexId> w;

  std::size_t k() const noexcept { return 2 * r + 2; }
  /// Weight of u_S -- q for q in S: (1 + 1/r + 1/r^2) alpha.
  Weight heavy_cost() const;
  /// Weight of x -- w_Z: l/2 - 1.
  Weight outer_cost() const;
};

/// Rejects r not congruent to 2 mod 4 and |W| above max_outer. alpha
/// defaults to r^2 l |W| + 1 and must exceed r^2 l |W| when given.
DblExpInstance generate_dblexp(std::size_t r, std::optional<Weight> alpha = std::nullopt,
                               const BigInt& max_outer = kDefaultMaxOuter);

/// Rebuilds the bookkeeping of an instance from its graph, checking that the
/// graph is exactly the construction for (r, alpha).
DblExpInstance adopt_dblexp(TerminalGraph graph, std::size_t r, const Weight& alpha);

/// Balance of u_{S'} for S = S0 + x: weight into S0 minus weight into
/// Q_0 \ S0. Subsets are 0-based q indices.
Rational balance(const DblExpInstance& inst, const std::vector<std::size_t>& s0,
                 const std::vector<std::size_t>& s_prime);

/// Index of S0 among the middle subsets for an important bipartition.
std::size_t important_middle_index(const DblExpInstance& inst, const Bipartition& b);
bool is_important(const DblExpInstance& inst, const Bipartition& b);

/// Structural invariants: sizes, cost table, weight totals, |W| >= 2^l / l.
VerificationReport verify_dblexp_structure(const DblExpInstance& inst);

/// For each important S: u_{S0} alone among U on the S side, every w_Z on the
/// S side iff u_{S0} in Z, and the cut value equals the forced-assignment
/// value.
VerificationReport verify_side_assignment(const DblExpInstance& inst, Parallelism p = {});

enum class PairMode { Sampled, Full };

struct IncompressibilityOptions {
  PairMode mode = PairMode::Sampled;
  std::uint64_t seed = 0;
  std::size_t sample_pairs = 500;
  std::size_t sample_outer_pairs = 20;
  Parallelism parallelism{};
  /// Called with (done, total) from worker threads, serialized.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Side vectors pairwise distinct, and no tested pair of vertices (not both
/// terminals) can be merged without raising some minimum cut.
VerificationReport verify_incompressibility(const DblExpInstance& inst,
                                            const IncompressibilityOptions& options = {});

/// Pairs the sampler picks for a given seed, in test order.
std::vector<std::pair<VertexId, VertexId>> sample_pairs(const DblExpInstance& inst,
                                                        std::uint64_t seed, std::size_t pairs,
                                                        std::size_t outer_pairs);

}  // namespace mimicnet
