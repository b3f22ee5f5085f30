#include "mimicnet/incidence.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "mimicnet/errors.hpp"
#include "mimicnet/planar_instance.hpp"

namespace mimicnet {

RowMode parse_row_mode(const std::string& text) {
  if (text == "all") return RowMode::All;
  if (text == "unique-only") return RowMode::UniqueOnly;
  if (text == "important-only") return RowMode::ImportantOnly;
  throw Error(ErrorCode::Parameter,
              "unknown row mode '" + text + "' (expected all, unique-only or important-only)");
}

std::string to_string(RowMode mode) {
  switch (mode) {
    case RowMode::All: return "all";
    case RowMode::UniqueOnly: return "unique-only";
    case RowMode::ImportantOnly: return "important-only";
  }
  return "?";
}

std::string IncidenceMatrix::dump() const {
  std::ostringstream out;
  out << rows.size() << ' ' << cols << '\n';
  for (const auto& row : rows) {
    for (std::uint8_t x : row) out << (x ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

IncidenceMatrix build_incidence_matrix(const TerminalGraph& g, const CutProfile& profile,
                                       RowMode mode, bool strict) {
  if (profile.vertex_count != g.vertex_count() || profile.edge_count != g.edge_count()) {
    throw Error(ErrorCode::ProfileMismatch, "profile was computed for a different graph");
  }
  IncidenceMatrix m;
  m.cols = g.edge_count();
  std::vector<std::string> offending;
  std::size_t dropped = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const Bipartition& b = profile.bipartitions[i];
    const CanonicalCut& cut = profile.cuts[i];
    if (mode == RowMode::ImportantOnly && b.contains(1)) continue;
    if (mode == RowMode::UniqueOnly && !cut.unique) {
      ++dropped;
      continue;
    }
    if (!cut.unique) offending.push_back("mask " + std::to_string(b.members));
    std::vector<std::uint8_t> row(m.cols, 0);
    for (EdgeId e : cut.crossing_edges) row[e] = 1;
    m.rows.push_back(std::move(row));
    m.row_bipartitions.push_back(b);
    m.row_unique.push_back(cut.unique);
  }
  if (strict && !offending.empty()) {
    std::string list;
    for (std::size_t i = 0; i < offending.size() && i < 8; ++i) list += (i ? ", " : "") + offending[i];
    if (offending.size() > 8) list += ", ...";
    throw Error(ErrorCode::Precondition, std::to_string(offending.size()) +
                                             " selected bipartitions have non-unique minimum cuts: " +
                                             list);
  }
  if (dropped > 0) {
    m.warnings.push_back("dropped " + std::to_string(dropped) +
                         " rows whose minimum cut is not unique");
  }
  if (!offending.empty()) {
    m.warnings.push_back(std::to_string(offending.size()) +
                         " kept rows use the canonical cut of a non-unique minimum");
  }
  return m;
}

std::size_t exact_rank(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw Error(ErrorCode::Parameter, "ragged matrix");
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const BigInt& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt t = p * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(const IncidenceMatrix& m) {
  std::vector<std::vector<BigInt>> a;
  a.reserve(m.rows.size());
  for (const auto& row : m.rows) {
    std::vector<BigInt> r(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) r[j] = row[j];
    a.push_back(std::move(r));
  }
  return exact_rank(std::move(a));
}

std::size_t rank_mod2(const IncidenceMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> a;
  for (const auto& row : m.rows) {
    std::vector<std::uint64_t> r(words, 0);
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (row[j]) r[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    a.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < a.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < a.size() && !(a[pivot][col / 64] & bit)) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != rank && (a[i][col / 64] & bit)) {
        for (std::size_t w = 0; w < words; ++w) a[i][w] ^= a[rank][w];
      }
    }
    ++rank;
  }
  return rank;
}

VerificationReport verify_identity_submatrix(const PlanarInstance& inst, const IncidenceMatrix& m) {
  VerificationReport report;
  report.check = "important rows against the apex-fan columns form an identity matrix";
  report.parameters = "planar k=" + std::to_string(inst.k);
  const std::size_t n = inst.important_count();
  if (m.cols != inst.primal.edge_count()) {
    report.fail("matrix has " + std::to_string(m.cols) + " columns, instance has " +
                std::to_string(inst.primal.edge_count()) + " edges");
    return report;
  }

  // Row for leaf index rev(s) sits at position dec(rev(s)).
  std::vector<std::size_t> row_of(n, m.row_count());
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    const Bipartition& b = m.row_bipartitions[i];
    if (b.terminal_count != inst.k || !is_important(b)) continue;
    const std::size_t pos = signature_of(b).reversed().dec().get_ui();
    row_of[pos] = i;
  }
  std::size_t found = 0;
  std::size_t bad_entries = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (row_of[r] == m.row_count()) {
      report.fail("no row for leaf position " + std::to_string(r));
      continue;
    }
    ++found;
    const auto& row = m.rows[row_of[r]];
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint8_t want = r == c ? 1 : 0;
      if (row[inst.fan_edges[c]] != want) {
        ++bad_entries;
        report.fail("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is " +
                    std::to_string(row[inst.fan_edges[c]]) + ", expected " + std::to_string(want));
      }
    }
  }
  report.note("submatrix " + std::to_string(n) + "x" + std::to_string(n) + ": " +
              std::to_string(found) + " rows found, " + std::to_string(bad_entries) +
              " wrong entries");
  if (report.passed()) report.note("identity of size 2^(k-2) = " + std::to_string(n) + " found");
  return report;
}

VerificationReport verify_rank_certificate(const PlanarInstance& inst, Parallelism p) {
  const CutProfile profile = cut_profile(inst.primal, p);
  const IncidenceMatrix important = build_incidence_matrix(inst.primal, profile, RowMode::ImportantOnly);
  VerificationReport report = verify_identity_submatrix(inst, important);
  report.check = "important rows have full rank via an identity submatrix on the apex-fan columns";
  const std::size_t n = inst.important_count();
  const std::size_t r_important = exact_rank(important);
  report.expect(r_important == n, "rank of the important rows is " + std::to_string(r_important) +
                                      ", expected " + std::to_string(n));
  const IncidenceMatrix unique = build_incidence_matrix(inst.primal, profile, RowMode::UniqueOnly);
  const std::size_t r_unique = exact_rank(unique);
  report.expect(r_unique >= n, "rank of the unique rows is " + std::to_string(r_unique) +
                                   ", below " + std::to_string(n));
  report.note("important rows: " + std::to_string(important.row_count()) + ", exact rank " +
              std::to_string(r_important) + ", rank mod 2 " + std::to_string(rank_mod2(important)));
  report.note("unique rows: " + std::to_string(unique.row_count()) + "/" + std::to_string(profile.size()) +
              ", exact rank " + std::to_string(r_unique));
  return report;
}

}  // namespace mimicnet
