#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "mols/design.hpp"
#include "mols/gf.hpp"
#include "mols/latin.hpp"

namespace mols {

// Quasi-cyclic arrangement over a prime field: each square (alpha, 1) is
// replaced by the class-equivalent (omega*alpha, omega) with
// omega = (alpha+1)^{-1}, and columns are grouped diagonal by diagonal so
// the parity-check matrix splits into p x p circulant blocks.
struct QcLayout {
  int p = 0;
  int m = 0;
  std::vector<int> omega;
  std::vector<ScalePair> replaced;
  // cell (x, y) covered by QC column t, as x*p + y, t = 0..p^2-1
  std::vector<int> column_cells;
};

// Requires p prime (Errc::NonPrimeOrder) and every alpha outside {0, p-1}
// (Errc::ZeroScaleFactor / Errc::AlphaIsPMinusOne); duplicate alphas are
// rejected as duplicate classes.
QcLayout qc_transform(const std::shared_ptr<const Field>& f, const std::vector<int>& alphas);

// Diagonal-major cell order: column d*p + i covers cell ((d+i) mod p, i).
std::vector<std::pair<int, int>> qc_column_order(int p);

// Incidence matrix of the transversal design over the replaced squares with
// columns in diagonal order; meta records the QC provenance.
SparseMatrix build_qc_matrix(const std::shared_ptr<const Field>& f, const std::vector<int>& alphas);

// True iff every p x p block B satisfies B[r][c] = B[r+1][c+1] (indices mod
// p). Matrix dimensions must be multiples of p (Errc::DimensionMismatch).
bool verify_circulants(const SparseMatrix& h, int p);

// Systematic GF(2) encoder for an arbitrary parity-check matrix. Rank
// deficiency is expected: K = N - rank(H), and H keeps its redundant rows.
class Encoder {
public:
  explicit Encoder(const SparseMatrix& h);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int rank() const noexcept { return rank_; }

  // information columns first, then parity (pivot) columns
  const std::vector<int>& column_permutation() const noexcept { return column_permutation_; }

  // row j = codeword of the j-th unit message, natural column order
  const std::vector<std::vector<std::uint64_t>>& generator_rows() const noexcept { return rows_; }
  bool generator_bit(int row, int col) const;

  // message has k() bits, one per information column, output has n() bits
  // (Errc::MessageLengthMismatch otherwise)
  std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& message) const;

private:
  int n_ = 0, k_ = 0, rank_ = 0;
  int words_ = 0;
  std::vector<int> column_permutation_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Dense generator export: header line "MOLSG1 <N> <K>", the column
// permutation, then K rows of '0'/'1' characters in natural column order.
void write_generator(std::ostream& os, const Encoder& enc);

} // namespace mols
