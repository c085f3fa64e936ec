#pragma once

#include <span>
#include <string>
#include <vector>

#include "mols/latin.hpp"

namespace mols {

// How the columns (design blocks) of a parity-check matrix are arranged.
//   design:   cell (x, y) at column x*q + y
//   diagonal: diagonal-major order; column d*q + i holds cell (d+i, i),
//             the arrangement whose column groups form circulants
//   external: loaded from a file, no provenance
enum class ColumnOrder { design, diagonal, external };

struct CodeMeta {
  int q = 0;
  int m = 0;
  std::vector<ScalePair> pairs;
  ColumnOrder order = ColumnOrder::external;
};

// Binary sparse matrix stored in both orientations. Row/column adjacency
// lists are sorted ascending; at() is a binary search over the shorter list.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols, const std::vector<std::vector<int>>& col_rows,
               CodeMeta meta = {});

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  long long ones() const noexcept { return static_cast<long long>(col_idx_.size()); }

  std::span<const int> col(int j) const {
    return {col_idx_.data() + col_off_[j], col_idx_.data() + col_off_[j + 1]};
  }
  std::span<const int> row(int i) const {
    return {row_idx_.data() + row_off_[i], row_idx_.data() + row_off_[i + 1]};
  }
  bool at(int i, int j) const;

  const CodeMeta& meta() const noexcept { return meta_; }
  void set_meta(CodeMeta m) { meta_ = std::move(m); }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_off_ == b.col_off_ &&
           a.col_idx_ == b.col_idx_;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<int> col_off_, col_idx_; // column-major adjacency
  std::vector<int> row_off_, row_idx_; // row-major adjacency
  CodeMeta meta_;
};

// Transversal design built from a MOLS set: k = m+2 point groups of size n,
// one block per cell of the square. Point numbering: rows 0..n-1, columns
// n..2n-1, symbols of square i (1-based) at (i+1)n..(i+2)n-1.
struct TransversalDesign {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> blocks; // blocks[c] sorted, size k
};

TransversalDesign td_from_mols(const MolsSet& mols);

// Block-point incidence matrix of the design in design column order:
// rows are points, column x*q + y is the block of cell (x, y).
SparseMatrix incidence_matrix(const MolsSet& mols);

// Keeps the columns of the first a diagonal groups, preserving column order.
// Requires a full q^2-column matrix in design or diagonal order and
// 3 <= a <= q; every row weight becomes a. Throws Errc::InvalidTruncation,
// in particular for squares with alpha + beta = 0 whose symbol points
// cannot keep uniform weight under diagonal truncation.
SparseMatrix truncate(const SparseMatrix& h, int a);

// Girth of the bipartite (Tanner) graph; 0 when acyclic.
int girth(const SparseMatrix& h);

// MacKay alist format. Reading tolerates the zero-padding variant; column
// order of the result is ColumnOrder::external.
SparseMatrix read_alist(const std::string& path);
void write_alist(const std::string& path, const SparseMatrix& h);
SparseMatrix parse_alist(const std::string& text);
std::string format_alist(const SparseMatrix& h);

} // namespace mols
