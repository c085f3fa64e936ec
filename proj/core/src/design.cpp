#include "mols/design.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "mols/error.hpp"

namespace mols {

SparseMatrix::SparseMatrix(int rows, int cols, const std::vector<std::vector<int>>& col_rows,
                           CodeMeta meta)
    : rows_(rows), cols_(cols), meta_(std::move(meta)) {
  if (static_cast<int>(col_rows.size()) != cols)
    fail(Errc::DimensionMismatch, "expected " + std::to_string(cols) + " columns, got " +
                                      std::to_string(col_rows.size()));
  col_off_.assign(cols + 1, 0);
  std::vector<int> row_weight(rows, 0);
  for (int j = 0; j < cols; ++j) {
    col_off_[j + 1] = col_off_[j] + static_cast<int>(col_rows[j].size());
    for (int i : col_rows[j]) {
      if (i < 0 || i >= rows)
        fail(Errc::DimensionMismatch, "row index " + std::to_string(i) + " out of range");
      ++row_weight[i];
    }
  }
  col_idx_.reserve(col_off_[cols]);
  for (int j = 0; j < cols; ++j) {
    auto sorted = col_rows[j];
    std::sort(sorted.begin(), sorted.end());
    for (size_t t = 1; t < sorted.size(); ++t)
      if (sorted[t] == sorted[t - 1])
        fail(Errc::DimensionMismatch, "duplicate row index in column " + std::to_string(j));
    col_idx_.insert(col_idx_.end(), sorted.begin(), sorted.end());
  }
  row_off_.assign(rows + 1, 0);
  for (int i = 0; i < rows; ++i) row_off_[i + 1] = row_off_[i] + row_weight[i];
  row_idx_.resize(col_idx_.size());
  std::vector<int> cursor(row_off_.begin(), row_off_.end() - 1);
  for (int j = 0; j < cols; ++j)
    for (int i : col(j)) row_idx_[cursor[i]++] = j;
}

bool SparseMatrix::at(int i, int j) const {
  auto c = col(j);
  return std::binary_search(c.begin(), c.end(), i);
}

TransversalDesign td_from_mols(const MolsSet& mols) {
  const int n = mols.order();
  const int m = mols.size();
  TransversalDesign td;
  td.k = m + 2;
  td.n = n;
  td.blocks.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<int> block;
      block.reserve(td.k);
      block.push_back(x);
      block.push_back(n + y);
      for (int i = 0; i < m; ++i) block.push_back((i + 2) * n + mols.square(i).cell(x, y));
      td.blocks.push_back(std::move(block));
    }
  return td;
}

SparseMatrix incidence_matrix(const MolsSet& mols) {
  TransversalDesign td = td_from_mols(mols);
  CodeMeta meta;
  meta.q = mols.order();
  meta.m = mols.size();
  meta.pairs = mols.pairs();
  meta.order = ColumnOrder::design;
  return SparseMatrix(td.k * td.n, td.n * td.n, td.blocks, std::move(meta));
}

SparseMatrix truncate(const SparseMatrix& h, int a) {
  const CodeMeta& meta = h.meta();
  const int q = meta.q;
  if (meta.order == ColumnOrder::external || q == 0)
    fail(Errc::InvalidTruncation, "matrix has no design provenance");
  if (h.cols() != q * q)
    fail(Errc::InvalidTruncation, "matrix is already truncated");
  if (a < 3 || a > q)
    fail(Errc::InvalidTruncation, "block size a=" + std::to_string(a) + " outside [3," +
                                      std::to_string(q) + "]");
  Field f(q);
  for (const auto& p : meta.pairs)
    if (f.add(p.alpha, p.beta) == 0)
      fail(Errc::InvalidTruncation,
           "square (" + std::to_string(p.alpha) + "," + std::to_string(p.beta) +
               ") has constant symbols along diagonals; row weights would not be uniform");

  // keep cells on diagonals x-y mod q in [0, a), preserving column order
  std::vector<std::vector<int>> cols;
  cols.reserve(static_cast<size_t>(a) * q);
  for (int j = 0; j < h.cols(); ++j) {
    int x, y;
    if (meta.order == ColumnOrder::design) {
      x = j / q;
      y = j % q;
    } else {
      x = f.add(j / q, j % q);
      y = j % q;
    }
    if (f.sub(x, y) >= a) continue;
    auto span = h.col(j);
    cols.emplace_back(span.begin(), span.end());
  }
  CodeMeta out = meta;
  return SparseMatrix(h.rows(), static_cast<int>(cols.size()), cols, std::move(out));
}

int girth(const SparseMatrix& h) {
  // BFS over the Tanner graph from every variable node; nodes 0..cols-1 are
  // variables, cols..cols+rows-1 are checks. Shortest cycle through the BFS
  // root is found when an edge joins two vertices whose levels collide.
  const int nv = h.cols(), nc = h.rows();
  const int n = nv + nc;
  int best = 0;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < nv; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> bfs;
    dist[root] = 0;
    bfs.push(root);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      if (best && 2 * dist[u] >= best) continue;
      auto neighbors = (u < nv) ? h.col(u) : h.row(u - nv);
      for (int w : neighbors) {
        int v = (u < nv) ? nv + w : w;
        if (v == parent[u]) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          bfs.push(v);
        } else {
          int cyc = dist[u] + dist[v] + 1;
          if (best == 0 || cyc < best) best = cyc;
        }
      }
    }
  }
  return best;
}

} // namespace mols
