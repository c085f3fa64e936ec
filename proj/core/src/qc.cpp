#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "mols/error.hpp"
#include "mols/qc.hpp"

namespace mols {

QcLayout qc_transform(const std::shared_ptr<const Field>& f, const std::vector<int>& alphas) {
  const Field& field = *f;
  const int p = field.q();
  if (field.exponent() != 1) fail(Errc::NonPrimeOrder, "quasi-cyclic layout needs a prime order, got " + std::to_string(p));
  if (alphas.empty()) throw std::invalid_argument("qc_transform: no scale factors");

  QcLayout layout;
  layout.p = p;
  layout.m = static_cast<int>(alphas.size());
  std::set<int> seen;
  for (size_t i = 0; i < alphas.size(); ++i) {
    const int a = alphas[i];
    if (a < 0 || a >= p) throw std::out_of_range("qc_transform: scale factor " + std::to_string(a));
    if (a == 0) fail(Errc::ZeroScaleFactor, "scale factor " + std::to_string(i) + " is zero");
    if (a == p - 1)
      fail(Errc::AlphaIsPMinusOne,
           "alpha = p-1 = " + std::to_string(a) + " leaves alpha+1 without an inverse");
    if (!seen.insert(a).second)
      fail(Errc::DuplicateClass, "scale factor " + std::to_string(a) + " appears twice");
    const int omega = field.inv(field.add(a, 1));
    layout.omega.push_back(omega);
    layout.replaced.push_back({field.mul(omega, a), omega});
  }
  layout.column_cells.reserve(static_cast<size_t>(p) * p);
  for (const auto& [x, y] : qc_column_order(p)) layout.column_cells.push_back(x * p + y);
  return layout;
}

namespace {
bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
} // namespace

std::vector<std::pair<int, int>> qc_column_order(int p) {
  if (!is_prime(p)) fail(Errc::NonPrimeOrder, "diagonal order needs a prime, got " + std::to_string(p));
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<size_t>(p) * p);
  for (int d = 0; d < p; ++d)
    for (int i = 0; i < p; ++i) cells.emplace_back((d + i) % p, i);
  return cells;
}

SparseMatrix build_qc_matrix(const std::shared_ptr<const Field>& f, const std::vector<int>& alphas) {
  const QcLayout layout = qc_transform(f, alphas);
  const int p = layout.p;
  const int m = layout.m;

  std::vector<LatinSquare> squares;
  squares.reserve(m);
  for (const ScalePair& pr : layout.replaced) squares.emplace_back(f, pr.alpha, pr.beta);

  std::vector<std::vector<int>> col_rows(static_cast<size_t>(p) * p);
  for (int t = 0; t < p * p; ++t) {
    const int x = layout.column_cells[t] / p;
    const int y = layout.column_cells[t] % p;
    std::vector<int>& rows = col_rows[t];
    rows.reserve(m + 2);
    rows.push_back(x);
    rows.push_back(p + y);
    for (int i = 0; i < m; ++i) rows.push_back((i + 2) * p + squares[i].cell(x, y));
  }

  CodeMeta meta;
  meta.q = p;
  meta.m = m;
  meta.pairs = layout.replaced;
  meta.order = ColumnOrder::diagonal;
  return SparseMatrix((m + 2) * p, p * p, col_rows, meta);
}

bool verify_circulants(const SparseMatrix& h, int p) {
  if (p < 2 || h.rows() % p != 0 || h.cols() % p != 0)
    fail(Errc::DimensionMismatch, "matrix of " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) +
                                      " does not split into blocks of " + std::to_string(p));
  const int block_rows = h.rows() / p;
  const int block_cols = h.cols() / p;
  for (int br = 0; br < block_rows; ++br) {
    for (int bc = 0; bc < block_cols; ++bc) {
      for (int r = 0; r < p; ++r) {
        for (int c = 0; c < p; ++c) {
          const bool a = h.at(br * p + r, bc * p + c);
          const bool b = h.at(br * p + (r + 1) % p, bc * p + (c + 1) % p);
          if (a != b) return false;
        }
      }
    }
  }
  return true;
}

Encoder::Encoder(const SparseMatrix& h) {
  n_ = h.cols();
  words_ = (n_ + 63) / 64;

  // reduced row echelon form of H over GF(2)
  std::vector<std::vector<std::uint64_t>> rows(h.rows(), std::vector<std::uint64_t>(words_, 0));
  for (int i = 0; i < h.rows(); ++i)
    for (int j : h.row(i)) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);

  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < n_ && r < h.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < h.rows(); ++i) {
      if (rows[i][c / 64] >> (c % 64) & 1) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    for (int i = 0; i < h.rows(); ++i) {
      if (i != r && (rows[i][c / 64] >> (c % 64) & 1))
        for (int w = 0; w < words_; ++w) rows[i][w] ^= rows[r][w];
    }
    pivots.push_back(c);
    ++r;
  }
  rank_ = r;
  k_ = n_ - rank_;

  std::vector<bool> is_pivot(n_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  column_permutation_ = free_cols;
  column_permutation_.insert(column_permutation_.end(), pivots.begin(), pivots.end());

  // unit message on free column f: bit f plus, for every echelon row, the
  // pivot bit equal to that row's coefficient at f
  rows_.assign(k_, std::vector<std::uint64_t>(words_, 0));
  for (int j = 0; j < k_; ++j) {
    const int fcol = free_cols[j];
    rows_[j][fcol / 64] |= std::uint64_t{1} << (fcol % 64);
    for (int i = 0; i < rank_; ++i) {
      if (rows[i][fcol / 64] >> (fcol % 64) & 1) {
        const int pcol = pivots[i];
        rows_[j][pcol / 64] |= std::uint64_t{1} << (pcol % 64);
      }
    }
  }
}

bool Encoder::generator_bit(int row, int col) const {
  return rows_[row][col / 64] >> (col % 64) & 1;
}

std::vector<std::uint8_t> Encoder::encode(const std::vector<std::uint8_t>& message) const {
  if (static_cast<int>(message.size()) != k_)
    fail(Errc::MessageLengthMismatch,
         "message has " + std::to_string(message.size()) + " bits, expected " + std::to_string(k_));
  std::vector<std::uint64_t> acc(words_, 0);
  for (int j = 0; j < k_; ++j) {
    if (message[j] & 1)
      for (int w = 0; w < words_; ++w) acc[w] ^= rows_[j][w];
  }
  std::vector<std::uint8_t> out(n_);
  for (int c = 0; c < n_; ++c) out[c] = acc[c / 64] >> (c % 64) & 1;
  return out;
}

void write_generator(std::ostream& os, const Encoder& enc) {
  os << "MOLSG1 " << enc.n() << ' ' << enc.k() << '\n';
  const auto& perm = enc.column_permutation();
  for (size_t i = 0; i < perm.size(); ++i) os << perm[i] << (i + 1 < perm.size() ? ' ' : '\n');
  std::string line(enc.n(), '0');
  for (int r = 0; r < enc.k(); ++r) {
    for (int c = 0; c < enc.n(); ++c) line[c] = enc.generator_bit(r, c) ? '1' : '0';
    os << line << '\n';
  }
}

} // namespace mols
