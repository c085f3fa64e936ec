#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "mols/stopping.hpp"

namespace mols {

namespace {

// One pattern family: eight cells on four rows and four columns, and the
// eight symbol-sharing equations alpha*x_a + y_b - alpha*x_c - y_d = 0.
// `sq` selects which of the two scale factors the equation carries.
struct Equation {
  int sq, xa, yb, xc, yd;
};

struct PatternSpec {
  std::array<Equation, 8> eqs;
  std::array<std::pair<int, int>, 8> cells; // (row index, column index) into xs/ys
};

// First family: each row and each column of the 4x4 frame carries two cells
// along a staircase. Second family: two disjoint 2x2 blocks.
const PatternSpec kPatterns[2] = {
    {{{{0, 0, 0, 2, 3},
       {0, 0, 1, 2, 2},
       {0, 1, 1, 3, 0},
       {0, 1, 2, 3, 3},
       {1, 0, 0, 1, 2},
       {1, 0, 1, 3, 3},
       {1, 1, 1, 2, 3},
       {1, 2, 2, 3, 0}}},
     {{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 0}, {3, 3}}}},
    {{{{0, 0, 0, 3, 2},
       {0, 0, 1, 2, 2},
       {0, 1, 0, 3, 3},
       {0, 1, 1, 2, 3},
       {1, 0, 0, 2, 3},
       {1, 0, 1, 3, 3},
       {1, 1, 0, 2, 2},
       {1, 1, 1, 3, 2}}},
     {{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}}}};

// Reduced row echelon form in place; returns pivot column per row rank.
std::vector<int> rref(const Field& f, std::vector<std::array<int, 8>>& rows) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < 8 && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const int inv = f.inv(rows[r][c]);
    for (int j = 0; j < 8; ++j) rows[r][j] = f.mul(rows[r][j], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int factor = rows[i][c];
      for (int j = 0; j < 8; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<std::array<int, 8>> nullspace_basis(const Field& f, std::vector<std::array<int, 8>> rows) {
  const std::vector<int> pivots = rref(f, rows);
  std::vector<bool> is_pivot(8, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::array<int, 8>> basis;
  for (int c = 0; c < 8; ++c) {
    if (is_pivot[c]) continue;
    std::array<int, 8> v{};
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][c]);
    basis.push_back(v);
  }
  return basis;
}

void search_orientation(const Field& f, int first, int second, int pattern, bool swapped,
                        Size8Result& out) {
  const PatternSpec& spec = kPatterns[pattern - 1];
  std::vector<std::array<int, 8>> rows;
  rows.reserve(8);
  const int alphas[2] = {first, second};
  for (const Equation& e : spec.eqs) {
    std::array<int, 8> row{};
    const int a = alphas[e.sq];
    row[e.xa] = f.add(row[e.xa], a);
    row[4 + e.yb] = f.add(row[4 + e.yb], 1);
    row[e.xc] = f.sub(row[e.xc], a);
    row[4 + e.yd] = f.sub(row[4 + e.yd], 1);
    rows.push_back(row);
  }
  const auto basis = nullspace_basis(f, std::move(rows));
  const int dim = static_cast<int>(basis.size());
  const int q = f.q();

  std::vector<int> digits(dim, 0);
  std::array<int, 8> v{};
  while (true) {
    v.fill(0);
    for (int k = 0; k < dim; ++k) {
      if (digits[k] == 0) continue;
      for (int j = 0; j < 8; ++j) v[j] = f.add(v[j], f.mul(digits[k], basis[k][j]));
    }
    bool distinct = true;
    for (int i = 0; i < 4 && distinct; ++i)
      for (int j = i + 1; j < 4 && distinct; ++j)
        distinct = v[i] != v[j] && v[4 + i] != v[4 + j];
    if (distinct) {
      Size8Assignment a;
      a.pattern = pattern;
      a.swapped = swapped;
      for (int i = 0; i < 4; ++i) {
        a.xs[i] = v[i];
        a.ys[i] = v[4 + i];
      }
      a.cells.reserve(8);
      for (const auto& [xi, yj] : spec.cells) a.cells.emplace_back(a.xs[xi], a.ys[yj]);
      std::sort(a.cells.begin(), a.cells.end());
      out.assignments.push_back(std::move(a));
    }
    int k = 0;
    while (k < dim && ++digits[k] == q) digits[k++] = 0;
    if (k == dim) break;
  }
}

} // namespace

Size8Result structural_search_size8(const Field& f, int a1, int a2) {
  Size8Result result;
  for (int pattern = 1; pattern <= 2; ++pattern) {
    search_orientation(f, a1, a2, pattern, false, result);
    search_orientation(f, a2, a1, pattern, true, result);
  }
  result.exists = !result.assignments.empty();
  std::set<std::vector<std::pair<int, int>>> seen;
  for (const Size8Assignment& a : result.assignments) seen.insert(a.cells);
  result.distinct_cell_sets.assign(seen.begin(), seen.end());
  return result;
}

} // namespace mols
