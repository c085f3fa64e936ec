#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "mols/error.hpp"
#include "mols/stopping.hpp"

namespace mols {

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Compacts arbitrary labels to 0..k-1 preserving order.
std::vector<int> compact(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

int index_of(const std::vector<int>& sorted, int v) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

// Minimal triple list over all row and column reorderings, symbols renamed
// by first occurrence after each reordering. Two triple sets get the same
// key exactly when a row/column/symbol relabeling maps one onto the other.
std::vector<Triple> canonical_triples(const std::vector<Triple>& triples) {
  std::vector<int> rows, cols;
  rows.reserve(triples.size());
  cols.reserve(triples.size());
  for (const Triple& t : triples) {
    rows.push_back(t.x);
    cols.push_back(t.y);
  }
  rows = compact(rows);
  cols = compact(cols);
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  const auto row_perms = permutations_of(nr);
  const auto col_perms = permutations_of(nc);

  std::vector<Triple> best;
  std::vector<Triple> cur(triples.size());
  std::vector<int> symbol_name;
  for (const auto& rp : row_perms) {
    for (const auto& cp : col_perms) {
      for (size_t i = 0; i < triples.size(); ++i) {
        cur[i].x = rp[index_of(rows, triples[i].x)];
        cur[i].y = cp[index_of(cols, triples[i].y)];
        cur[i].s = triples[i].s;
      }
      std::sort(cur.begin(), cur.end(),
                [](const Triple& a, const Triple& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
      // first-occurrence renaming keyed by original symbol
      std::map<int, int> rename;
      for (Triple& t : cur) {
        auto it = rename.find(t.s);
        if (it == rename.end()) it = rename.emplace(t.s, static_cast<int>(rename.size())).first;
        t.s = it->second;
      }
      if (best.empty() || cur < best) best = cur;
    }
  }
  return best;
}

// Lexicographically minimal cell list over row/column reorderings.
std::vector<std::pair<int, int>> canonical_cells(const std::vector<std::pair<int, int>>& cells, int nr,
                                                 int nc) {
  const auto row_perms = permutations_of(nr);
  const auto col_perms = permutations_of(nc);
  std::vector<std::pair<int, int>> best;
  std::vector<std::pair<int, int>> cur(cells.size());
  for (const auto& rp : row_perms) {
    for (const auto& cp : col_perms) {
      for (size_t i = 0; i < cells.size(); ++i) cur[i] = {rp[cells[i].first], cp[cells[i].second]};
      std::sort(cur.begin(), cur.end());
      if (best.empty() || cur < best) best = cur;
    }
  }
  return best;
}

// Emits every partition of the shape's cells into symbol classes of size
// >= 2 with no class meeting a row or column twice. Cells are visited in
// row-major order and classes are named by first use, so each partition is
// produced exactly once.
void emit_partitions(const std::vector<std::pair<int, int>>& cells, int nr, int nc,
                     std::vector<FullPattern>& out) {
  const int n = static_cast<int>(cells.size());
  std::vector<int> cls(n, -1);
  std::vector<int> class_size;
  // class_rows[c] / class_cols[c]: bitmask of rows/cols already used by c
  std::vector<uint32_t> class_rows, class_cols;

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      for (int s : class_size)
        if (s < 2) return;
      FullPattern p;
      p.size = n;
      p.n_rows = nr;
      p.n_cols = nc;
      p.n_symbols = static_cast<int>(class_size.size());
      p.triples.reserve(n);
      for (int k = 0; k < n; ++k) p.triples.push_back({cells[k].first, cells[k].second, cls[k]});
      out.push_back(std::move(p));
      return;
    }
    const uint32_t rbit = 1u << cells[i].first;
    const uint32_t cbit = 1u << cells[i].second;
    // remaining cells can still grow small classes; prune when too many
    // classes are below two members to ever finish
    int deficit = 0;
    for (int s : class_size)
      if (s < 2) ++deficit;
    if (deficit > n - i) return;
    for (int c = 0; c < static_cast<int>(class_size.size()); ++c) {
      if ((class_rows[c] & rbit) || (class_cols[c] & cbit)) continue;
      cls[i] = c;
      ++class_size[c];
      class_rows[c] |= rbit;
      class_cols[c] |= cbit;
      self(self, i + 1);
      class_rows[c] &= ~rbit;
      class_cols[c] &= ~cbit;
      --class_size[c];
      cls[i] = -1;
    }
    cls[i] = static_cast<int>(class_size.size());
    class_size.push_back(1);
    class_rows.push_back(rbit);
    class_cols.push_back(cbit);
    self(self, i + 1);
    class_rows.pop_back();
    class_cols.pop_back();
    class_size.pop_back();
    cls[i] = -1;
  };
  rec(rec, 0);
}

constexpr int kMaxSide = 4; // a full pattern of <= 8 cells spans <= 4 rows and <= 4 columns

} // namespace

std::vector<FullPattern> full_pattern_catalog(int max_size) {
  if (max_size < 4) throw std::invalid_argument("full_pattern_catalog: max_size must be at least 4");
  if (max_size > 8) fail(Errc::CapTooLarge, "full_pattern_catalog supports sizes up to 8");

  std::vector<FullPattern> out;
  for (int size = 4; size <= max_size; ++size) {
    for (int nr = 2; nr <= std::min(kMaxSide, size / 2); ++nr) {
      for (int nc = 2; nc <= std::min(kMaxSide, size / 2); ++nc) {
        if (nr * nc < size) continue;
        const int n_cells = nr * nc;
        // subsets as bitmasks in row-major order, lowest mask first
        std::vector<int> row_count(nr), col_count(nc);
        for (uint32_t mask = 0; mask < (1u << n_cells); ++mask) {
          if (std::popcount(mask) != size) continue;
          std::fill(row_count.begin(), row_count.end(), 0);
          std::fill(col_count.begin(), col_count.end(), 0);
          std::vector<std::pair<int, int>> cells;
          cells.reserve(size);
          for (int b = 0; b < n_cells; ++b) {
            if (mask & (1u << b)) {
              const int r = b / nc, c = b % nc;
              ++row_count[r];
              ++col_count[c];
              cells.emplace_back(r, c);
            }
          }
          bool ok = true;
          for (int r = 0; r < nr && ok; ++r) ok = row_count[r] >= 2;
          for (int c = 0; c < nc && ok; ++c) ok = col_count[c] >= 2;
          if (!ok) continue;
          // one representative per shape: keep only the minimal reordering
          if (canonical_cells(cells, nr, nc) != cells) continue;
          emit_partitions(cells, nr, nc, out);
        }
      }
    }
  }
  return out;
}

std::vector<int> pattern_classes_in_square(const LatinSquare& sq,
                                           const std::vector<FullPattern>& catalog, int size) {
  if (size < 4) throw std::invalid_argument("pattern_classes_in_square: size must be at least 4");
  std::map<std::vector<Triple>, std::vector<int>> keyed;
  for (size_t i = 0; i < catalog.size(); ++i) {
    if (catalog[i].size == size) keyed[canonical_triples(catalog[i].triples)].push_back(static_cast<int>(i));
  }
  std::set<int> found;
  if (keyed.empty()) return {};

  const int q = sq.order();
  std::vector<int> grid; // subgrid symbols, row-major

  for (int nr = 2; nr <= std::min({kMaxSide, size / 2, q}); ++nr) {
    for (int nc = 2; nc <= std::min({kMaxSide, size / 2, q}); ++nc) {
      const int n_cells = nr * nc;
      if (n_cells < size) continue;

      // masks whose subsets cover every subgrid row and column twice
      std::vector<uint32_t> masks;
      for (uint32_t mask = 0; mask < (1u << n_cells); ++mask) {
        if (std::popcount(mask) != size) continue;
        bool ok = true;
        for (int r = 0; r < nr && ok; ++r) {
          uint32_t row_mask = ((1u << nc) - 1u) << (r * nc);
          ok = std::popcount(mask & row_mask) >= 2;
        }
        for (int c = 0; c < nc && ok; ++c) {
          uint32_t col_mask = 0;
          for (int r = 0; r < nr; ++r) col_mask |= 1u << (r * nc + c);
          ok = std::popcount(mask & col_mask) >= 2;
        }
        if (ok) masks.push_back(mask);
      }
      if (masks.empty()) continue;

      std::vector<int> rows(nr), cols(nc);
      std::vector<Triple> triples;
      std::vector<int> sym_count;

      // walk all row/column subsets via odometer combinations
      std::iota(rows.begin(), rows.end(), 0);
      while (true) {
        std::iota(cols.begin(), cols.end(), 0);
        while (true) {
          grid.assign(n_cells, 0);
          for (int r = 0; r < nr; ++r)
            for (int c = 0; c < nc; ++c) grid[r * nc + c] = sq.cell(rows[r], cols[c]);
          for (uint32_t mask : masks) {
            triples.clear();
            sym_count.assign(q, 0);
            for (int b = 0; b < n_cells; ++b) {
              if (mask & (1u << b)) {
                triples.push_back({b / nc, b % nc, grid[b]});
                ++sym_count[grid[b]];
              }
            }
            bool full = true;
            for (const Triple& t : triples)
              if (sym_count[t.s] < 2) {
                full = false;
                break;
              }
            if (!full) continue;
            auto it = keyed.find(canonical_triples(triples));
            if (it != keyed.end())
              for (int idx : it->second) found.insert(idx);
          }
          // advance column combination
          int i = nc - 1;
          while (i >= 0 && cols[i] == q - nc + i) --i;
          if (i < 0) break;
          ++cols[i];
          for (int j = i + 1; j < nc; ++j) cols[j] = cols[j - 1] + 1;
        }
        int i = nr - 1;
        while (i >= 0 && rows[i] == q - nr + i) --i;
        if (i < 0) break;
        ++rows[i];
        for (int j = i + 1; j < nr; ++j) rows[j] = rows[j - 1] + 1;
      }
    }
  }
  return {found.begin(), found.end()};
}

} // namespace mols
