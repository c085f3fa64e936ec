#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mols/design.hpp"
#include "mols/latin.hpp"

namespace mols {

struct Triple {
  int x = 0, y = 0, s = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// A set of cells of one linear square together with the symbols the square
// puts there. Cells are stored sorted by (x, y) and must be distinct.
class Subrectangle {
public:
  Subrectangle(std::shared_ptr<const Field> field, int alpha, int beta,
               std::vector<std::pair<int, int>> cells);

  int alpha() const noexcept { return alpha_; }
  int beta() const noexcept { return beta_; }
  const Field& field() const noexcept { return *field_; }
  std::shared_ptr<const Field> field_ptr() const noexcept { return field_; }

  int size() const noexcept { return static_cast<int>(triples_.size()); }
  const std::vector<Triple>& triples() const noexcept { return triples_; }
  std::vector<std::pair<int, int>> cells() const;

  std::vector<int> rows_used() const;
  std::vector<int> cols_used() const;
  std::vector<int> symbols_used() const;
  // Symbols covered exactly once; a full subrectangle has none.
  std::vector<int> unique_symbols() const;

  friend bool operator==(const Subrectangle& a, const Subrectangle& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.triples_ == b.triples_;
  }

private:
  std::shared_ptr<const Field> field_;
  int alpha_, beta_;
  std::vector<Triple> triples_;
};

// Every used row, used column and used symbol is covered at least twice.
bool is_full(const Subrectangle& c);

// Requires the cells to trace a single closed polygon: two cells per used
// row, two per used column, one cycle (Errc::NotAPolygon otherwise).
// Returns the alternating symbol sum around the traversal as a field
// element; 0 is necessary for the polygon to occur, and for cells of a
// linear square the sum always telescopes to 0.
int polygon_check(const Subrectangle& c);

// Cell-wise shift by (i, j); symbols shift by alpha*i + beta*j.
Subrectangle translate(const Subrectangle& c, int i, int j);

// The same cell set read through several squares, one member per square.
struct CorrelatingFamily {
  std::vector<std::pair<int, int>> cells;
  std::vector<Subrectangle> members;
};

CorrelatingFamily make_family(const MolsSet& mols, const std::vector<std::pair<int, int>>& cells);

// Union of c1 with its translate under a shift that preserves the symbols
// of the companion square c2 (same cells, different square). Requires
// (i, j) != (0, 0) with alpha2*i + beta2*j = 0 (Errc::InvalidShift) and c1
// full (Errc::NotFull). Both resulting members are full; the union size l'
// satisfies l + |unique symbols of c2| <= l' <= 2l.
CorrelatingFamily duplicate_to_full(const Subrectangle& c1, const Subrectangle& c2, int i, int j);

// Point and cell count (P, l) of the configuration a family spans: P adds
// the distinct rows, columns, and each member's distinct symbols.
std::pair<int, int> family_to_configuration(const CorrelatingFamily& family);

// ---- exhaustive stopping set census ----

struct EnumerateOptions {
  int workers = 1;
  int witness_cap = 16;  // witnesses recorded per size
  int max_cap = 12;      // soft guard: cap above this throws Errc::CapTooLarge
  bool allow_symmetry = true; // permit the translation-orbit fast path
};

struct StoppingReport {
  int cap = 0;
  // all stopping sets by size, minimal or not
  std::map<int, std::uint64_t> histogram;
  // only those with no proper stopping subset
  std::map<int, std::uint64_t> minimal_histogram;
  // smallest occupied size, or nullopt when nothing exists up to the cap
  std::optional<int> stopping_distance;
  // up to witness_cap examples per size, as sorted column index sets
  std::map<int, std::vector<std::vector<int>>> witnesses;
  std::uint64_t search_nodes = 0;
  bool used_symmetry = false;
};

// Counts every nonempty column set of size <= cap in which each incident
// check row is incident at least twice. Exact census; deterministic for any
// worker count. Matrices carrying full-design provenance are counted via
// translation orbits, everything else by a direct anchored search.
StoppingReport enumerate_stopping_sets(const SparseMatrix& h, int cap,
                                       const EnumerateOptions& opts = {});

// True when the column set is a stopping set of h (every row incident to a
// chosen column is incident to at least two chosen columns).
bool is_stopping_set(const SparseMatrix& h, const std::vector<int>& cols);

// ---- structural search for eight-cell stopping structures ----

// One solved assignment: the eight cells spanned by rows xs and columns ys
// of the two-square pattern. `pattern` is 1 or 2 (the two shapes an
// eight-cell full family can take); `swapped` marks the squares exchanged.
struct Size8Assignment {
  int pattern = 1;
  bool swapped = false;
  std::array<int, 4> xs{};
  std::array<int, 4> ys{};
  std::vector<std::pair<int, int>> cells;
};

struct Size8Result {
  bool exists = false;
  std::vector<Size8Assignment> assignments;
  // distinct cell sets among the assignments, each as a sorted cell list
  std::vector<std::vector<std::pair<int, int>>> distinct_cell_sets;
};

// Solves the two eight-cell pattern systems over GF(q) for reduced scale
// factors (a1, 1), (a2, 1) by nullspace enumeration, returning every
// assignment with distinct rows and distinct columns. Solutions exist for
// exactly the fields where 2*a1 = a2, 2*a2 = a1, or a1 + a2 = 0.
Size8Result structural_search_size8(const Field& f, int a1, int a2);

// ---- catalog of small full subrectangles ----

// One catalog entry: a full pattern on a canonical cell shape. Shapes are
// taken up to row/column reordering; on each shape there is one entry per
// partition of the cells into symbol classes (symbols carry first-occurrence
// labels 0, 1, 2, ...). Partitions are not merged across self-maps of the
// shape, so a pair of entries can still be equal up to relabeling.
struct FullPattern {
  int size = 0;
  int n_rows = 0, n_cols = 0, n_symbols = 0;
  std::vector<Triple> triples;
};

// All full patterns of 4..max_size cells (max_size <= 8), smallest size
// first, deterministic order within a size.
std::vector<FullPattern> full_pattern_catalog(int max_size);

// Indices into `catalog` of the entries of the given size that occur as
// cell sets of sq. Exhaustive over all row/column subsets of matching
// size; a subrectangle matches an entry when some row, column and symbol
// relabeling maps it onto the entry, so entries that coincide up to
// relabeling are always reported together.
std::vector<int> pattern_classes_in_square(const LatinSquare& sq,
                                           const std::vector<FullPattern>& catalog, int size);

} // namespace mols
