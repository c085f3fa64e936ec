#include "mols/stopping.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "mols/error.hpp"

namespace mols {

Subrectangle::Subrectangle(std::shared_ptr<const Field> field, int alpha, int beta,
                           std::vector<std::pair<int, int>> cells)
    : field_(std::move(field)), alpha_(alpha), beta_(beta) {
  std::sort(cells.begin(), cells.end());
  for (size_t i = 1; i < cells.size(); ++i)
    if (cells[i] == cells[i - 1]) throw std::invalid_argument("duplicate cell in subrectangle");
  triples_.reserve(cells.size());
  for (auto [x, y] : cells) {
    int s = field_->add(field_->mul(alpha_, x), field_->mul(beta_, y));
    triples_.push_back({x, y, s});
  }
}

std::vector<std::pair<int, int>> Subrectangle::cells() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(triples_.size());
  for (const auto& t : triples_) out.emplace_back(t.x, t.y);
  return out;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::map<int, int> multiplicities(const std::vector<Triple>& triples, int Triple::* member) {
  std::map<int, int> mult;
  for (const auto& t : triples) ++mult[t.*member];
  return mult;
}

} // namespace

std::vector<int> Subrectangle::rows_used() const {
  std::vector<int> v;
  for (const auto& t : triples_) v.push_back(t.x);
  return sorted_unique(std::move(v));
}

std::vector<int> Subrectangle::cols_used() const {
  std::vector<int> v;
  for (const auto& t : triples_) v.push_back(t.y);
  return sorted_unique(std::move(v));
}

std::vector<int> Subrectangle::symbols_used() const {
  std::vector<int> v;
  for (const auto& t : triples_) v.push_back(t.s);
  return sorted_unique(std::move(v));
}

std::vector<int> Subrectangle::unique_symbols() const {
  std::vector<int> out;
  for (auto [s, count] : multiplicities(triples_, &Triple::s))
    if (count == 1) out.push_back(s);
  return out;
}

bool is_full(const Subrectangle& c) {
  if (c.size() == 0) return false;
  for (auto member : {&Triple::x, &Triple::y, &Triple::s})
    for (auto [value, count] : multiplicities(c.triples(), member)) {
      (void)value;
      if (count < 2) return false;
    }
  return true;
}

int polygon_check(const Subrectangle& c) {
  const auto& triples = c.triples();
  const int n = c.size();
  if (n < 4 || n % 2 != 0) fail(Errc::NotAPolygon, "a polygon has an even cell count >= 4");
  for (auto member : {&Triple::x, &Triple::y})
    for (auto [value, count] : multiplicities(triples, member)) {
      (void)value;
      if (count != 2)
        fail(Errc::NotAPolygon, "each used row and column must hold exactly two cells");
    }

  // Walk the cycle alternating row mate / column mate from cell 0.
  auto mate = [&](int i, int Triple::* member) {
    for (int j = 0; j < n; ++j)
      if (j != i && triples[j].*member == triples[i].*member) return j;
    return -1;
  };
  std::vector<bool> visited(n, false);
  const Field& f = c.field();
  int sum = 0;
  int at = 0;
  bool row_step = true;
  for (int step = 0; step < n; ++step) {
    if (visited[at]) fail(Errc::NotAPolygon, "cells split into more than one polygon");
    visited[at] = true;
    sum = (step % 2 == 0) ? f.add(sum, triples[at].s) : f.sub(sum, triples[at].s);
    at = mate(at, row_step ? &Triple::x : &Triple::y);
    row_step = !row_step;
  }
  if (at != 0) fail(Errc::NotAPolygon, "traversal does not close");
  if (std::find(visited.begin(), visited.end(), false) != visited.end())
    fail(Errc::NotAPolygon, "cells split into more than one polygon");
  return sum;
}

Subrectangle translate(const Subrectangle& c, int i, int j) {
  const Field& f = c.field();
  std::vector<std::pair<int, int>> moved;
  moved.reserve(c.size());
  for (const auto& t : c.triples()) moved.emplace_back(f.add(t.x, i), f.add(t.y, j));
  return Subrectangle(c.field_ptr(), c.alpha(), c.beta(), std::move(moved));
}

CorrelatingFamily make_family(const MolsSet& mols, const std::vector<std::pair<int, int>>& cells) {
  CorrelatingFamily fam;
  fam.members.reserve(mols.size());
  for (int i = 0; i < mols.size(); ++i) {
    const auto& sq = mols.square(i);
    fam.members.emplace_back(mols.field_ptr(), sq.alpha(), sq.beta(), cells);
  }
  fam.cells = fam.members.empty() ? cells : fam.members.front().cells();
  return fam;
}

CorrelatingFamily duplicate_to_full(const Subrectangle& c1, const Subrectangle& c2, int i, int j) {
  if (c1.field().q() != c2.field().q() || c1.cells() != c2.cells())
    throw std::invalid_argument("companion subrectangles must share their cell set");
  if (!is_full(c1)) fail(Errc::NotFull, "the subrectangle being duplicated must be full");
  const Field& f = c2.field();
  if (i == 0 && j == 0) fail(Errc::InvalidShift, "shift (0,0) duplicates nothing");
  int symbol_shift = f.add(f.mul(c2.alpha(), i), f.mul(c2.beta(), j));
  if (symbol_shift != 0)
    fail(Errc::InvalidShift, "shift (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") does not preserve the companion square's symbols");

  std::set<std::pair<int, int>> cell_union;
  for (auto cell : c1.cells()) cell_union.insert(cell);
  const Subrectangle moved = translate(c1, i, j); // keep alive: triples() is a view
  for (const auto& t : moved.triples()) cell_union.insert({t.x, t.y});
  std::vector<std::pair<int, int>> cells(cell_union.begin(), cell_union.end());

  CorrelatingFamily fam;
  fam.cells = cells;
  fam.members.emplace_back(c1.field_ptr(), c1.alpha(), c1.beta(), cells);
  fam.members.emplace_back(c2.field_ptr(), c2.alpha(), c2.beta(), cells);
  for (const auto& member : fam.members)
    if (!is_full(member))
      throw std::logic_error("duplication produced a non-full member; shift invariant broken");
  return fam;
}

std::pair<int, int> family_to_configuration(const CorrelatingFamily& family) {
  if (family.members.empty()) return {0, 0};
  int points = static_cast<int>(family.members.front().rows_used().size()) +
               static_cast<int>(family.members.front().cols_used().size());
  for (const auto& member : family.members)
    points += static_cast<int>(member.symbols_used().size());
  return {points, static_cast<int>(family.cells.size())};
}

bool is_stopping_set(const SparseMatrix& h, const std::vector<int>& cols) {
  if (cols.empty()) return false;
  std::map<int, int> row_deg;
  for (int c : cols) {
    if (c < 0 || c >= h.cols()) throw std::out_of_range("column index out of range");
    for (int r : h.col(c)) ++row_deg[r];
  }
  for (auto [row, deg] : row_deg) {
    (void)row;
    if (deg == 1) return false;
  }
  return true;
}

} // namespace mols
