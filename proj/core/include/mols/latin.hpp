#pragma once

#include <memory>
#include <vector>

#include "mols/gf.hpp"

namespace mols {

// Scale pair (alpha, beta) of the linear square L[x,y] = alpha*x + beta*y
// over GF(q). Two pairs are in the same equivalence class when one is a
// nonzero scalar multiple of the other; the class representative is the
// reduced pair (alpha/beta, 1).
struct ScalePair {
  int alpha = 0;
  int beta = 1;
  friend bool operator==(const ScalePair&, const ScalePair&) = default;
};

// Linear square over GF(q). Cells are computed on demand; materialize()
// returns the full q x q table when a flat buffer is more convenient.
// The constructor only range-checks the coefficients: zero scale factors
// are representable on purpose (the resulting table is not Latin, and
// is_latin reports that), while build_mols rejects them up front.
class LatinSquare {
public:
  LatinSquare(std::shared_ptr<const Field> field, int alpha, int beta);

  int order() const noexcept { return field_->q(); }
  int alpha() const noexcept { return pair_.alpha; }
  int beta() const noexcept { return pair_.beta; }
  ScalePair pair() const noexcept { return pair_; }
  const Field& field() const noexcept { return *field_; }
  std::shared_ptr<const Field> field_ptr() const noexcept { return field_; }

  int cell(int x, int y) const { return field_->add(field_->mul(pair_.alpha, x), field_->mul(pair_.beta, y)); }

  std::vector<std::uint8_t> materialize() const;

private:
  std::shared_ptr<const Field> field_;
  ScalePair pair_;
};

int latin_cell(const LatinSquare& sq, int x, int y);

// True when every row and every column is a permutation of the symbols.
bool is_latin(const LatinSquare& sq);

// True when superimposing the two squares yields every ordered symbol pair
// exactly once. Throws Errc::OrderMismatch for squares of different order.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

// Reduced pair (alpha * beta^-1, 1). Throws Errc::ZeroScaleFactor when
// either coefficient is zero.
ScalePair class_representative(const Field& f, int alpha, int beta);
inline ScalePair class_representative(const Field& f, ScalePair p) {
  return class_representative(f, p.alpha, p.beta);
}

// A set of pairwise orthogonal linear squares over a common field.
class MolsSet {
public:
  MolsSet(std::shared_ptr<const Field> field, std::vector<LatinSquare> squares,
          std::vector<ScalePair> pairs);

  int order() const noexcept { return field_->q(); }
  int size() const noexcept { return static_cast<int>(squares_.size()); }
  const LatinSquare& square(int i) const { return squares_.at(i); }
  const std::vector<ScalePair>& pairs() const noexcept { return pairs_; }
  const Field& field() const noexcept { return *field_; }
  std::shared_ptr<const Field> field_ptr() const noexcept { return field_; }

private:
  std::shared_ptr<const Field> field_;
  std::vector<LatinSquare> squares_;
  std::vector<ScalePair> pairs_;
};

// Validates that all scale factors are nonzero (Errc::ZeroScaleFactor) and
// that the pairs lie in pairwise distinct classes (Errc::DuplicateClass,
// naming the offending pair indices), then builds the squares.
MolsSet build_mols(std::shared_ptr<const Field> field, const std::vector<ScalePair>& pairs);

} // namespace mols
