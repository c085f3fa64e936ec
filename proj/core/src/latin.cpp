#include "mols/latin.hpp"

#include <string>

#include "mols/error.hpp"

namespace mols {

LatinSquare::LatinSquare(std::shared_ptr<const Field> field, int alpha, int beta)
    : field_(std::move(field)), pair_{alpha, beta} {
  // range check through the field's own bounds checking
  (void)field_->add(alpha, beta);
}

std::vector<std::uint8_t> LatinSquare::materialize() const {
  const int q = order();
  std::vector<std::uint8_t> t(static_cast<size_t>(q) * q);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) t[x * q + y] = static_cast<std::uint8_t>(cell(x, y));
  return t;
}

int latin_cell(const LatinSquare& sq, int x, int y) { return sq.cell(x, y); }

bool is_latin(const LatinSquare& sq) {
  const int q = sq.order();
  std::vector<bool> seen(q);
  for (int x = 0; x < q; ++x) {
    seen.assign(q, false);
    for (int y = 0; y < q; ++y) {
      int s = sq.cell(x, y);
      if (seen[s]) return false;
      seen[s] = true;
    }
  }
  for (int y = 0; y < q; ++y) {
    seen.assign(q, false);
    for (int x = 0; x < q; ++x) {
      int s = sq.cell(x, y);
      if (seen[s]) return false;
      seen[s] = true;
    }
  }
  return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order())
    fail(Errc::OrderMismatch, "orders " + std::to_string(a.order()) + " and " +
                                  std::to_string(b.order()) + " differ");
  const int q = a.order();
  std::vector<bool> seen(static_cast<size_t>(q) * q, false);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      int key = a.cell(x, y) * q + b.cell(x, y);
      if (seen[key]) return false;
      seen[key] = true;
    }
  return true;
}

ScalePair class_representative(const Field& f, int alpha, int beta) {
  if (alpha == 0 || beta == 0)
    fail(Errc::ZeroScaleFactor, "scale pair (" + std::to_string(alpha) + "," +
                                    std::to_string(beta) + ") has a zero coefficient");
  return {f.mul(alpha, f.inv(beta)), 1};
}

MolsSet::MolsSet(std::shared_ptr<const Field> field, std::vector<LatinSquare> squares,
                 std::vector<ScalePair> pairs)
    : field_(std::move(field)), squares_(std::move(squares)), pairs_(std::move(pairs)) {}

MolsSet build_mols(std::shared_ptr<const Field> field, const std::vector<ScalePair>& pairs) {
  std::vector<ScalePair> reps;
  reps.reserve(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].alpha == 0 || pairs[i].beta == 0)
      fail(Errc::ZeroScaleFactor, "pair " + std::to_string(i) + " = (" +
                                      std::to_string(pairs[i].alpha) + "," +
                                      std::to_string(pairs[i].beta) + ")");
    reps.push_back(class_representative(*field, pairs[i]));
  }
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      if (reps[i] == reps[j])
        fail(Errc::DuplicateClass, "pairs " + std::to_string(i) + " and " + std::to_string(j) +
                                       " lie in the same class (" +
                                       std::to_string(reps[i].alpha) + ",1)");
  std::vector<LatinSquare> squares;
  squares.reserve(pairs.size());
  for (const auto& p : pairs) squares.emplace_back(field, p.alpha, p.beta);
  return MolsSet(field, std::move(squares), pairs);
}

} // namespace mols
