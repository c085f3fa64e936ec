#include "mols/constraints.hpp"

#include <algorithm>

#include "mols/error.hpp"

namespace mols {

bool ConstraintReport::all() const {
  return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

std::vector<int> ConstraintReport::violated() const {
  std::vector<int> v;
  for (int i = 0; i < 7; ++i)
    if (!ok[i]) v.push_back(i + 1);
  return v;
}

ConstraintReport check_constraints(const Field& f, ScalePair p1, ScalePair p2) {
  ScalePair r1 = class_representative(f, p1);
  ScalePair r2 = class_representative(f, p2);
  if (r1 == r2)
    fail(Errc::SameClass, "pairs reduce to the same class (" + std::to_string(r1.alpha) + ",1)");
  const int a1 = r1.alpha, a2 = r2.alpha;
  const int two = f.add(1, 1);
  const int three = f.add(two, 1);
  const int sq1 = f.mul(a1, a1);
  const int sq2 = f.mul(a2, a2);
  const int cross = f.mul(a1, a2);
  ConstraintReport rep;
  rep.q = f.q();
  rep.a1 = a1;
  rep.a2 = a2;
  rep.ok[0] = f.sub(f.mul(two, a1), a2) != 0;
  rep.ok[1] = f.sub(f.mul(two, a2), a1) != 0;
  rep.ok[2] = f.add(a1, a2) != 0;
  rep.ok[3] = f.add(f.sub(sq1, cross), sq2) != 0;
  rep.ok[4] = f.sub(f.add(sq1, cross), sq2) != 0;
  rep.ok[5] = f.sub(f.add(sq2, cross), sq1) != 0;
  rep.ok[6] = f.add(f.sub(sq1, f.mul(three, cross)), sq2) != 0;
  return rep;
}

ConstraintReport check_constraints(const Field& f, int a1, int a2) {
  return check_constraints(f, ScalePair{a1, 1}, ScalePair{a2, 1});
}

GoodTupleSearch find_good_tuples(const Field& f, int m, int limit) {
  GoodTupleSearch out;
  out.small_characteristic = f.characteristic() <= 3;
  if (m < 2 || m >= f.q() || limit <= 0) fail(Errc::NoneFound, "no admissible tuple dimensions");

  std::vector<int> tuple{1};
  auto extend = [&](auto&& self) -> bool {
    if (static_cast<int>(tuple.size()) == m) {
      out.tuples.push_back(tuple);
      return static_cast<int>(out.tuples.size()) >= limit;
    }
    for (int a = tuple.back() + 1; a < f.q(); ++a) {
      bool good = true;
      for (int prev : tuple)
        if (!check_constraints(f, prev, a).all()) {
          good = false;
          break;
        }
      if (good) {
        tuple.push_back(a);
        bool done = self(self);
        tuple.pop_back();
        if (done) return true;
      }
    }
    return false;
  };
  extend(extend);
  if (out.tuples.empty())
    fail(Errc::NoneFound, "GF(" + std::to_string(f.q()) + ") admits no tuple of " +
                              std::to_string(m) + " scale factors meeting every constraint");
  return out;
}

LatticeFactors lattice_scale_factors(const Field& f, int c) {
  if (!f.prime()) fail(Errc::NonPrimeOrder, "lattice construction needs prime q");
  if (c < 3 || c > f.q())
    fail(Errc::InvalidBlockSize, "block size c=" + std::to_string(c) + " outside [3," +
                                     std::to_string(f.q()) + "]");
  LatticeFactors out;
  for (int i = 1; i <= c - 2; ++i) {
    ScalePair p{f.q() - i, i + 1};
    out.pairs.push_back(p);
    out.reduced.push_back(class_representative(f, p));
  }
  for (size_t i = 0; i < out.pairs.size(); ++i)
    for (size_t j = i + 1; j < out.pairs.size(); ++j)
      out.reports.push_back(check_constraints(f, out.pairs[i], out.pairs[j]));
  return out;
}

} // namespace mols
