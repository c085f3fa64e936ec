#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "mols/design.hpp"
#include "mols/error.hpp"
#include "mols/qc.hpp"
#include "mols/sim.hpp"
#include "mols/stopping.hpp"

using namespace mols;

namespace {

MolsSet mols_for(int q, std::vector<int> alphas) {
  auto f = make_field(q);
  std::vector<ScalePair> pairs;
  for (int a : alphas) pairs.push_back({a, 1});
  return build_mols(f, pairs);
}

// Reference peeling with randomized processing order; the residual of
// iterative erasure decoding is order-independent, so any schedule must
// land on the same set.
std::vector<int> random_order_peel(const SparseMatrix& h, std::vector<std::uint8_t> word,
                                   std::mt19937& sched) {
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<int> rows(h.rows());
    for (int i = 0; i < h.rows(); ++i) rows[i] = i;
    std::shuffle(rows.begin(), rows.end(), sched);
    for (int i : rows) {
      int erased = -1, count = 0, parity = 0;
      for (int j : h.row(i)) {
        if (word[j] == kBitErased) {
          erased = j;
          ++count;
        } else {
          parity ^= word[j];
        }
      }
      if (count == 1) {
        word[erased] = static_cast<std::uint8_t>(parity);
        progress = true;
      }
    }
  }
  std::vector<int> residual;
  for (int j = 0; j < static_cast<int>(word.size()); ++j)
    if (word[j] == kBitErased) residual.push_back(j);
  return residual;
}

} // namespace

TEST_CASE("splitmix64 reference values") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  SplitMix64 rng42(42);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    double u = rng42.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    seen.insert(rng42.next());
  }
  CHECK(seen.size() == 1000);
  // substreams with different indices diverge immediately
  auto s0 = SplitMix64::substream(7, 0);
  auto s1 = SplitMix64::substream(7, 1);
  CHECK(s0.next() != s1.next());
}

TEST_CASE("erasure channel boundary behavior") {
  std::vector<std::uint8_t> cw(64, 0);
  SplitMix64 rng(9);
  auto none = transmit_bec(cw, 0.0, rng);
  CHECK(std::count(none.begin(), none.end(), kBitErased) == 0);
  auto all = transmit_bec(cw, 1.0, rng);
  CHECK(std::count(all.begin(), all.end(), kBitErased) == 64);
}

TEST_CASE("erasure counts follow the binomial mean") {
  std::vector<std::uint8_t> cw(169, 0);
  SplitMix64 rng(1234);
  const double eps = 0.2;
  const int trials = 4000;
  long long erased = 0;
  for (int t = 0; t < trials; ++t) {
    auto w = transmit_bec(cw, eps, rng);
    erased += std::count(w.begin(), w.end(), kBitErased);
  }
  double n = 169.0 * trials;
  double sigma = std::sqrt(n * eps * (1 - eps));
  CHECK(std::abs(erased - n * eps) < 3 * sigma);
}

TEST_CASE("single erasures always peel back") {
  MolsSet mols = mols_for(5, {1, 2});
  SparseMatrix h = incidence_matrix(mols);
  for (int j = 0; j < h.cols(); ++j) {
    std::vector<std::uint8_t> word(h.cols(), 0);
    word[j] = kBitErased;
    PeelResult r = peel_decode(h, word);
    CHECK(r.residual.empty());
    CHECK(r.word == std::vector<std::uint8_t>(h.cols(), 0));
  }
}

TEST_CASE("erasing exactly a stopping set leaves it untouched") {
  MolsSet mols = mols_for(4, {1});
  SparseMatrix h = incidence_matrix(mols);
  StoppingReport report = enumerate_stopping_sets(h, 4);
  REQUIRE(report.stopping_distance);
  REQUIRE(*report.stopping_distance == 4);
  const auto& witness = report.witnesses.at(4).front();

  std::vector<std::uint8_t> word(h.cols(), 0);
  for (int j : witness) word[j] = kBitErased;
  PeelResult r = peel_decode(h, word);
  CHECK(r.residual == witness);
  CHECK(is_stopping_set(h, r.residual));
}

TEST_CASE("corrupted known bits are detected") {
  MolsSet mols = mols_for(5, {1, 2});
  SparseMatrix h = incidence_matrix(mols);
  std::vector<std::uint8_t> word(h.cols(), 0);
  word[7] = 1; // not a codeword: some fully known row has odd parity
  try {
    peel_decode(h, word);
    FAIL("inconsistent word must throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InconsistentWord);
  }
  CHECK_THROWS_AS(peel_decode(h, std::vector<std::uint8_t>(3, 0)), Error);
}

TEST_CASE("peeling residual is schedule independent") {
  MolsSet mols = mols_for(5, {1, 2});
  SparseMatrix h = incidence_matrix(mols);
  SplitMix64 rng(77);
  std::mt19937 sched(99);
  for (int t = 0; t < 10000; ++t) {
    std::vector<std::uint8_t> cw(h.cols(), 0);
    auto word = transmit_bec(cw, 0.35, rng);
    PeelResult r = peel_decode(h, word);
    CHECK(r.residual == random_order_peel(h, word, sched));
  }
}

TEST_CASE("erasure recovery does not depend on the transmitted codeword") {
  auto f = make_field(13);
  SparseMatrix h = build_qc_matrix(f, {1, 3});
  Encoder enc(h);
  SplitMix64 msg_rng(5);
  SplitMix64 pattern_rng(6);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint8_t> msg(enc.k());
    for (auto& b : msg) b = static_cast<std::uint8_t>(msg_rng.next() & 1);
    auto cw = enc.encode(msg);

    // same erasure pattern on the codeword and on the all-zero word
    std::vector<std::uint8_t> w_cw = cw, w_zero(h.cols(), 0);
    for (int j = 0; j < h.cols(); ++j)
      if (pattern_rng.next_unit() < 0.08) {
        w_cw[j] = kBitErased;
        w_zero[j] = kBitErased;
      }
    PeelResult r_cw = peel_decode(h, w_cw);
    PeelResult r_zero = peel_decode(h, w_zero);
    CHECK(r_cw.residual == r_zero.residual);
    // resolved positions carry the transmitted bits
    for (int j = 0; j < h.cols(); ++j)
      if (std::find(r_cw.residual.begin(), r_cw.residual.end(), j) == r_cw.residual.end())
        CHECK(r_cw.word[j] == cw[j]);
  }
}

TEST_CASE("simulation statistics are deterministic and worker independent") {
  MolsSet mols = mols_for(7, {1, 3});
  SparseMatrix h = incidence_matrix(mols);
  SimConfig cfg;
  cfg.epsilons = {0.1, 0.2};
  cfg.trials = 20000;
  cfg.seed = 424242;
  SimResult one = run_simulation(h, cfg);
  cfg.workers = 3;
  SimResult three = run_simulation(h, cfg);
  cfg.workers = 5;
  SimResult five = run_simulation(h, cfg);

  REQUIRE(one.per_epsilon.size() == 2);
  for (size_t e = 0; e < one.per_epsilon.size(); ++e) {
    const auto &a = one.per_epsilon[e], &b = three.per_epsilon[e], &c = five.per_epsilon[e];
    CHECK(a.bit_errors == b.bit_errors);
    CHECK(a.word_failures == b.word_failures);
    CHECK(a.detections == b.detections);
    CHECK(a.overflow == b.overflow);
    CHECK(a.bit_errors == c.bit_errors);
    CHECK(a.detections == c.detections);
    CHECK(a.trials == cfg.trials);
    CHECK(a.transmitted_bits == cfg.trials * 49);
    // detection buckets account for every word failure
    long long sum = a.overflow;
    for (long long d : a.detections) sum += d;
    CHECK(sum == a.word_failures);
  }
}

TEST_CASE("failure rates grow with the erasure probability") {
  MolsSet mols = mols_for(5, {1, 2});
  SparseMatrix h = incidence_matrix(mols);
  SimConfig cfg;
  cfg.epsilons = {0.1, 0.3, 0.5};
  cfg.trials = 4000;
  cfg.seed = 7;
  SimResult r = run_simulation(h, cfg);
  CHECK(r.per_epsilon[0].word_failure_rate() <= r.per_epsilon[1].word_failure_rate());
  CHECK(r.per_epsilon[1].word_failure_rate() <= r.per_epsilon[2].word_failure_rate());
  CHECK(r.per_epsilon[2].word_failures > 0); // at eps 0.5 failures are certain in 4000 trials
  CHECK(r.per_epsilon[0].ber() <= r.per_epsilon[1].ber());
}

TEST_CASE("small detection cap routes residuals to the overflow bucket") {
  MolsSet mols = mols_for(5, {1, 2});
  SparseMatrix h = incidence_matrix(mols);
  SimConfig cfg;
  cfg.epsilons = {0.5};
  cfg.trials = 2000;
  cfg.seed = 11;
  cfg.detection_cap = 1;
  SimResult r = run_simulation(h, cfg);
  const auto& st = r.per_epsilon[0];
  CHECK(st.word_failures > 0);
  CHECK(st.overflow == st.word_failures); // no stopping set has size 1
}

TEST_CASE("simulation validates its configuration") {
  MolsSet mols = mols_for(5, {1, 2});
  SparseMatrix h = incidence_matrix(mols);
  SimConfig cfg;
  cfg.epsilons = {0.5};
  cfg.trials = 0;
  CHECK_THROWS_AS(run_simulation(h, cfg), std::invalid_argument);
  cfg.trials = 10;
  cfg.epsilons = {0.0};
  CHECK_THROWS_AS(run_simulation(h, cfg), std::invalid_argument);
  cfg.epsilons = {1.0};
  CHECK_THROWS_AS(run_simulation(h, cfg), std::invalid_argument);
  cfg.epsilons = {};
  CHECK_THROWS_AS(run_simulation(h, cfg), std::invalid_argument);
  cfg.epsilons = {0.5};
  cfg.detection_cap = 0;
  CHECK_THROWS_AS(run_simulation(h, cfg), std::invalid_argument);
}
