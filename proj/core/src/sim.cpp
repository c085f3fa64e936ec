#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "mols/error.hpp"
#include "mols/log.hpp"
#include "mols/sim.hpp"
#include "mols/stopping.hpp"

namespace mols {

std::vector<std::uint8_t> transmit_bec(const std::vector<std::uint8_t>& codeword, double epsilon,
                                       SplitMix64& rng) {
  if (epsilon < 0.0 || epsilon > 1.0) throw std::invalid_argument("transmit_bec: epsilon outside [0, 1]");
  std::vector<std::uint8_t> received(codeword.size());
  for (size_t i = 0; i < codeword.size(); ++i)
    received[i] = rng.next_unit() < epsilon ? kBitErased : codeword[i];
  return received;
}

namespace {

// Scratch buffers reused across trials of one worker.
struct PeelScratch {
  std::vector<int> unknown;      // erased participants per row
  std::vector<std::uint8_t> parity; // XOR of known participants per row
  std::vector<int> queue;        // rows that reached exactly one unknown
};

// Peels in place: word holds 0/1/kBitErased and is updated; returns the
// residual (sorted by construction: columns scanned in ascending order at
// the fixpoint).
void peel_in_place(const SparseMatrix& h, std::vector<std::uint8_t>& word, PeelScratch& s,
                   std::vector<int>& residual) {
  const int m = h.rows();
  s.unknown.assign(m, 0);
  s.parity.assign(m, 0);
  s.queue.clear();
  residual.clear();

  for (int j = 0; j < h.cols(); ++j) {
    const std::uint8_t v = word[j];
    if (v == kBitErased) {
      for (int r : h.col(j)) ++s.unknown[r];
    } else if (v) {
      for (int r : h.col(j)) s.parity[r] ^= 1;
    }
  }
  for (int r = 0; r < m; ++r) {
    if (s.unknown[r] == 1) s.queue.push_back(r);
    else if (s.unknown[r] == 0 && s.parity[r])
      fail(Errc::InconsistentWord, "check row " + std::to_string(r) + " violated by known bits");
  }

  while (!s.queue.empty()) {
    const int row = s.queue.back();
    s.queue.pop_back();
    if (s.unknown[row] != 1) continue;
    int col = -1;
    for (int j : h.row(row)) {
      if (word[j] == kBitErased) {
        col = j;
        break;
      }
    }
    const std::uint8_t value = s.parity[row];
    word[col] = value;
    for (int r : h.col(col)) {
      s.parity[r] ^= value;
      if (--s.unknown[r] == 1) s.queue.push_back(r);
      else if (s.unknown[r] == 0 && s.parity[r])
        fail(Errc::InconsistentWord, "check row " + std::to_string(r) + " violated after peeling");
    }
  }

  for (int j = 0; j < h.cols(); ++j)
    if (word[j] == kBitErased) residual.push_back(j);
}

EpsilonStats simulate_range(const SparseMatrix& h, double epsilon, std::uint64_t seed,
                            long long first_trial, long long last_trial, int cap) {
  EpsilonStats stats;
  stats.epsilon = epsilon;
  stats.detections.assign(cap + 1, 0);

  const int n = h.cols();
  std::vector<std::uint8_t> word(n);
  PeelScratch scratch;
  std::vector<int> residual;

  for (long long t = first_trial; t < last_trial; ++t) {
    SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(t));
    for (int j = 0; j < n; ++j) word[j] = rng.next_unit() < epsilon ? kBitErased : 0;
    peel_in_place(h, word, scratch, residual);
    ++stats.trials;
    stats.transmitted_bits += n;
    if (!residual.empty()) {
      if (!is_stopping_set(h, residual))
        throw std::logic_error("peeling left a residual that is not a stopping set");
      ++stats.word_failures;
      stats.bit_errors += static_cast<long long>(residual.size());
      const int size = static_cast<int>(residual.size());
      if (size <= cap) ++stats.detections[size];
      else ++stats.overflow;
    }
  }
  return stats;
}

void merge_into(EpsilonStats& into, const EpsilonStats& part) {
  into.trials += part.trials;
  into.transmitted_bits += part.transmitted_bits;
  into.bit_errors += part.bit_errors;
  into.word_failures += part.word_failures;
  into.overflow += part.overflow;
  for (size_t i = 0; i < part.detections.size(); ++i) into.detections[i] += part.detections[i];
}

} // namespace

PeelResult peel_decode(const SparseMatrix& h, const std::vector<std::uint8_t>& received) {
  if (static_cast<int>(received.size()) != h.cols())
    fail(Errc::DimensionMismatch, "received word has " + std::to_string(received.size()) +
                                      " symbols, matrix has " + std::to_string(h.cols()) + " columns");
  PeelResult result;
  result.word = received;
  PeelScratch scratch;
  peel_in_place(h, result.word, scratch, result.residual);
  return result;
}

SimResult run_simulation(const SparseMatrix& h, const SimConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("run_simulation: trials must be positive");
  if (cfg.detection_cap < 1) throw std::invalid_argument("run_simulation: detection cap must be positive");
  if (cfg.epsilons.empty()) throw std::invalid_argument("run_simulation: no erasure probabilities");
  for (double e : cfg.epsilons)
    if (!(e > 0.0) || !(e < 1.0)) throw std::invalid_argument("run_simulation: epsilon outside (0, 1)");

  SimResult result;
  result.seed = cfg.seed;
  result.detection_cap = cfg.detection_cap;

  const int workers = std::max(1, cfg.workers);
  for (double epsilon : cfg.epsilons) {
    EpsilonStats total;
    total.epsilon = epsilon;
    total.detections.assign(cfg.detection_cap + 1, 0);

    if (workers == 1) {
      EpsilonStats part = simulate_range(h, epsilon, cfg.seed, 0, cfg.trials, cfg.detection_cap);
      merge_into(total, part);
    } else {
      const long long chunk = (cfg.trials + workers - 1) / workers;
      std::vector<EpsilonStats> parts(workers);
      std::vector<std::thread> threads;
      threads.reserve(workers);
      for (int w = 0; w < workers; ++w) {
        const long long first = std::min<long long>(cfg.trials, w * chunk);
        const long long last = std::min<long long>(cfg.trials, first + chunk);
        threads.emplace_back([&, w, first, last] {
          parts[w] = simulate_range(h, epsilon, cfg.seed, first, last, cfg.detection_cap);
        });
      }
      for (std::thread& t : threads) t.join();
      for (const EpsilonStats& part : parts) merge_into(total, part);
    }
    log::info("epsilon %.6g: %lld trials, ber %.3e, %lld failures", epsilon, total.trials, total.ber(),
              total.word_failures);
    result.per_epsilon.push_back(std::move(total));
  }
  return result;
}

} // namespace mols
