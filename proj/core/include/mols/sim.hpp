#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mols/design.hpp"

namespace mols {

// Splittable 64-bit generator (SplitMix64). Each simulation trial runs on
// its own substream keyed by (seed, trial index), so results are identical
// for any worker count.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random bits
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t scramble(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
  }

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(scramble(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
  }

private:
  std::uint64_t state_;
};

// Received-word symbols over the erasure channel.
constexpr std::uint8_t kBitErased = 2;

// Each bit erased independently with probability epsilon.
std::vector<std::uint8_t> transmit_bec(const std::vector<std::uint8_t>& codeword, double epsilon,
                                       SplitMix64& rng);

struct PeelResult {
  std::vector<std::uint8_t> word;  // 0/1, kBitErased where unresolved
  std::vector<int> residual;       // unresolved columns, sorted
};

// Iteratively solves check rows with exactly one erased participant. The
// residual is empty or a stopping set of h. A fully known row with odd
// parity signals corrupted input (Errc::InconsistentWord).
PeelResult peel_decode(const SparseMatrix& h, const std::vector<std::uint8_t>& received);

struct SimConfig {
  std::vector<double> epsilons;
  long long trials = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  int detection_cap = 12; // residual sizes above land in the overflow bucket
};

struct EpsilonStats {
  double epsilon = 0.0;
  long long trials = 0;
  long long transmitted_bits = 0;
  long long bit_errors = 0;     // unresolved erased bits
  long long word_failures = 0;  // trials with nonempty residual
  std::vector<long long> detections; // index = residual size, 1..detection_cap
  long long overflow = 0;

  double ber() const { return transmitted_bits ? static_cast<double>(bit_errors) / transmitted_bits : 0.0; }
  double word_failure_rate() const {
    return trials ? static_cast<double>(word_failures) / trials : 0.0;
  }
};

struct SimResult {
  std::uint64_t seed = 0;
  int detection_cap = 12;
  std::vector<EpsilonStats> per_epsilon;
};

// All-zero-codeword Monte-Carlo over the erasure channel: erasure recovery
// depends only on erasure positions, so statistics match encoded random
// messages. Every nonempty residual is checked to be a stopping set.
// Deterministic for a fixed seed regardless of worker count.
SimResult run_simulation(const SparseMatrix& h, const SimConfig& cfg);

} // namespace mols
