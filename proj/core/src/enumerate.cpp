#include <algorithm>
#include <atomic>
#include <cstring>
#include <stdexcept>
#include <string>
#include <thread>

#include "mols/error.hpp"
#include "mols/log.hpp"
#include "mols/stopping.hpp"

namespace mols {

namespace {

// Accumulator for one search job. Jobs are merged in a fixed order, which
// keeps counts, witnesses and node totals independent of the worker count.
struct Acc {
  std::map<int, std::uint64_t> hist;
  std::map<int, std::uint64_t> min_hist;
  std::map<int, std::vector<std::vector<int>>> wits;
  std::uint64_t nodes = 0;

  void merge(Acc&& other, int witness_cap) {
    for (auto& [size, count] : other.hist) hist[size] += count;
    for (auto& [size, count] : other.min_hist) min_hist[size] += count;
    for (auto& [size, list] : other.wits) {
      auto& dst = wits[size];
      for (auto& w : list) {
        if (static_cast<int>(dst.size()) >= witness_cap) break;
        dst.push_back(std::move(w));
      }
    }
    nodes += other.nodes;
  }
};

// Row-pair coverability: bit (r1, r2) set when some column is incident to
// both rows. Deficient rows that are pairwise uncoverable each demand their
// own additional column, giving the branch-and-bound lower bound.
struct PairBits {
  int words = 0;
  std::vector<std::uint64_t> bits;

  void build(const SparseMatrix& h) {
    words = (h.rows() + 63) / 64;
    bits.assign(static_cast<size_t>(h.rows()) * words, 0);
    for (int j = 0; j < h.cols(); ++j) {
      auto rows = h.col(j);
      for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = a + 1; b < rows.size(); ++b) {
          bits[static_cast<size_t>(rows[a]) * words + (rows[b] >> 6)] |= 1ull << (rows[b] & 63);
          bits[static_cast<size_t>(rows[b]) * words + (rows[a] >> 6)] |= 1ull << (rows[a] & 63);
        }
    }
  }
  bool coverable(int r1, int r2) const {
    return (bits[static_cast<size_t>(r1) * words + (r2 >> 6)] >> (r2 & 63)) & 1;
  }
};

class Searcher {
public:
  Searcher(const SparseMatrix& h, const PairBits& pair_bits, int cap, int witness_cap,
           bool orbit_mode)
      : h_(h), pair_bits_(pair_bits), cap_(cap), witness_cap_(witness_cap),
        orbit_mode_(orbit_mode), deg_(h.rows(), 0), in_set_(h.cols(), 0), excluded_(h.cols(), 0),
        row_local_(h.rows(), -1) {}

  // Runs the whole tree anchored at `anchor`, or, when `root_branch` >= 0,
  // only the subtree of the root-level branch with that index (the
  // parallel-job split; exclusion prefixes reproduce the sequential order).
  Acc run(int anchor, int root_branch = -1) {
    acc_ = Acc{};
    anchor_ = anchor;
    push_column(anchor);
    dfs(root_branch);
    pop_column(anchor);
    return std::move(acc_);
  }

  // Number of root-level branches under this anchor (for job planning).
  int root_branches(int anchor) {
    anchor_ = anchor;
    push_column(anchor);
    std::vector<int> deficient = collect_deficient();
    int n;
    if (deficient.empty()) {
      n = 0;
      for (int c = first_candidate(); c < h_.cols(); ++c)
        if (usable(c)) ++n;
    } else {
      int row = select_branch_row(deficient);
      n = (row < 0) ? 0 : static_cast<int>(candidates_of(row).size());
    }
    pop_column(anchor);
    return n;
  }

private:
  bool usable(int c) const { return !in_set_[c] && !excluded_[c]; }
  int first_candidate() const { return orbit_mode_ ? 0 : anchor_ + 1; }

  void push_column(int c) {
    in_set_[c] = 1;
    set_.push_back(c);
    int appended = 0;
    for (int r : h_.col(c))
      if (deg_[r]++ == 0) {
        active_.push_back(r);
        ++appended;
      }
    appended_.push_back(appended);
  }

  void pop_column(int c) {
    for (int r : h_.col(c)) --deg_[r];
    active_.resize(active_.size() - appended_.back());
    appended_.pop_back();
    set_.pop_back();
    in_set_[c] = 0;
  }

  std::vector<int> collect_deficient() const {
    std::vector<int> out;
    for (int r : active_)
      if (deg_[r] == 1) out.push_back(r);
    return out;
  }

  std::vector<int> candidates_of(int row) const {
    std::vector<int> out;
    for (int c : h_.row(row))
      if (usable(c) && (orbit_mode_ || c > anchor_)) out.push_back(c);
    return out;
  }

  // -1 signals a deficient row with no candidates (dead branch).
  int select_branch_row(const std::vector<int>& deficient) const {
    int best_row = -1;
    size_t best_count = SIZE_MAX;
    for (int r : deficient) {
      size_t count = 0;
      for (int c : h_.row(r))
        if (usable(c) && (orbit_mode_ || c > anchor_)) ++count;
      if (count == 0) return -1;
      if (count < best_count) {
        best_count = count;
        best_row = r;
      }
    }
    return best_row;
  }

  int packing_lower_bound(const std::vector<int>& deficient) const {
    int lb = 0;
    packed_.clear();
    for (int r : deficient) {
      bool independent = true;
      for (int kept : packed_)
        if (pair_bits_.coverable(kept, r)) {
          independent = false;
          break;
        }
      if (independent) {
        packed_.push_back(r);
        ++lb;
      }
    }
    return lb;
  }

  void record() {
    const int size = static_cast<int>(set_.size());
    acc_.hist[size] += 1;
    std::vector<int> sorted = set_;
    std::sort(sorted.begin(), sorted.end());
    if (is_minimal(sorted)) acc_.min_hist[size] += 1;
    auto& wl = acc_.wits[size];
    if (static_cast<int>(wl.size()) < witness_cap_) wl.push_back(sorted);
  }

  // A stopping set is minimal when no proper subset is itself a stopping
  // set; sizes are at most the cap, so a direct power-set scan is cheap.
  bool is_minimal(const std::vector<int>& cols) {
    const int l = static_cast<int>(cols.size());
    if (l <= 1) return true;
    int n_rows = 0;
    touched_.clear();
    local_cols_.assign(l, {});
    for (int i = 0; i < l; ++i)
      for (int r : h_.col(cols[i])) {
        if (row_local_[r] < 0) {
          row_local_[r] = n_rows++;
          touched_.push_back(r);
        }
        local_cols_[i].push_back(row_local_[r]);
      }
    counts_.assign(n_rows, 0);
    bool minimal = true;
    for (unsigned mask = 1; mask + 1 < (1u << l) && minimal; ++mask) {
      std::fill(counts_.begin(), counts_.end(), 0);
      for (int i = 0; i < l; ++i)
        if (mask & (1u << i))
          for (int id : local_cols_[i]) ++counts_[id];
      bool stopping = true;
      for (int id = 0; id < n_rows && stopping; ++id)
        if (counts_[id] == 1) stopping = false;
      if (stopping) minimal = false;
    }
    for (int r : touched_) row_local_[r] = -1;
    return minimal;
  }

  void dfs(int root_branch = -1) {
    ++acc_.nodes;
    std::vector<int> deficient = collect_deficient();
    const int size = static_cast<int>(set_.size());

    if (deficient.empty()) {
      // under a root-branch split only the first job may record the root
      // set itself, or it would be counted once per job
      if (root_branch <= 0) record();
      if (size >= cap_) return;
      // extend past the recorded set: partition supersets by their smallest
      // new column, excluding tried candidates from later branches
      int n_excluded = 0, branch = 0;
      for (int c = first_candidate(); c < h_.cols(); ++c) {
        if (!usable(c)) continue;
        int take = branch++;
        if (root_branch >= 0 && take != root_branch) {
          excluded_[c] = 1;
          exclusion_stack_.push_back(c);
          ++n_excluded;
          continue;
        }
        if (size + 1 == cap_ && !fixes_itself(c)) {
          excluded_[c] = 1;
          exclusion_stack_.push_back(c);
          ++n_excluded;
          continue;
        }
        push_column(c);
        dfs();
        pop_column(c);
        excluded_[c] = 1;
        exclusion_stack_.push_back(c);
        ++n_excluded;
      }
      unwind_exclusions(n_excluded);
      return;
    }

    if (size + packing_lower_bound(deficient) > cap_) return;
    int row = select_branch_row(deficient);
    if (row < 0) return;

    int n_excluded = 0, branch = 0;
    for (int c : candidates_of(row)) {
      int take = branch++;
      if (root_branch < 0 || take == root_branch) {
        push_column(c);
        dfs();
        pop_column(c);
      }
      excluded_[c] = 1;
      exclusion_stack_.push_back(c);
      ++n_excluded;
    }
    unwind_exclusions(n_excluded);
  }

  // With exactly one slot left, a candidate must finish the set on its own:
  // no incident row may be fresh.
  bool fixes_itself(int c) const {
    for (int r : h_.col(c))
      if (deg_[r] == 0) return false;
    return true;
  }

  void unwind_exclusions(int n) {
    for (int i = 0; i < n; ++i) {
      excluded_[exclusion_stack_.back()] = 0;
      exclusion_stack_.pop_back();
    }
  }

  const SparseMatrix& h_;
  const PairBits& pair_bits_;
  const int cap_, witness_cap_;
  const bool orbit_mode_;
  int anchor_ = 0;

  std::vector<int> deg_;
  std::vector<std::uint8_t> in_set_, excluded_;
  std::vector<int> set_, active_, appended_, exclusion_stack_;
  std::vector<int> row_local_, touched_, counts_;
  std::vector<std::vector<int>> local_cols_;
  mutable std::vector<int> packed_;
  Acc acc_;
};

struct Job {
  int anchor;
  int root_branch; // -1: whole anchor tree
};

} // namespace

StoppingReport enumerate_stopping_sets(const SparseMatrix& h, int cap,
                                       const EnumerateOptions& opts) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  if (cap > opts.max_cap)
    fail(Errc::CapTooLarge, "cap " + std::to_string(cap) + " exceeds the soft limit " +
                                std::to_string(opts.max_cap) +
                                " (raise EnumerateOptions::max_cap deliberately)");
  if (cap > 31) fail(Errc::CapTooLarge, "cap above 31 is not supported");

  const CodeMeta& meta = h.meta();
  const bool orbit = opts.allow_symmetry && meta.order != ColumnOrder::external && meta.q >= 2 &&
                     h.cols() == meta.q * meta.q;

  PairBits pair_bits;
  pair_bits.build(h);

  std::vector<Job> jobs;
  if (orbit) {
    Searcher probe(h, pair_bits, cap, opts.witness_cap, true);
    int branches = probe.root_branches(0);
    if (branches == 0) jobs.push_back({0, -1}); // the bare anchor still records itself
    for (int b = 0; b < branches; ++b) jobs.push_back({0, b});
  } else {
    for (int a = 0; a < h.cols(); ++a) jobs.push_back({a, -1});
  }

  const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(jobs.size())));
  std::vector<Acc> results(jobs.size());
  if (workers == 1) {
    Searcher searcher(h, pair_bits, cap, opts.witness_cap, orbit);
    for (size_t i = 0; i < jobs.size(); ++i)
      results[i] = searcher.run(jobs[i].anchor, jobs[i].root_branch);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        Searcher searcher(h, pair_bits, cap, opts.witness_cap, orbit);
        for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
          results[i] = searcher.run(jobs[i].anchor, jobs[i].root_branch);
      });
    for (auto& t : pool) t.join();
  }

  Acc total;
  for (auto& acc : results) total.merge(std::move(acc), opts.witness_cap);

  StoppingReport report;
  report.cap = cap;
  report.search_nodes = total.nodes;
  report.used_symmetry = orbit;
  if (orbit) {
    // Translations act freely and transitively on cells, so the number of
    // stopping sets of size l is q^2/l times the number through cell (0,0).
    const std::uint64_t group = static_cast<std::uint64_t>(meta.q) * meta.q;
    auto scale = [&](const std::map<int, std::uint64_t>& in) {
      std::map<int, std::uint64_t> out;
      for (auto [size, count] : in) {
        std::uint64_t raised = count * group;
        if (raised % size != 0)
          throw std::logic_error("orbit count not divisible by set size; matrix lacks the "
                                 "translation symmetry its metadata promises");
        out[size] = raised / size;
      }
      return out;
    };
    report.histogram = scale(total.hist);
    report.minimal_histogram = scale(total.min_hist);
  } else {
    report.histogram = std::move(total.hist);
    report.minimal_histogram = std::move(total.min_hist);
  }
  report.witnesses = std::move(total.wits);
  if (!report.histogram.empty()) report.stopping_distance = report.histogram.begin()->first;
  log::info("enumerate: cap=%d nodes=%llu sizes=%zu symmetry=%d", cap,
            static_cast<unsigned long long>(report.search_nodes), report.histogram.size(),
            orbit ? 1 : 0);
  return report;
}

} // namespace mols
