#pragma once

#include <algorithm>
#include <span>

#include "sus/types.hpp"

namespace sus {

// Circular register of the most recent k+1 mismatch positions seen while
// one phase walks a pair of suffixes right to left. Lives entirely in the
// first k+1 cells of the a array; holds no storage of its own.
class MismatchWindow {
 public:
  explicit MismatchWindow(std::span<Word> slots) : slots_(slots) {}

  Word capacity() const { return static_cast<Word>(slots_.size()); }
  Word size() const { return size_; }
  bool saturated() const { return size_ == capacity(); }

  void record(Word position) {
    cursor_ = (cursor_ + capacity() - 1) % capacity();
    slots_[static_cast<std::size_t>(cursor_)] = position;
    size_ = std::min(size_ + 1, capacity());
  }

  // The (k+1)-th mismatched position of the current suffix pair.
  // Meaningful only when saturated.
  Word oldest() const {
    return slots_[static_cast<std::size_t>((cursor_ + capacity() - 1) %
                                           capacity())];
  }

 private:
  std::span<Word> slots_;
  Word cursor_ = 0;
  Word size_ = 0;
};

// Stage 1, exact path (k = 0). Consumes a() as the suffix array and b() as
// the rank array, and overwrites b()[i] with the ending position of
// lsus_i^0, or kNil from the first non-existing one onward.
// Requires Stage::SaRank; advances to Stage::LsusDone. O(n).
void compute_exact_lsus(const Text& s, WorkBuffers& buffers);

// One phase of the approximate path: compares suffix pairs (i, i - delta)
// for i = n-1 down to delta and raises llr[i] and llr[i - delta] to the
// pair's k-mismatch LCP length. `window` is the k+1-slot mismatch register
// (the low cells of a); it starts empty each phase.
void run_mismatch_phase(const Text& s, std::span<Word> window,
                        std::span<Word> llr, Word delta, Word k);

// Stage 1, approximate path (k >= 1). Runs all n-1 phases over b(), then
// converts the repeat lengths into LSUS ending positions (kNil where the
// repeat reaches the end of the string). Does not use the suffix array;
// a() is touched only in its first k+1 cells.
// Requires Stage::Fresh or Stage::SaRank; advances to Stage::LsusDone.
// Throws std::invalid_argument unless 1 <= k < n. O(n^2) regardless of k.
void compute_approx_lsus(const Text& s, WorkBuffers& buffers, Word k);

namespace detail {

// Core of compute_exact_lsus. `rank_then_end` holds the rank array on
// entry and the LSUS endings on exit. `comparisons`, when non-null,
// accumulates the number of character comparisons performed.
void exact_lsus_core(const Text& s, std::span<const Word> sa,
                     std::span<Word> rank_then_end, Word* comparisons);

}  // namespace detail

}  // namespace sus
