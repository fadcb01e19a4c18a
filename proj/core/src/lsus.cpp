#include "sus/lsus.hpp"

#include <stdexcept>

namespace sus {

namespace detail {

// Walks positions left to right, maintaining the common-prefix lengths x
// and y against the lexicographic neighbours of the current suffix. Both
// survive a step shortened by at most one, so comparisons resume where
// the previous position left off and the whole pass is O(n).
// rank_then_end[i] is consumed as the rank exactly once, at step i, then
// overwritten with the ending position of the LSUS anchored at i.
void exact_lsus_core(const Text& s, std::span<const Word> sa,
                     std::span<Word> rank_then_end, Word* comparisons) {
  const Word n = s.size();
  Word x = 0;
  Word y = 0;
  Word count = 0;
  for (Word i = 0; i < n; ++i) {
    const Word r = rank_then_end[static_cast<std::size_t>(i)];
    if (r > 0) {
      const Word j = sa[static_cast<std::size_t>(r - 1)];
      while (i + x < n && j + x < n) {
        ++count;
        if (s[i + x] != s[j + x]) break;
        ++x;
      }
    } else {
      x = 0;
    }
    if (r < n - 1) {
      const Word j = sa[static_cast<std::size_t>(r + 1)];
      while (i + y < n && j + y < n) {
        ++count;
        if (s[i + y] != s[j + y]) break;
        ++y;
      }
    } else {
      y = 0;
    }
    const Word reach = x > y ? x : y;
    if (i + reach < n) {
      rank_then_end[static_cast<std::size_t>(i)] = i + reach;
    } else {
      // No unique extension fits; none exists at any later start either.
      for (Word j = i; j < n; ++j) {
        rank_then_end[static_cast<std::size_t>(j)] = kNil;
      }
      break;
    }
    if (x > 0) --x;
    if (y > 0) --y;
  }
  if (comparisons != nullptr) *comparisons = count;
}

}  // namespace detail

void compute_exact_lsus(const Text& s, WorkBuffers& buffers) {
  buffers.require(Stage::SaRank, "compute_exact_lsus");
  detail::exact_lsus_core(s, buffers.a(), buffers.b(), nullptr);
  buffers.advance(Stage::LsusDone);
}

void run_mismatch_phase(const Text& s, std::span<Word> window,
                        std::span<Word> llr, Word delta, Word k) {
  const Word n = s.size();
  MismatchWindow slots(window.first(static_cast<std::size_t>(k + 1)));
  for (Word i = n - 1; i >= delta; --i) {
    if (s[i] != s[i - delta]) slots.record(i);
    // With fewer than k+1 mismatches the pair stays within budget through
    // the end of the shorter suffix; otherwise the match stops right
    // before the (k+1)-th mismatched position.
    const Word len = slots.saturated() ? slots.oldest() - i : n - i;
    if (len > llr[static_cast<std::size_t>(i)]) {
      llr[static_cast<std::size_t>(i)] = len;
    }
    if (len > llr[static_cast<std::size_t>(i - delta)]) {
      llr[static_cast<std::size_t>(i - delta)] = len;
    }
  }
}

void compute_approx_lsus(const Text& s, WorkBuffers& buffers, Word k) {
  const Word n = s.size();
  if (k < 1 || k >= n) {
    throw std::invalid_argument("compute_approx_lsus: need 1 <= k < n");
  }
  if (buffers.stage() != Stage::Fresh && buffers.stage() != Stage::SaRank) {
    throw std::logic_error("compute_approx_lsus: buffers already consumed");
  }
  const auto window = buffers.a().first(static_cast<std::size_t>(k + 1));
  const auto llr = buffers.b();
  std::fill(llr.begin(), llr.end(), Word{0});
  for (Word delta = 1; delta < n; ++delta) {
    run_mismatch_phase(s, window, llr, delta, k);
  }
  // A repeat running to the end of the string has no unique extension.
  for (Word i = 0; i < n; ++i) {
    auto& cell = llr[static_cast<std::size_t>(i)];
    cell = cell == n - i ? kNil : i + cell;
  }
  buffers.advance(Stage::LsusDone);
}

}  // namespace sus
