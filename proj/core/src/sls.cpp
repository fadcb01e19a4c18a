#include "sus/sls.hpp"

#include <stdexcept>

namespace sus {

SlsBounds locate_bounds(std::span<const Word> lsus_end,
                        std::span<Word> work) {
  const Word n = static_cast<Word>(lsus_end.size());
  Word r = n - 1;
  while (lsus_end[static_cast<std::size_t>(r)] == kNil) {
    if (r == 0) {
      throw std::invalid_argument("locate_bounds: no interval exists");
    }
    --r;
  }
  const Word z = lsus_end[static_cast<std::size_t>(r)];
  for (Word i = z + 1; i < n; ++i) work[static_cast<std::size_t>(i)] = kNil;
  return {r, z};
}

Word compute_pred(std::span<const Word> lsus_end, std::span<Word> work,
                  const SlsBounds& bounds) {
  for (Word i = bounds.r + 1; i <= bounds.z; ++i) {
    work[static_cast<std::size_t>(i)] = kNil;
  }
  work[0] = kNil;
  Word hops = 0;
  for (Word i = 1; i <= bounds.r; ++i) {
    const Word len = lsus_end[static_cast<std::size_t>(i)] - i + 1;
    Word j = i - 1;
    while (work[static_cast<std::size_t>(j)] != kNil &&
           lsus_end[static_cast<std::size_t>(j)] - j + 1 >= len) {
      j = work[static_cast<std::size_t>(j)];
      ++hops;
    }
    work[static_cast<std::size_t>(i)] =
        lsus_end[static_cast<std::size_t>(j)] - j + 1 < len ? j : kNil;
  }
  return hops;
}

void compute_t(std::span<const Word> lsus_end, std::span<Word> work,
               const SlsBounds& bounds) {
  for (Word i = 0; i <= bounds.r; ++i) {
    const Word p = work[static_cast<std::size_t>(i)];
    if (p == kNil) {
      work[static_cast<std::size_t>(i)] = i;
    } else {
      const Word after = lsus_end[static_cast<std::size_t>(p)] + 1;
      work[static_cast<std::size_t>(i)] = after > i ? after : i;
    }
  }
}

void compute_t_inverse(std::span<Word> work, const SlsBounds& bounds) {
  // Right to left, so the largest claimant reaches a shared slot first.
  // A cell whose own t points elsewhere opens up for later claims.
  for (Word i = bounds.r; i >= 0; --i) {
    const Word j = work[static_cast<std::size_t>(i)];
    if (work[static_cast<std::size_t>(j)] == kNil) {
      work[static_cast<std::size_t>(j)] = i;
    }
    if (i < j) work[static_cast<std::size_t>(i)] = kNil;
  }
}

void compute_sls(std::span<Word> work, const SlsBounds& bounds) {
  work[0] = 0;
  for (Word i = 1; i <= bounds.z; ++i) {
    const Word previous = work[static_cast<std::size_t>(i - 1)];
    Word& cell = work[static_cast<std::size_t>(i)];
    if (cell == kNil || (previous != kNil && previous > cell)) {
      cell = previous;
    }
  }
}

SlsBounds run_sls_stage(WorkBuffers& buffers) {
  buffers.require(Stage::LsusDone, "run_sls_stage");
  const auto lsus_end = std::span<const Word>(buffers.b());
  const auto work = buffers.a();
  const SlsBounds bounds = locate_bounds(lsus_end, work);
  compute_pred(lsus_end, work, bounds);
  compute_t(lsus_end, work, bounds);
  compute_t_inverse(work, bounds);
  compute_sls(work, bounds);
  buffers.advance(Stage::SlsDone);
  return bounds;
}

}  // namespace sus
