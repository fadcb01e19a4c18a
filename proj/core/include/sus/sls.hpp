#pragma once

#include <span>

#include "sus/types.hpp"

namespace sus {

// r: index of the rightmost existing LSUS; z: rightmost position covered
// by any LSUS (z = lsus_end[r]).
struct SlsBounds {
  Word r;
  Word z;
};

// Stage 2 operates on the LSUS ending array (b, read-only throughout) and
// writes every intermediate form and the final answer into the work array
// (a). The four passes below run in order: pred -> t -> max t^-1 -> prefix
// max. Each one reinterprets the cells the previous pass left behind.

// Scans lsus_end right to left for the first non-kNil cell, yielding r and
// z = lsus_end[r]. Cells of work past z are set to kNil.
// Throws std::invalid_argument if every cell is kNil (corrupt stage-1 output).
SlsBounds locate_bounds(std::span<const Word> lsus_end, std::span<Word> work);

// work[i] <- pred[i]: the largest j < i whose interval is strictly shorter
// than interval i, found by chasing earlier pred links; kNil if none.
// Cells in (r, z] are set to kNil. Returns the total number of chase hops
// (amortized <= 2r). O(n).
Word compute_pred(std::span<const Word> lsus_end, std::span<Word> work,
                  const SlsBounds& bounds);

// work[i] <- t_i, the start of interval i's effective covering region:
// lsus_end[pred[i]] + 1 clamped up to i, or i when pred[i] is kNil. O(n).
void compute_t(std::span<const Word> lsus_end, std::span<Word> work,
               const SlsBounds& bounds);

// work[j] <- max { i : t_i = j }, or kNil. Right-to-left scan; the largest
// claimant of a shared slot wins, cells whose own t points elsewhere open
// up as kNil for later claims. O(n).
void compute_t_inverse(std::span<Word> work, const SlsBounds& bounds);

// work[i] <- start index of the rightmost shortest interval covering i,
// by a left-to-right prefix maximum over max t^-1 (kNil = minus infinity).
// Cells past z stay kNil. O(n).
void compute_sls(std::span<Word> work, const SlsBounds& bounds);

// Runs the whole stage on buffers: b() holds LSUS endings (unchanged on
// exit), a() receives the SLS start indices.
// Requires Stage::LsusDone; advances to Stage::SlsDone.
SlsBounds run_sls_stage(WorkBuffers& buffers);

}  // namespace sus
