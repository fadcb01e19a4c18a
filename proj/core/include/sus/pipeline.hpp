#pragma once

#include <span>

#include "sus/types.hpp"

namespace sus {

// Stage 3, step one: rewrites the ending array so that end[i] becomes the
// ending of the rightmost shortest covering LSUS, end[sls[i]]. The scan
// runs right to left from z, which is rediscovered from the ending array
// itself (it is unchanged by stage 2). Cells past z become kNil.
void expand_sls_endpoints(std::span<const Word> sls, std::span<Word> end);

// Stage 3, step two: left-to-right induction turning per-position
// (start, end) covering intervals into the rightmost SUS per position.
// A position without a covering interval extends its left neighbour's
// answer by one character; so does a neighbour answer that ends exactly
// at i-1 and beats the interval's length outright.
void compute_sus_inplace(std::span<Word> start, std::span<Word> end);

// Buffer-level wrappers. expand_sls_endpoints keeps Stage::SlsDone (the
// arrays are mid-transformation); compute_sus must follow it and advances
// to Stage::SusDone.
void expand_sls_endpoints(WorkBuffers& buffers);
void compute_sus(WorkBuffers& buffers);

// Runs the full pipeline on fresh buffers: stage 1 by the exact path for
// k = 0 or the mismatch phases for k >= 1, then stages 2 and 3. The
// returned buffers are at Stage::SusDone; wrap them in a SusTable to read
// the answers. Auxiliary space beyond the two arrays: O(sigma) words.
// Throws std::invalid_argument unless 0 <= k < n.
// O(n) time for k = 0, O(n^2) for k >= 1.
WorkBuffers find_all_sus(const Text& s, Word k);

// Same pipeline into caller-owned buffers; reallocates only when the text
// outgrows them. Suited to benchmark loops.
SusTable find_all_sus_into(const Text& s, Word k, WorkBuffers& buffers);

}  // namespace sus
