#pragma once

#include "sus/types.hpp"

namespace sus {

// Builds the suffix array of s into buffers.a() by induced sorting.
// buffers.b() is free workspace during the build. Auxiliary space beyond
// the two arrays is one 256-word bucket buffer plus O(1) locals.
// Requires Stage::Fresh; leaves the stage at Fresh (a holds the array).
void build_suffix_array(const Text& s, WorkBuffers& buffers);

// Inverts the suffix array in a() into b(): b[a[i]] = i.
// Call directly after build_suffix_array; advances to Stage::SaRank.
void build_rank_in_place(WorkBuffers& buffers);

}  // namespace sus
