#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "sus/types.hpp"

namespace sus::oracle {

// Brute-force reference implementations, kept deliberately independent of
// the pipeline: nothing here touches suffix arrays, mismatch windows, or
// the in-place passes. Definition-chasing only, O(n^2)..O(n^3); intended
// for inputs up to a few hundred characters.

// Number of differing positions between equal-length strings.
// Throws std::invalid_argument on a length mismatch.
Word hamming(std::string_view a, std::string_view b);

// Length of the longest common prefix of a and b allowing at most k
// mismatches, capped at min(|a|, |b|).
Word lcp_k(std::string_view a, std::string_view b, Word k);

// True iff no other equal-length substring of s lies within Hamming
// distance k of s[i..j] (0-based, inclusive).
bool is_k_unique(std::string_view s, Word i, Word j, Word k);

// Per-start ending position of the shortest k-mismatch-unique substring
// anchored there, or kNil when no extension becomes unique.
std::vector<Word> brute_lsus(std::string_view s, Word k);

// Per-position start index of the rightmost shortest unique-anchored
// interval covering it, or kNil when no interval covers it.
std::vector<Word> brute_sls(std::string_view s, Word k);

// Per-position (start, end) of the shortest k-mismatch-unique substring
// covering it, rightmost among equal-length candidates. Always exists.
std::vector<std::pair<Word, Word>> brute_sus(std::string_view s, Word k);

}  // namespace sus::oracle
