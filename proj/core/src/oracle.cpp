#include "sus/oracle.hpp"

#include <stdexcept>

namespace sus::oracle {

namespace {

void check_k(std::string_view s, Word k) {
  const Word n = static_cast<Word>(s.size());
  if (k < 0 || k >= n) {
    throw std::invalid_argument("oracle: k must satisfy 0 <= k < n");
  }
}

// unique_from[p]: the smallest ending j such that s[p..j] has no other
// equal-length substring within Hamming distance k, or kNil when even
// s[p..n-1] is still matched by someone. Chases the definition: for every
// competing start q, walk the paired windows outward until they exceed k
// mismatches or the competitor falls off the end of the string.
std::vector<Word> unique_from(std::string_view s, Word k) {
  const Word n = static_cast<Word>(s.size());
  std::vector<Word> result(static_cast<std::size_t>(n));
  for (Word p = 0; p < n; ++p) {
    Word need = p;  // a single character may already be unique
    for (Word q = 0; q < n; ++q) {
      if (q == p) continue;
      Word mismatches = 0;
      Word matched_through = p - 1;
      for (Word d = 0; p + d < n && q + d < n; ++d) {
        if (s[static_cast<std::size_t>(p + d)] !=
            s[static_cast<std::size_t>(q + d)]) {
          ++mismatches;
          if (mismatches > k) break;
        }
        matched_through = p + d;
      }
      if (matched_through + 1 > need) need = matched_through + 1;
    }
    result[static_cast<std::size_t>(p)] = need < n ? need : kNil;
  }
  return result;
}

}  // namespace

Word hamming(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming: lengths differ");
  }
  Word distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    distance += a[i] != b[i] ? 1 : 0;
  }
  return distance;
}

Word lcp_k(std::string_view a, std::string_view b, Word k) {
  const Word m = static_cast<Word>(std::min(a.size(), b.size()));
  Word mismatches = 0;
  for (Word i = 0; i < m; ++i) {
    if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) {
      if (++mismatches > k) return i;
    }
  }
  return m;
}

bool is_k_unique(std::string_view s, Word i, Word j, Word k) {
  const Word n = static_cast<Word>(s.size());
  const Word len = j - i + 1;
  for (Word q = 0; q + len <= n; ++q) {
    if (q == i) continue;
    Word mismatches = 0;
    for (Word d = 0; d < len && mismatches <= k; ++d) {
      mismatches += s[static_cast<std::size_t>(i + d)] !=
                            s[static_cast<std::size_t>(q + d)]
                        ? 1
                        : 0;
    }
    if (mismatches <= k) return false;
  }
  return true;
}

std::vector<Word> brute_lsus(std::string_view s, Word k) {
  check_k(s, k);
  return unique_from(s, k);
}

std::vector<Word> brute_sls(std::string_view s, Word k) {
  check_k(s, k);
  const Word n = static_cast<Word>(s.size());
  const std::vector<Word> ends = unique_from(s, k);
  std::vector<Word> result(static_cast<std::size_t>(n), kNil);
  for (Word i = 0; i < n; ++i) {
    Word best = kNil;
    Word best_len = kNil;
    for (Word j = 0; j <= i; ++j) {
      const Word e = ends[static_cast<std::size_t>(j)];
      if (e == kNil || e < i) continue;  // does not cover i
      const Word len = e - j + 1;
      if (best == kNil || len < best_len || (len == best_len && j > best)) {
        best = j;
        best_len = len;
      }
    }
    result[static_cast<std::size_t>(i)] = best;
  }
  return result;
}

std::vector<std::pair<Word, Word>> brute_sus(std::string_view s, Word k) {
  check_k(s, k);
  const Word n = static_cast<Word>(s.size());
  const std::vector<Word> ends = unique_from(s, k);
  std::vector<std::pair<Word, Word>> result(static_cast<std::size_t>(n));
  for (Word i = 0; i < n; ++i) {
    Word best_start = kNil;
    Word best_end = kNil;
    Word best_len = kNil;
    for (Word j = 0; j <= i; ++j) {
      const Word e = ends[static_cast<std::size_t>(j)];
      if (e == kNil) continue;  // nothing unique starts at j
      // shortest unique substring from j that still covers i
      const Word reach = e > i ? e : i;
      const Word len = reach - j + 1;
      if (best_start == kNil || len < best_len ||
          (len == best_len && j > best_start)) {
        best_start = j;
        best_end = reach;
        best_len = len;
      }
    }
    result[static_cast<std::size_t>(i)] = {best_start, best_end};
  }
  return result;
}

}  // namespace sus::oracle
