#include "sus/suffix_array.hpp"

#include <algorithm>
#include <array>
#include <span>

namespace sus {

// Induced-sorting suffix array construction. The recursion keeps the
// reduced problem inside the tail of the sa buffer itself, so the only
// working memory beyond the two index arrays is one k-word bucket buffer
// per level: the original b array hosts it at every level (k <= n/2 below
// the top), and a 256-word local steps in at the top when the text is
// shorter than the byte alphabet. The same bucket buffer serves counts
// and boundaries; counts are redone before every boundary pass.

namespace {

struct ByteSource {
  const unsigned char* text;
  Word operator[](Word i) const { return text[i]; }
};

struct WordSource {
  const Word* text;
  Word operator[](Word i) const { return text[i]; }
};

template <class Src>
void bucket_starts(Src src, Word n, std::span<Word> bkt) {
  std::fill(bkt.begin(), bkt.end(), Word{0});
  for (Word i = 0; i < n; ++i) ++bkt[static_cast<std::size_t>(src[i])];
  Word sum = 0;
  for (Word& cell : bkt) {
    const Word count = cell;
    cell = sum;
    sum += count;
  }
}

template <class Src>
void bucket_ends(Src src, Word n, std::span<Word> bkt) {
  std::fill(bkt.begin(), bkt.end(), Word{0});
  for (Word i = 0; i < n; ++i) ++bkt[static_cast<std::size_t>(src[i])];
  Word sum = 0;
  for (Word& cell : bkt) {
    sum += cell;
    cell = sum;
  }
}

// Two induction sweeps over seeded LMS entries. Cells holding ~j mark
// suffixes whose predecessor must not be induced in the current sweep.
template <class Src>
void induce(Src src, Word* sa, Word n, std::span<Word> bkt) {
  // L sweep, left to right
  bucket_starts(src, n, bkt);
  {
    const Word j = n - 1;
    const Word c = src[j];
    sa[bkt[static_cast<std::size_t>(c)]++] =
        (j > 0 && src[j - 1] < c) ? ~j : j;
  }
  for (Word i = 0; i < n; ++i) {
    Word j = sa[i];
    sa[i] = ~j;
    if (j > 0) {
      --j;
      const Word c = src[j];
      sa[bkt[static_cast<std::size_t>(c)]++] =
          (j > 0 && src[j - 1] < c) ? ~j : j;
    }
  }
  // S sweep, right to left
  bucket_ends(src, n, bkt);
  for (Word i = n - 1; i >= 0; --i) {
    Word j = sa[i];
    if (j > 0) {
      --j;
      const Word c = src[j];
      sa[--bkt[static_cast<std::size_t>(c)]] =
          (j == 0 || src[j - 1] > c) ? ~j : j;
    } else {
      sa[i] = ~j;
    }
  }
}

// One level of the recursion. sa addresses n + fs cells; the reduced
// problem is laid out in the trailing free space. bucket_area is the
// original b array, reused for bucket space at every depth.
template <class Src>
void sais_level(Src src, Word* sa, Word fs, Word n, Word k,
                std::span<Word> bkt, std::span<Word> bucket_area) {
  // Sort the LMS substrings with one induced sort.
  bucket_ends(src, n, bkt);
  std::fill(sa, sa + n, Word{0});
  {
    Word c = 0;
    Word c1 = src[n - 1];
    for (Word i = n - 2; i >= 0; --i) {
      const Word c0 = src[i];
      if (c0 < c1 + c) {
        c = 1;
      } else if (c != 0) {
        sa[--bkt[static_cast<std::size_t>(c1)]] = i + 1;
        c = 0;
      }
      c1 = c0;
    }
  }
  induce(src, sa, n, bkt);

  // Compact the sorted LMS positions into sa[0..m).
  Word m = 0;
  for (Word i = 0; i < n; ++i) {
    const Word p = sa[i];
    if (p > 0) {
      const Word c0 = src[p];
      if (src[p - 1] > c0) {
        Word j = p + 1;
        while (j < n && src[j] == c0) ++j;
        if (j < n && c0 < src[j]) sa[m++] = p;
      }
    }
  }
  for (Word i = m; i < n; ++i) sa[i] = 0;

  // Record each LMS substring's length at sa[m + p/2].
  {
    Word c = 0;
    Word c1 = src[n - 1];
    Word j = n;
    for (Word i = n - 2; i >= 0; --i) {
      const Word c0 = src[i];
      if (c0 < c1 + c) {
        c = 1;
      } else if (c != 0) {
        sa[m + ((i + 1) >> 1)] = j - i - 1;
        j = i + 1;
        c = 0;
      }
      c1 = c0;
    }
  }

  // Name the LMS substrings in sorted order; equals share a name.
  Word name = 0;
  {
    Word q = n;
    Word qlen = 0;
    for (Word i = 0; i < m; ++i) {
      const Word p = sa[i];
      const Word plen = sa[m + (p >> 1)];
      bool diff = true;
      if (plen == qlen) {
        Word j = 0;
        while (j < plen && src[p + j] == src[q + j]) ++j;
        if (j == plen) diff = false;
      }
      if (diff) {
        ++name;
        q = p;
        qlen = plen;
      }
      sa[m + (p >> 1)] = name;
    }
  }

  // Recurse while names collide; the reduced text sits in the tail.
  if (name < m) {
    Word* reduced = sa + n + fs - m;
    {
      Word j = m - 1;
      for (Word i = n - 1; i >= m; --i) {
        if (sa[i] != 0) reduced[j--] = sa[i] - 1;
      }
    }
    sais_level(WordSource{reduced}, sa, fs + n - 2 * m, m, name,
               bucket_area.first(static_cast<std::size_t>(name)),
               bucket_area);
    // Rewrite the reduced ranks back to LMS text positions.
    {
      Word c = 0;
      Word c1 = src[n - 1];
      Word j = m - 1;
      for (Word i = n - 2; i >= 0; --i) {
        const Word c0 = src[i];
        if (c0 < c1 + c) {
          c = 1;
        } else if (c != 0) {
          reduced[j--] = i + 1;
          c = 0;
        }
        c1 = c0;
      }
    }
    for (Word i = 0; i < m; ++i) sa[i] = reduced[sa[i]];
  }

  // Seed the now fully sorted LMS suffixes and induce everything else.
  bucket_ends(src, n, bkt);
  for (Word i = m; i < n; ++i) sa[i] = 0;
  for (Word i = m - 1; i >= 0; --i) {
    const Word j = sa[i];
    sa[i] = 0;
    sa[--bkt[static_cast<std::size_t>(src[j])]] = j;
  }
  induce(src, sa, n, bkt);
}

}  // namespace

void build_suffix_array(const Text& s, WorkBuffers& buffers) {
  buffers.require(Stage::Fresh, "build_suffix_array");
  const Word n = s.size();
  const auto sa = buffers.a();
  if (n == 1) {
    sa[0] = 0;
    return;
  }
  const ByteSource src{
      reinterpret_cast<const unsigned char*>(s.bytes().data())};
  std::array<Word, 256> local_bkt;
  const std::span<Word> bkt =
      n >= 256 ? buffers.b().first(256) : std::span<Word>(local_bkt);
  sais_level(src, sa.data(), 0, n, Word{256}, bkt, buffers.b());
}

void build_rank_in_place(WorkBuffers& buffers) {
  buffers.require(Stage::Fresh, "build_rank_in_place");
  const Word n = buffers.size();
  const auto sa = buffers.a();
  const auto rank = buffers.b();
  for (Word i = 0; i < n; ++i) {
    rank[static_cast<std::size_t>(sa[static_cast<std::size_t>(i)])] = i;
  }
  buffers.advance(Stage::SaRank);
}

}  // namespace sus
