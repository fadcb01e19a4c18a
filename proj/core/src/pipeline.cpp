#include "sus/pipeline.hpp"

#include <cassert>
#include <stdexcept>

#include "sus/lsus.hpp"
#include "sus/sls.hpp"
#include "sus/suffix_array.hpp"

namespace sus {

void expand_sls_endpoints(std::span<const Word> sls, std::span<Word> end) {
  const Word n = static_cast<Word>(end.size());
  Word r = n - 1;
  while (end[static_cast<std::size_t>(r)] == kNil) --r;
  const Word z = end[static_cast<std::size_t>(r)];
  for (Word i = z + 1; i < n; ++i) end[static_cast<std::size_t>(i)] = kNil;
  // sls[i] <= i, so the cell read here is overwritten only later.
  for (Word i = z; i >= 0; --i) {
    end[static_cast<std::size_t>(i)] =
        end[static_cast<std::size_t>(sls[static_cast<std::size_t>(i)])];
  }
}

void compute_sus_inplace(std::span<Word> start, std::span<Word> end) {
  const Word n = static_cast<Word>(start.size());
  for (Word i = 1; i < n; ++i) {
    const std::size_t at = static_cast<std::size_t>(i);
    if (start[at] == kNil) {
      // No covering interval: extend the neighbour's answer by one.
      assert(end[at] == kNil);
      assert(end[at - 1] == i - 1);
      start[at] = start[at - 1];
      end[at] = end[at - 1] + 1;
    } else if (end[at - 1] == i - 1 &&
               end[at - 1] - start[at - 1] + 2 < end[at] - start[at] + 1) {
      // The extension is strictly shorter than the covering interval; on
      // a tie the interval stands, which is what makes ties rightmost.
      start[at] = start[at - 1];
      end[at] = end[at - 1] + 1;
    }
  }
}

void expand_sls_endpoints(WorkBuffers& buffers) {
  buffers.require(Stage::SlsDone, "expand_sls_endpoints");
  expand_sls_endpoints(buffers.a(), buffers.b());
}

void compute_sus(WorkBuffers& buffers) {
  buffers.require(Stage::SlsDone, "compute_sus");
  compute_sus_inplace(buffers.a(), buffers.b());
  buffers.advance(Stage::SusDone);
}

namespace {

void check_k(const Text& s, Word k) {
  if (k < 0 || k >= s.size()) {
    throw std::invalid_argument(
        "find_all_sus: k must satisfy 0 <= k < n (the whole string is the "
        "only answer at k >= n)");
  }
}

void run_pipeline(const Text& s, Word k, WorkBuffers& buffers) {
  if (k == 0) {
    build_suffix_array(s, buffers);
    build_rank_in_place(buffers);
    compute_exact_lsus(s, buffers);
  } else {
    compute_approx_lsus(s, buffers, k);
  }
  run_sls_stage(buffers);
  expand_sls_endpoints(buffers);
  compute_sus(buffers);
}

}  // namespace

WorkBuffers find_all_sus(const Text& s, Word k) {
  check_k(s, k);
  WorkBuffers buffers(s.size());
  run_pipeline(s, k, buffers);
  return buffers;
}

SusTable find_all_sus_into(const Text& s, Word k, WorkBuffers& buffers) {
  check_k(s, k);
  buffers.reset(s.size());
  run_pipeline(s, k, buffers);
  return SusTable(buffers);
}

}  // namespace sus
