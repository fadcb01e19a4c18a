#include "sus/pipeline.hpp"

#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "sus/oracle.hpp"
#include "test_util.hpp"

using sus::Stage;
using sus::SusTable;
using sus::Text;
using sus::Word;
using sus::WorkBuffers;
using testutil::from1;
using testutil::NIL;

namespace {

std::vector<std::pair<Word, Word>> table_of(const std::string& s, Word k) {
  const Text text(s);
  const WorkBuffers buffers = sus::find_all_sus(text, k);
  const SusTable table(buffers);
  std::vector<std::pair<Word, Word>> result;
  for (Word i = 0; i < table.size(); ++i) {
    result.emplace_back(table.start(i), table.end(i));
  }
  return result;
}

}  // namespace

TEST_CASE("endpoint expansion rewrites the golden ending row") {
  auto end = from1({3, 4, 7, 8, 10, 10, 10, 11, 15});
  end.resize(17, NIL);
  auto sls = from1({1, 2, 2, 2, 4, 6, 7, 8, 8, 8, 8, 9, 9, 9, 9});
  sls.resize(17, NIL);
  sus::expand_sls_endpoints(sls, end);
  auto want = from1({3, 4, 4, 4, 8, 10, 10, 11, 11, 11, 11, 15, 15, 15, 15});
  want.resize(17, NIL);
  CHECK(end == want);
}

TEST_CASE("endpoint expansion on the running string") {
  auto end = from1({1, 5, 5, 5});
  end.resize(7, NIL);
  const auto sls = from1({1, 2, 3, 4, 4, NIL, NIL});
  sus::expand_sls_endpoints(sls, end);
  auto want = from1({1, 5, 5, 5, 5});
  want.resize(7, NIL);
  CHECK(end == want);
}

TEST_CASE("a single interval covering everything propagates its ending") {
  auto end = from1({4, NIL, NIL, NIL});
  std::vector<Word> sls(4, 0);
  sus::expand_sls_endpoints(sls, end);
  CHECK(end == from1({4, 4, 4, 4}));
}

TEST_CASE("full pipeline on the worked examples") {
  using P = std::pair<Word, Word>;
  SUBCASE("dabcabc exact") {
    const auto table = table_of("dabcabc", 0);
    CHECK(table[4] == P{3, 4});  // 1-based (4,5)
    CHECK(table[5] == P{3, 5});  // 1-based (4,6)
    CHECK(table == std::vector<P>{{0, 0},
                                  {0, 1},
                                  {2, 4},
                                  {3, 4},
                                  {3, 4},
                                  {3, 5},
                                  {3, 6}});
  }
  SUBCASE("dabcabc one mismatch") {
    const auto table = table_of("dabcabc", 1);
    CHECK(table[3] == P{2, 4});  // 1-based (3,5)
    CHECK(table[5] == P{2, 5});  // 1-based (3,6)
  }
  SUBCASE("abcbb ties break rightmost") {
    CHECK(table_of("abcbb", 0)[1] == P{1, 2});
    CHECK(table_of("abcbb", 1)[1] == P{1, 3});
  }
  SUBCASE("single character") {
    CHECK(table_of("a", 0) == std::vector<P>{{0, 0}});
  }
  SUBCASE("abc one mismatch") {
    CHECK(table_of("abc", 1) == std::vector<P>{{0, 1}, {1, 2}, {1, 2}});
  }
}

TEST_CASE("pipeline equals the reference exhaustively on short strings") {
  for (Word n = 1; n <= 10; ++n) {
    for (Word idx = 0; idx < testutil::pow_int(2, n); ++idx) {
      const auto s = testutil::nth_string(n, 2, idx);
      for (Word k = 0; k <= 2 && k < n; ++k) {
        REQUIRE_MESSAGE(table_of(s, k) == sus::oracle::brute_sus(s, k),
                        "string " << s << " k " << k);
      }
    }
  }
}

TEST_CASE("pipeline equals the reference on random strings") {
  std::mt19937 rng(71);
  for (int round = 0; round < 40; ++round) {
    const Word n = 1 + static_cast<Word>(rng() % 220);
    const Word sigma = 2 + static_cast<Word>(rng() % 4);
    const auto s = testutil::random_string(rng, n, sigma);
    const Word k = static_cast<Word>(rng() % std::min<Word>(5, n));
    REQUIRE_MESSAGE(table_of(s, k) == sus::oracle::brute_sus(s, k),
                    "n " << n << " k " << k);
  }
}

TEST_CASE("answers cover their position and shrink slowly") {
  std::mt19937 rng(73);
  for (int round = 0; round < 30; ++round) {
    const Word n = 2 + static_cast<Word>(rng() % 500);
    const auto s = testutil::random_string(rng, n, 4);
    const Word k = static_cast<Word>(rng() % std::min<Word>(4, n));
    const Text text(s);
    const WorkBuffers buffers = sus::find_all_sus(text, k);
    const SusTable table(buffers);
    for (Word i = 0; i < n; ++i) {
      REQUIRE(table.start(i) <= i);
      REQUIRE(i <= table.end(i));
      REQUIRE(table.end(i) < n);
      if (i > 0) REQUIRE(table.length(i) <= table.length(i - 1) + 1);
    }
  }
}

TEST_CASE("buffer reuse reproduces the same answers") {
  const Text text(std::string("dabcabc"));
  WorkBuffers buffers(text.size());
  const SusTable first = sus::find_all_sus_into(text, 0, buffers);
  std::vector<std::pair<Word, Word>> snapshot;
  for (Word i = 0; i < first.size(); ++i) {
    snapshot.emplace_back(first.start(i), first.end(i));
  }
  const SusTable again = sus::find_all_sus_into(text, 0, buffers);
  for (Word i = 0; i < again.size(); ++i) {
    CHECK(again.start(i) == snapshot[static_cast<std::size_t>(i)].first);
    CHECK(again.end(i) == snapshot[static_cast<std::size_t>(i)].second);
  }
  // shrinking to a smaller text reuses the same arrays
  const Text smaller(std::string("abcbb"));
  const SusTable small_table = sus::find_all_sus_into(smaller, 1, buffers);
  CHECK(small_table.size() == 5);
  CHECK(small_table.start(1) == 1);
  CHECK(small_table.end(1) == 3);
}

TEST_CASE("bad arguments are rejected") {
  const Text text(std::string("abc"));
  CHECK_THROWS_AS(sus::find_all_sus(text, 3), std::invalid_argument);
  CHECK_THROWS_AS(sus::find_all_sus(text, -1), std::invalid_argument);
  CHECK_THROWS_AS(Text(std::string_view{}), std::invalid_argument);
  WorkBuffers buffers(3);
  CHECK_THROWS_AS(SusTable{buffers}, std::logic_error);
  CHECK_THROWS_AS(sus::compute_sus(buffers), std::logic_error);
}

TEST_CASE("independent runs may proceed in parallel") {
  const std::vector<std::string> inputs = {
      testutil::nth_string(40, 2, 123456),
      testutil::nth_string(40, 2, 654321),
      "dabcabcdabcabcxyzzy",
      "mississippimississippi",
  };
  std::vector<std::vector<std::pair<Word, Word>>> results(inputs.size());
  {
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < inputs.size(); ++t) {
      workers.emplace_back([&, t] {
        const Word k = static_cast<Word>(t % 3);
        results[t] = table_of(inputs[t], k);
      });
    }
    for (auto& w : workers) w.join();
  }
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    const Word k = static_cast<Word>(t % 3);
    CHECK(results[t] == sus::oracle::brute_sus(inputs[t], k));
  }
}
