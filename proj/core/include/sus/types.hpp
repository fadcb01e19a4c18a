#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace sus {

// Index word stored in the two work arrays. Signed: the suffix-array
// construction keeps negated markers in cells it is still sorting.
// Every stage boundary leaves only values in [0, n) or kNil behind.
using Word = std::int64_t;

// Reserved sentinel meaning "does not exist". Maximum representable word,
// outside [0, n) for any feasible n; no flag bit is stolen from positions.
inline constexpr Word kNil = std::numeric_limits<Word>::max();

// Largest supported input size: one below the sentinel.
inline constexpr Word kMaxTextSize = kNil - 1;

// Immutable view of the input string plus its effective alphabet size
// (count of distinct byte values present). The underlying bytes must
// outlive the Text and every pipeline run using it.
class Text {
 public:
  // Rejects empty input.
  explicit Text(std::string_view bytes);

  Word size() const { return static_cast<Word>(bytes_.size()); }
  unsigned char operator[](Word i) const {
    return static_cast<unsigned char>(bytes_[static_cast<std::size_t>(i)]);
  }
  std::string_view bytes() const { return bytes_; }
  Word sigma() const { return sigma_; }

 private:
  std::string_view bytes_;
  Word sigma_ = 0;
};

// Which semantic interpretation the (a, b) pair currently carries.
// A pipeline run only ever advances through these.
enum class Stage {
  Fresh,     // a, b: scratch
  SaRank,    // a: suffix array, b: rank array
  LsusDone,  // b[i]: ending of lsus_i (or kNil); a: scratch
  SlsDone,   // a[i]: start index of the rightmost shortest covering LSUS
  SusDone,   // (a[i], b[i]): start/end of the rightmost SUS covering i
};

// The two n-word index arrays that hold all intermediate and final state.
// Exclusively owned by one pipeline run at a time; distinct instances may
// run on distinct inputs in parallel.
class WorkBuffers {
 public:
  explicit WorkBuffers(Word n);

  // Prepares for a new run of size n. Reallocates only when n exceeds the
  // current capacity; repeated runs at the same size reuse the arrays.
  void reset(Word n);

  Word size() const { return n_; }
  Stage stage() const { return stage_; }

  std::span<Word> a() { return {a_.data(), static_cast<std::size_t>(n_)}; }
  std::span<Word> b() { return {b_.data(), static_cast<std::size_t>(n_)}; }
  std::span<const Word> a() const {
    return {a_.data(), static_cast<std::size_t>(n_)};
  }
  std::span<const Word> b() const {
    return {b_.data(), static_cast<std::size_t>(n_)};
  }

  // Throws std::logic_error unless the buffers are at `expected`.
  void require(Stage expected, const char* operation) const;

  // Forward-only transition; throws std::logic_error on anything else.
  void advance(Stage to);

 private:
  std::vector<Word> a_;
  std::vector<Word> b_;
  Word n_ = 0;
  Stage stage_ = Stage::Fresh;
};

// Read-only view of (a, b) once a run has finished. Positions 0-based.
class SusTable {
 public:
  // Requires buffers at Stage::SusDone; the buffers must outlive the view.
  explicit SusTable(const WorkBuffers& buffers);

  Word size() const { return buffers_->size(); }
  Word start(Word i) const { return buffers_->a()[static_cast<std::size_t>(i)]; }
  Word end(Word i) const { return buffers_->b()[static_cast<std::size_t>(i)]; }
  Word length(Word i) const { return end(i) - start(i) + 1; }

 private:
  const WorkBuffers* buffers_;
};

}  // namespace sus
