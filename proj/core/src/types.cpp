#include "sus/types.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace sus {

Text::Text(std::string_view bytes) : bytes_(bytes) {
  if (bytes.empty()) {
    throw std::invalid_argument("Text: input must not be empty");
  }
  if (static_cast<Word>(bytes.size()) > kMaxTextSize) {
    throw std::invalid_argument("Text: input too large");
  }
  std::array<bool, 256> seen{};
  for (const char c : bytes) {
    seen[static_cast<unsigned char>(c)] = true;
  }
  for (const bool s : seen) {
    sigma_ += s ? 1 : 0;
  }
}

WorkBuffers::WorkBuffers(Word n) { reset(n); }

void WorkBuffers::reset(Word n) {
  if (n < 1) {
    throw std::invalid_argument("WorkBuffers: size must be at least 1");
  }
  if (n > static_cast<Word>(a_.size())) {
    a_ = std::vector<Word>(static_cast<std::size_t>(n));
    b_ = std::vector<Word>(static_cast<std::size_t>(n));
  }
  n_ = n;
  stage_ = Stage::Fresh;
}

void WorkBuffers::require(Stage expected, const char* operation) const {
  if (stage_ != expected) {
    throw std::logic_error(std::string(operation) +
                           ": buffers are at the wrong stage");
  }
}

void WorkBuffers::advance(Stage to) {
  if (static_cast<int>(to) <= static_cast<int>(stage_)) {
    throw std::logic_error("WorkBuffers: stage transitions only advance");
  }
  stage_ = to;
}

SusTable::SusTable(const WorkBuffers& buffers) : buffers_(&buffers) {
  buffers.require(Stage::SusDone, "SusTable");
}

}  // namespace sus
