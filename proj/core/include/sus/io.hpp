#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sus/types.hpp"

namespace sus {

struct Record {
  std::string name;
  std::string data;
};

// Whole stream as one record named "-", with a single trailing newline
// (and a preceding carriage return, if any) stripped. Arbitrary bytes
// including NUL pass through. Throws std::runtime_error when the stream
// is empty after stripping.
std::vector<Record> read_plain(std::istream& in);

// FASTA records: one per '>' header (name = first whitespace-delimited
// token), sequence lines concatenated verbatim, case preserved. Throws
// std::runtime_error on sequence data before the first header, a record
// with no sequence, or no records at all.
std::vector<Record> read_fasta(std::istream& in);

// Emits "# record <name> n=<n> k=<k>" then one line per position:
// pos<TAB>start<TAB>end<TAB>len, all 1-based, plus the substring bytes as
// a fifth column when show_substring is set.
void write_tsv(std::ostream& out, const std::string& name,
               std::string_view s, const SusTable& table, Word k,
               bool show_substring);

}  // namespace sus
