#include "sus/io.hpp"

#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace sus {

namespace {

std::string first_token(const std::string& line) {
  const auto begin = line.find_first_not_of(" \t");
  if (begin == std::string::npos) return {};
  const auto end = line.find_first_of(" \t", begin);
  return line.substr(begin, end == std::string::npos ? std::string::npos
                                                     : end - begin);
}

void strip_trailing_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::vector<Record> read_plain(std::istream& in) {
  std::string data(std::istreambuf_iterator<char>(in), {});
  if (!data.empty() && data.back() == '\n') data.pop_back();
  strip_trailing_cr(data);
  if (data.empty()) {
    throw std::runtime_error("plain input: empty record");
  }
  return {{"-", std::move(data)}};
}

std::vector<Record> read_fasta(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  bool in_record = false;
  while (std::getline(in, line)) {
    strip_trailing_cr(line);
    if (line.empty()) continue;
    if (line[0] == '>') {
      if (in_record && records.back().data.empty()) {
        throw std::runtime_error("fasta input: record '" +
                                 records.back().name + "' has no sequence");
      }
      records.push_back({first_token(line.substr(1)), {}});
      in_record = true;
    } else {
      if (!in_record) {
        throw std::runtime_error(
            "fasta input: sequence data before the first header");
      }
      records.back().data += line;
    }
  }
  if (records.empty()) {
    throw std::runtime_error("fasta input: no records");
  }
  if (records.back().data.empty()) {
    throw std::runtime_error("fasta input: record '" + records.back().name +
                             "' has no sequence");
  }
  return records;
}

void write_tsv(std::ostream& out, const std::string& name,
               std::string_view s, const SusTable& table, Word k,
               bool show_substring) {
  const Word n = table.size();
  out << "# record " << name << " n=" << n << " k=" << k << '\n';
  for (Word i = 0; i < n; ++i) {
    const Word start = table.start(i);
    const Word end = table.end(i);
    out << (i + 1) << '\t' << (start + 1) << '\t' << (end + 1) << '\t'
        << (end - start + 1);
    if (show_substring) {
      out << '\t'
          << s.substr(static_cast<std::size_t>(start),
                      static_cast<std::size_t>(end - start + 1));
    }
    out << '\n';
  }
}

}  // namespace sus
