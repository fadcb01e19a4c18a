#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sus/susfind.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

constexpr sus::Word kVerifyLimit = 512;  // oracle is cubic; keep it small

double time_once(const sus::Text& text, sus::Word k,
                 sus::WorkBuffers& buffers) {
  const auto begin = std::chrono::steady_clock::now();
  sus::find_all_sus_into(text, k, buffers);
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - begin).count();
}

// Times the pipeline over doubling prefixes of the record, reusing one
// buffer pair sized for the full record.
void run_bench(const sus::Record& record, sus::Word k, std::ostream& out) {
  const sus::Word n = static_cast<sus::Word>(record.data.size());
  sus::WorkBuffers buffers(n);
  std::vector<sus::Word> sizes;
  for (sus::Word size = std::min<sus::Word>(1024, n); size < n; size *= 2) {
    if (size > k) sizes.push_back(size);
  }
  if (n > k) sizes.push_back(n);
  double previous = 0.0;
  for (const sus::Word size : sizes) {
    const sus::Text prefix(
        std::string_view(record.data).substr(0, static_cast<std::size_t>(size)));
    const double ms = time_once(prefix, k, buffers);
    out << "bench\t" << record.name << "\tn=" << size << "\tms=" << ms;
    if (previous > 0.0) out << "\tratio=" << ms / previous;
    out << '\n';
    previous = ms;
  }
}

// Compares the pipeline against the reference implementation and reports
// the first divergent position, if any.
bool run_verify(const sus::Record& record, const sus::Text& text,
                sus::Word k, const sus::SusTable& table) {
  const auto expected = sus::oracle::brute_sus(record.data, k);
  for (sus::Word i = 0; i < text.size(); ++i) {
    const auto [start, end] = expected[static_cast<std::size_t>(i)];
    if (table.start(i) != start || table.end(i) != end) {
      std::cerr << "verify: record " << record.name << " diverges at position "
                << (i + 1) << ": got (" << (table.start(i) + 1) << ", "
                << (table.end(i) + 1) << "), expected (" << (start + 1) << ", "
                << (end + 1) << ")\n";
      return false;
    }
  }
  std::cerr << "verify: record " << record.name << " ok (n=" << text.size()
            << ", k=" << k << ")\n";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "susfind: per-position exact and k-mismatch shortest unique "
      "substrings"};
  sus::Word k = 0;
  std::string format = "plain";
  std::string input = "-";
  std::string output = "tsv";
  bool show_substring = false;
  bool verify = false;
  bool bench = false;
  app.add_option("--k", k, "Mismatch budget (default 0)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Input format (default plain)")
      ->check(CLI::IsMember({"plain", "fasta"}));
  app.add_option("--input", input, "Input path, or - for stdin (default -)");
  app.add_option("--output", output, "Result output (default tsv)")
      ->check(CLI::IsMember({"tsv", "none"}));
  app.add_flag("--show-substring", show_substring,
               "Append the substring bytes as a fifth TSV column");
  app.add_flag("--verify", verify,
               "Check every record (n <= 512) against the brute-force "
               "reference; exit 1 on divergence");
  app.add_flag("--bench", bench,
               "Time the pipeline over doubling prefixes instead of "
               "emitting results");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::vector<sus::Record> records;
  try {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (input != "-") {
      file.open(input, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open input file '" << input << "'\n";
        return kExitUsage;
      }
      in = &file;
    }
    records = format == "fasta" ? sus::read_fasta(*in) : sus::read_plain(*in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const sus::Record& record : records) {
    try {
      const sus::Text text(record.data);
      if (k >= text.size()) {
        std::cerr << "error: record " << record.name << " has n="
                  << text.size() << " but k=" << k
                  << "; k must be smaller than n\n";
        return kExitUsage;
      }
      if (bench) {
        run_bench(record, k, std::cout);
        continue;
      }
      const sus::WorkBuffers buffers = sus::find_all_sus(text, k);
      const sus::SusTable table(buffers);
      if (verify) {
        if (text.size() > kVerifyLimit) {
          std::cerr << "verify: record " << record.name << " skipped (n="
                    << text.size() << " > " << kVerifyLimit << ")\n";
        } else if (!run_verify(record, text, k, table)) {
          return kExitVerifyFailed;
        }
      }
      if (output == "tsv") {
        sus::write_tsv(std::cout, record.name, record.data, table, k,
                       show_substring);
      }
    } catch (const std::exception& e) {
      std::cerr << "error: record " << record.name << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitOk;
}
