#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace eg {

/// One failing index with its exact remainder (integer or polynomial,
/// rendered in the fixed text format) and an optional context note such as
/// "p=2 r=1 m=15".
struct Witness {
  std::uint64_t n = 0;
  std::string remainder;
  std::string detail;
};

struct CheckOptions {
  std::uint64_t witness_cap = 10;
  int degree_cap = 5000;
  /// Worker threads for per-index checks; witnesses merge deterministically.
  unsigned workers = 1;
};

/// Per-check result. A report fails iff it has witnesses (beyond the cap,
/// only the count of suppressed witnesses is kept).
struct CongruenceReport {
  std::string family;
  std::uint64_t from = 1;
  std::uint64_t to = 0;
  std::vector<Witness> witnesses;
  std::uint64_t suppressed = 0;
  std::vector<std::string> notes;

  bool pass() const { return witnesses.empty() && suppressed == 0; }

  /// Appends a witness respecting the cap; order of calls fixes report order.
  void add_witness(std::uint64_t cap, std::uint64_t n, std::string remainder,
                   std::string detail = {});
};

nlohmann::ordered_json to_json(const CongruenceReport& report);
/// family,from,to,verdict,witness_count,first_witness_n
std::string to_csv_row(const CongruenceReport& report);
std::string csv_header();
std::string to_text(const CongruenceReport& report);

}  // namespace eg
