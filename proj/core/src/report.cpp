#include "eg/report.hpp"

#include <sstream>

namespace eg {

void CongruenceReport::add_witness(std::uint64_t cap, std::uint64_t n, std::string remainder,
                                   std::string detail) {
  if (witnesses.size() >= cap) {
    ++suppressed;
    return;
  }
  witnesses.push_back({n, std::move(remainder), std::move(detail)});
}

nlohmann::ordered_json to_json(const CongruenceReport& report) {
  nlohmann::ordered_json j;
  j["family"] = report.family;
  j["range"] = {{"from", report.from}, {"to", report.to}};
  j["verdict"] = report.pass() ? "pass" : "fail";
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const Witness& w : report.witnesses) {
    nlohmann::ordered_json jw;
    jw["n"] = w.n;
    jw["remainder"] = w.remainder;
    if (!w.detail.empty()) jw["detail"] = w.detail;
    j["witnesses"].push_back(std::move(jw));
  }
  if (report.suppressed > 0) j["suppressed_witnesses"] = report.suppressed;
  j["notes"] = report.notes;
  return j;
}

std::string csv_header() { return "family,from,to,verdict,witness_count,first_witness_n"; }

std::string to_csv_row(const CongruenceReport& report) {
  std::ostringstream out;
  const std::uint64_t count = report.witnesses.size() + report.suppressed;
  out << report.family << ',' << report.from << ',' << report.to << ','
      << (report.pass() ? "pass" : "fail") << ',' << count << ',';
  if (!report.witnesses.empty()) out << report.witnesses.front().n;
  return out.str();
}

std::string to_text(const CongruenceReport& report) {
  std::ostringstream out;
  out << report.family << " [" << report.from << ".." << report.to << "]: "
      << (report.pass() ? "pass" : "fail") << '\n';
  for (const Witness& w : report.witnesses) {
    out << "  n=" << w.n << " remainder=" << w.remainder;
    if (!w.detail.empty()) out << " (" << w.detail << ")";
    out << '\n';
  }
  if (report.suppressed > 0) out << "  ... " << report.suppressed << " more witnesses\n";
  for (const std::string& note : report.notes) out << "  note: " << note << '\n';
  return out.str();
}

}  // namespace eg
