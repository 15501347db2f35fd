// egseq: classify integer and q-polynomial sequences against the
// Euler/Gauss/Euler-Gauss congruence families, verify CSP triples, and emit
// JSON/CSV/text reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eg/congruence.hpp"
#include "eg/csp.hpp"
#include "eg/qcongruence.hpp"

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
  std::string seq_family;
  std::string params_json = "{}";
  std::string bfile_path;
  bool shift_offset = false;
  std::uint64_t max_n = 100;
  std::uint64_t index_n = 0;
  std::string prime_set = "all";
  std::uint64_t prime = 0;
  std::string format = "json";
  std::string output;
  eg::CheckOptions check;
};

eg::Int int_from_json(const json& j) {
  if (j.is_string()) return eg::Int(j.get<std::string>());
  return eg::Int(static_cast<long>(j.get<long long>()));
}

eg::SequenceSpec sequence_spec_from_json(const std::string& family, const json& params) {
  eg::SequenceSpec spec;
  spec.family = family;
  if (params.contains("base")) spec.base = int_from_json(params["base"]);
  if (params.contains("k")) spec.k = params["k"].get<unsigned>();
  if (params.contains("matrix")) {
    for (const auto& row : params["matrix"]) {
      std::vector<eg::Int> r;
      for (const auto& v : row) r.push_back(int_from_json(v));
      spec.matrix.push_back(std::move(r));
    }
  }
  if (params.contains("table")) {
    const json& t = params["table"];
    if (t.contains("default")) spec.table.fallback = int_from_json(t["default"]);
    if (t.contains("entries")) {
      for (const auto& e : t["entries"]) {
        spec.table.entries[{e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>()}] =
            int_from_json(e.at(2));
      }
    }
  }
  if (params.contains("input")) {
    const json& in = params["input"];
    auto inner = sequence_spec_from_json(in.at("family").get<std::string>(),
                                         in.value("params", json::object()));
    spec.input = std::make_shared<eg::IntegerSequence>(eg::make_sequence(inner));
  }
  return spec;
}

eg::IntegerSequence build_sequence(const CommonOpts& o) {
  if (!o.bfile_path.empty()) {
    std::ifstream in(o.bfile_path);
    if (!in) throw std::runtime_error("cannot open b-file: " + o.bfile_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return eg::parse_bfile(buf.str(), o.shift_offset).seq;
  }
  if (o.seq_family.empty()) throw std::runtime_error("no sequence given: use --seq or --bfile");
  return eg::make_sequence(sequence_spec_from_json(o.seq_family, json::parse(o.params_json)));
}

eg::QSequence build_qsequence(const CommonOpts& o) {
  if (o.seq_family.empty()) throw std::runtime_error("no sequence given: use --seq");
  const json params = json::parse(o.params_json);
  eg::QSequenceSpec spec;
  spec.family = o.seq_family;
  if (params.contains("k")) spec.k = params["k"].get<unsigned>();
  if (params.contains("terms")) {
    for (const auto& [key, coeffs] : params["terms"].items()) {
      std::vector<eg::Int> c;
      for (const auto& v : coeffs) c.push_back(int_from_json(v));
      spec.terms[std::stoull(key)] = eg::QPoly::from_coeffs(std::move(c));
    }
  }
  return eg::make_qsequence(spec);
}

void write_out(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + o.output);
    out << text;
  }
}

int emit_reports(const CommonOpts& o, const std::vector<eg::CongruenceReport>& reports) {
  std::ostringstream out;
  if (o.format == "json") {
    if (reports.size() == 1) {
      out << eg::to_json(reports[0]).dump(2) << '\n';
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(eg::to_json(r));
      out << arr.dump(2) << '\n';
    }
  } else if (o.format == "csv") {
    out << eg::csv_header() << '\n';
    for (const auto& r : reports) out << eg::to_csv_row(r) << '\n';
  } else {
    for (const auto& r : reports) out << eg::to_text(r);
  }
  write_out(o, out.str());
  for (const auto& r : reports) {
    if (!r.pass()) return 1;
  }
  return 0;
}

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool with_seq = true) {
  if (with_seq) {
    cmd->add_option("--seq", o.seq_family, "catalog sequence family id");
    cmd->add_option("--params", o.params_json, "JSON parameters for the family");
    cmd->add_option("--bfile", o.bfile_path, "OEIS b-file path (integer sequences)");
    cmd->add_flag("--shift-offset", o.shift_offset, "re-index a 0-based b-file from 1");
  }
  cmd->add_option("--max-n", o.max_n, "range bound N");
  cmd->add_option("--prime-set", o.prime_set, "prime set: all, odd, or e.g. 2,3,5");
  cmd->add_option("--format", o.format, "output format: json, csv, text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--output", o.output, "write the report to a file instead of stdout");
  cmd->add_option("--witness-cap", o.check.witness_cap, "max witnesses per report");
  cmd->add_option("--degree-cap", o.check.degree_cap, "abort q-checks above this degree");
  cmd->add_option("--workers", o.check.workers, "worker threads for per-index checks");
}

eg::CongruenceReport triple_report(const std::string& family, std::uint64_t n,
                                   const eg::TripleResult& result,
                                   const eg::FixedPointProfile* prof) {
  eg::CongruenceReport report{.family = family, .from = n, .to = n};
  switch (result.verdict) {
    case eg::TripleVerdict::Pass:
      report.notes.push_back("verdict: pass");
      break;
    case eg::TripleVerdict::PreconditionUnmet:
      report.notes.push_back("verdict: precondition-unmet");
      report.notes.push_back(result.detail);
      break;
    case eg::TripleVerdict::Fail:
      report.add_witness(10, n, "csp-fail", result.detail);
      break;
  }
  if (prof) {
    std::string values = "profile: [";
    for (std::size_t i = 0; i < prof->values.size(); ++i) {
      if (i) values += ",";
      values += prof->values[i] ? prof->values[i]->get_str() : std::string("non-integer");
    }
    report.notes.push_back(values + "]");
  }
  return report;
}

int run(int argc, char** argv) {
  CLI::App app{"congruence classifier for integer and q-polynomial sequences"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* gen = app.add_subcommand("gen", "emit sequence terms as b-file lines");
  add_common_flags(gen, o);

  auto* check = app.add_subcommand("check", "run one integer congruence check");
  std::string check_family;
  check->add_option("family", check_family,
                    "euler | gauss | pairwise | gauss_wrt | euler_gauss | strong")
      ->required();
  check->add_option("--prime", o.prime, "prime for the pairwise check");
  add_common_flags(check, o);

  auto* classify_cmd = app.add_subcommand("classify", "full integer battery + containment audit");
  add_common_flags(classify_cmd, o);

  auto* qcheck = app.add_subcommand("qcheck", "run one polynomial congruence check");
  std::string qcheck_family;
  qcheck->add_option("family", qcheck_family,
                     "euler | gauss | weak | modified_pairwise | gauss_wrt | modified_wrt | "
                     "euler_gauss | root_profile")
      ->required();
  qcheck->add_option("--prime", o.prime, "prime for pairwise-style checks");
  qcheck->add_option("--n", o.index_n, "index for root_profile");
  add_common_flags(qcheck, o);

  auto* lambert = app.add_subcommand("lambert", "Lambert coefficients b_n and exponents c_n");
  add_common_flags(lambert, o);

  auto* dual = app.add_subcommand("dual", "Alladi dual transform");
  add_common_flags(dual, o);

  auto* csp = app.add_subcommand("csp", "CSP triple verification");
  std::string csp_kind;
  csp->add_option("kind", csp_kind, "standard | spf | gpf")->required();
  csp->add_option("--n", o.index_n, "index n of the triple")->required();
  add_common_flags(csp, o);

  auto* conjecture = app.add_subcommand("conjecture", "A_n(q) divisibility scan");
  add_common_flags(conjecture, o);

  auto* factorq = app.add_subcommand("factorq", "coprime factorization of [n]_q");
  factorq->add_option("--n", o.index_n, "the integer n")->required();
  add_common_flags(factorq, o, /*with_seq=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const char* cache_dir = std::getenv("EGSEQ_CACHE_DIR");
  const std::string cache_file =
      cache_dir ? std::string(cache_dir) + "/cyclotomic-cache.txt" : std::string{};
  if (!cache_file.empty()) eg::load_cyclotomic_cache(cache_file);
  struct CacheSaver {
    std::string path;
    ~CacheSaver() {
      if (!path.empty()) eg::save_cyclotomic_cache(path);
    }
  } saver{cache_file};

  if (gen->parsed()) {
    const auto seq = build_sequence(o);
    std::ostringstream out;
    if (o.format == "json") {
      ordered_json j;
      j["family"] = seq.name();
      j["range"] = {{"from", 1}, {"to", o.max_n}};
      j["terms"] = ordered_json::array();
      for (std::uint64_t n = 1; n <= o.max_n; ++n) j["terms"].push_back(seq.term(n).get_str());
      out << j.dump(2) << '\n';
    } else {
      for (std::uint64_t n = 1; n <= o.max_n; ++n)
        out << n << ' ' << seq.term(n).get_str() << '\n';
    }
    write_out(o, out.str());
    return 0;
  }

  if (check->parsed()) {
    const auto seq = build_sequence(o);
    eg::CongruenceReport report;
    if (check_family == "euler") {
      report = eg::check_euler(seq, o.max_n, o.check);
    } else if (check_family == "gauss") {
      report = eg::check_gauss(seq, o.max_n, o.check);
    } else if (check_family == "pairwise") {
      if (o.prime == 0) throw std::runtime_error("pairwise requires --prime");
      report = eg::check_pairwise(seq, o.prime, o.max_n, o.check);
    } else if (check_family == "gauss_wrt") {
      report = eg::check_gauss_wrt(seq, eg::PrimeSet::parse(o.prime_set), o.max_n, o.check);
    } else if (check_family == "euler_gauss") {
      report = eg::check_euler_gauss(seq, o.max_n, o.check);
    } else if (check_family == "strong") {
      report = eg::check_strong_euler_gauss(seq, o.max_n, o.check);
    } else {
      throw std::runtime_error("unknown check family: " + check_family);
    }
    return emit_reports(o, {report});
  }

  if (classify_cmd->parsed()) {
    const auto seq = build_sequence(o);
    return emit_reports(o, eg::classify(seq, o.max_n, o.check));
  }

  if (qcheck->parsed()) {
    const auto qseq = build_qsequence(o);
    eg::CongruenceReport report;
    if (qcheck_family == "euler") {
      report = eg::q_check_euler(qseq, o.max_n, o.check);
    } else if (qcheck_family == "gauss") {
      report = eg::q_check_gauss(qseq, o.max_n, o.check);
    } else if (qcheck_family == "weak") {
      if (o.prime == 0) throw std::runtime_error("weak requires --prime");
      report = eg::q_check_weak(qseq, o.prime, o.max_n, o.check);
    } else if (qcheck_family == "modified_pairwise") {
      if (o.prime == 0) throw std::runtime_error("modified_pairwise requires --prime");
      report = eg::q_check_modified_pairwise(qseq, o.prime, o.max_n, o.check);
    } else if (qcheck_family == "gauss_wrt") {
      report = eg::q_check_gauss_wrt(qseq, eg::PrimeSet::parse(o.prime_set), o.max_n, o.check);
    } else if (qcheck_family == "modified_wrt") {
      report = eg::q_check_modified_wrt(qseq, eg::PrimeSet::parse(o.prime_set), o.max_n, o.check);
    } else if (qcheck_family == "euler_gauss") {
      report = eg::q_check_euler_gauss(qseq, o.max_n, o.check);
    } else if (qcheck_family == "root_profile") {
      if (o.index_n == 0) throw std::runtime_error("root_profile requires --n");
      report = eg::q_root_of_unity_profile(qseq, o.index_n, o.check);
    } else {
      throw std::runtime_error("unknown qcheck family: " + qcheck_family);
    }
    return emit_reports(o, {report});
  }

  if (lambert->parsed()) {
    const auto seq = build_sequence(o);
    const auto b = eg::lambert_coefficients(seq, o.max_n);
    const auto c = eg::exp_product_exponents(seq, o.max_n);
    const eg::PrimeSet S = eg::PrimeSet::parse(o.prime_set);
    const bool supported = eg::denominators_supported(c, S);
    std::ostringstream out;
    if (o.format == "json") {
      ordered_json j;
      j["family"] = "lambert(" + seq.name() + ")";
      j["range"] = {{"from", 1}, {"to", o.max_n}};
      j["b"] = ordered_json::array();
      j["c"] = ordered_json::array();
      for (const auto& v : b) j["b"].push_back(v.get_str());
      for (const auto& v : c) j["c"].push_back(v.get_str());
      j["denominator_support"] = S.describe();
      j["denominators_supported"] = supported;
      out << j.dump(2) << '\n';
    } else {
      out << "n b_n c_n\n";
      for (std::uint64_t n = 1; n <= o.max_n; ++n)
        out << n << ' ' << b[n - 1].get_str() << ' ' << c[n - 1].get_str() << '\n';
      out << "denominators supported by " << S.describe() << ": "
          << (supported ? "yes" : "no") << '\n';
    }
    write_out(o, out.str());
    return 0;
  }

  if (dual->parsed()) {
    const auto seq = build_sequence(o);
    const auto d = eg::alladi_dual(seq, o.max_n);
    std::ostringstream out;
    for (std::uint64_t n = 1; n <= o.max_n; ++n) out << n << ' ' << d.term(n).get_str() << '\n';
    write_out(o, out.str());
    return 0;
  }

  if (csp->parsed()) {
    eg::CongruenceReport report;
    if (csp_kind == "spf" || csp_kind == "gpf") {
      const eg::PrimeOrder order =
          csp_kind == "spf" ? eg::PrimeOrder::Smallest : eg::PrimeOrder::Greatest;
      const auto result = eg::verify_spf_triple(order, o.index_n);
      const auto prof = eg::profile(eg::q_prime_factor_seq(order, 1), o.index_n);
      report = triple_report("csp_" + csp_kind, o.index_n, result, &prof);
    } else if (csp_kind == "standard") {
      const auto qseq = build_qsequence(o);
      const auto result = eg::verify_standard_triple(qseq, o.index_n);
      const auto prof = eg::profile(qseq, o.index_n);
      report = triple_report("csp_standard(" + qseq.name() + ")", o.index_n, result, &prof);
    } else {
      throw std::runtime_error("unknown csp kind: " + csp_kind);
    }
    return emit_reports(o, {report});
  }

  if (conjecture->parsed()) {
    const auto qseq = build_qsequence(o);
    return emit_reports(o, {eg::conjecture_scan(qseq, o.max_n, o.check)});
  }

  if (factorq->parsed()) {
    const auto factors = eg::q_int_prime_factorization(eg::factorize(o.index_n));
    std::ostringstream out;
    if (o.format == "json") {
      ordered_json j;
      j["family"] = "factorq";
      j["n"] = o.index_n;
      j["factors"] = ordered_json::array();
      for (const auto& f : factors) j["factors"].push_back(eg::to_string(f));
      out << j.dump(2) << '\n';
    } else {
      out << "[" << o.index_n << "]_q =";
      for (const auto& f : factors) out << " (" << eg::to_string(f) << ")";
      out << '\n';
    }
    write_out(o, out.str());
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "egseq: " << e.what() << '\n';
    return 2;
  }
}
