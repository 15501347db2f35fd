#include <doctest.h>

#include <random>

#include "eg/congruence.hpp"
#include "eg/report.hpp"

using namespace eg;

namespace {

IntegerSequence family(const std::string& name) {
  SequenceSpec spec;
  spec.family = name;
  return make_sequence(spec);
}

}  // namespace

TEST_CASE("euler on geometric and power sequences") {
  SequenceSpec geo;
  geo.family = "geometric";
  geo.base = 2;
  CHECK(check_euler(make_sequence(geo), 300).pass());
  geo.base = -15;
  CHECK(check_euler(make_sequence(geo), 300).pass());

  SequenceSpec np;
  np.family = "npow";
  np.k = 1;
  const CongruenceReport r = check_euler(make_sequence(np), 20);
  CHECK(!r.pass());
  REQUIRE(!r.witnesses.empty());
  CHECK(r.witnesses[0].n == 4);
  CHECK(r.witnesses[0].remainder == "2");  // a_4 - a_2 raw difference
  CHECK(r.witnesses[0].detail == "p=2 p^r=4");
}

TEST_CASE("gauss verdicts on the classical sequences") {
  CHECK(check_gauss(family("lucas"), 300).pass());
  CHECK(check_gauss(family("perrin"), 300).pass());
  CHECK(check_gauss(family("sigma"), 300).pass());

  const CongruenceReport fib = check_gauss(family("fibonacci"), 10);
  CHECK(!fib.pass());
  std::vector<std::uint64_t> ns;
  for (const Witness& w : fib.witnesses) ns.push_back(w.n);
  CHECK(ns == std::vector<std::uint64_t>{3, 4, 5, 7, 8, 9});
  CHECK(fib.witnesses[0].remainder == "1");  // mu-sum at n = 3 is a_3 - a_1 = 1
}

TEST_CASE("matrix traces satisfy gauss") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    SequenceSpec spec;
    spec.family = "matrix_trace";
    spec.matrix.assign(3, std::vector<Int>(3));
    for (auto& row : spec.matrix)
      for (auto& x : row) x = entry(rng);
    CHECK(check_gauss(make_sequence(spec), 60).pass());
  }
}

TEST_CASE("divisor-sum transforms satisfy gauss by construction") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> val(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Int> g(80);
    for (auto& x : g) x = val(rng);
    SequenceSpec spec;
    spec.family = "divisor_sum_family";
    spec.input = std::make_shared<IntegerSequence>(sequence_from_terms("g", std::move(g)));
    CHECK(check_gauss(make_sequence(spec), 80).pass());
  }
}

TEST_CASE("pairwise congruences match the divisor-sum form") {
  // the divisor-sum form passes iff every per-prime pairwise check does
  for (const char* name : {"lucas", "fibonacci", "sigma", "ce_parity", "ce_2k1"}) {
    const IntegerSequence seq = family(name);
    const bool gauss = check_gauss(seq, 120).pass();
    bool pairwise = true;
    for (std::uint64_t p : primes_upto(120)) pairwise = pairwise && check_pairwise(seq, p, 120).pass();
    CHECK(gauss == pairwise);
  }
  CHECK_THROWS_AS(check_pairwise(family("lucas"), 4, 10), std::invalid_argument);
}

TEST_CASE("gauss with restricted prime support") {
  // a_n = 2n: the p = 2 steps gain a factor of 2, other primes do not
  SequenceSpec ds;
  ds.family = "identity";
  std::vector<Int> doubled;
  for (unsigned long n = 1; n <= 120; ++n) doubled.emplace_back(2 * n);
  const IntegerSequence twice_n = sequence_from_terms("2n", std::move(doubled));

  CHECK(check_gauss_wrt(twice_n, PrimeSet::parse("2"), 120).pass());
  const CongruenceReport at3 = check_gauss_wrt(twice_n, PrimeSet::parse("3"), 120);
  CHECK(!at3.pass());
  CHECK(at3.witnesses[0].n == 3);  // a_3 - a_1 = 4, not 0 mod 3
  CHECK(!check_gauss(twice_n, 120).pass());

  // truncation note present for open-ended sets only
  CHECK(check_gauss_wrt(family("lucas"), PrimeSet::all(), 40).notes[0] ==
        "primes from all primes checked up to 40");

  // ce_parity depends only on the 2-adic valuation: fine at odd primes, not at 2
  const IntegerSequence cp = family("ce_parity");
  CHECK(check_gauss_wrt(cp, PrimeSet::odd(), 200).pass());
  CHECK(!check_gauss_wrt(cp, PrimeSet::parse("2"), 200).pass());
}

TEST_CASE("euler-gauss separates from gauss at the piecewise counterexample") {
  const IntegerSequence c12 = family("ce_12");
  CHECK(check_euler_gauss(c12, 48).pass());
  CHECK(check_euler(c12, 48).pass());
  const CongruenceReport pw = check_pairwise(c12, 2, 24);
  CHECK(!pw.pass());
  REQUIRE(!pw.witnesses.empty());
  CHECK(pw.witnesses[0].n == 12);
  CHECK(pw.witnesses[0].remainder == "-3");  // a_12 - a_6 = 1 - 4
  CHECK(!check_gauss(c12, 24).pass());
}

TEST_CASE("euler-gauss witness fields") {
  // a_n = n + 1 fails first at n = 2: A+ = a_2 = 3, A- = a_1 = 2
  std::vector<Int> terms;
  for (unsigned long n = 1; n <= 10; ++n) terms.emplace_back(n + 1);
  const CongruenceReport r = check_euler_gauss(sequence_from_terms("n+1", std::move(terms)), 10);
  CHECK(!r.pass());
  REQUIRE(!r.witnesses.empty());
  CHECK(r.witnesses[0].n == 2);
  CHECK(r.witnesses[0].remainder == "1");
  CHECK(r.witnesses[0].detail == "A+=3 A-=2");
}

TEST_CASE("strong euler-gauss on divisor products") {
  // a_n = prod_{d|n} (d b_d + 1) satisfies the strong form: the mu-signed
  // product ratio telescopes to n b_n + 1, a unit congruent to 1 mod n
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> val(-10, 10);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Int> b(60);
    for (auto& x : b) x = val(rng);
    if (b[0] == -1) b[0] = 0;  // keep a_1 = b_1 + 1 nonzero
    SequenceSpec spec;
    spec.family = "product_family";
    spec.input = std::make_shared<IntegerSequence>(sequence_from_terms("b", std::move(b)));
    const IntegerSequence a = make_sequence(spec);
    CHECK(check_strong_euler_gauss(a, 60).pass());
    CHECK(check_gauss(a, 60).pass());  // containment: strong implies the divisor-sum form
  }
}

TEST_CASE("strong euler-gauss failure modes") {
  // all-zero sequence: both products vanish everywhere
  SequenceSpec zero;
  zero.family = "constant";
  zero.base = 0;
  const CongruenceReport ind = check_strong_euler_gauss(make_sequence(zero), 6);
  CHECK(!ind.pass());
  CHECK(ind.witnesses[0].remainder == "indeterminate");
  CHECK(ind.witnesses[0].detail == "A+ = A- = 0");

  // 2^n: at n = 2 the reduced parts are u = 2, v = 1 with gcd(u, 2) = 2
  SequenceSpec geo;
  geo.family = "geometric";
  geo.base = 2;
  const CongruenceReport ninv = check_strong_euler_gauss(make_sequence(geo), 8);
  CHECK(!ninv.pass());
  CHECK(ninv.witnesses[0].n == 2);
  CHECK(ninv.witnesses[0].remainder == "non-invertible");
  CHECK(ninv.witnesses[0].detail == "u=2 v=1");

  // lucas: fails at n = 6 where A+ = 18, A- = 12 reduce to u = 3, v = 2
  const CongruenceReport lucas = check_strong_euler_gauss(family("lucas"), 10);
  CHECK(!lucas.pass());
  CHECK(lucas.witnesses[0].n == 6);
  CHECK(lucas.witnesses[0].remainder == "non-invertible");
}

TEST_CASE("witness cap and suppression") {
  const CongruenceReport r = check_gauss(family("fibonacci"), 100, {.witness_cap = 3});
  CHECK(r.witnesses.size() == 3);
  CHECK(r.suppressed > 0);
  CHECK(!r.pass());
  const CongruenceReport full = check_gauss(family("fibonacci"), 100, {.witness_cap = 100000});
  CHECK(full.suppressed == 0);
  CHECK(r.suppressed == full.witnesses.size() - 3);
  CHECK(r.witnesses[0].n == full.witnesses[0].n);
}

TEST_CASE("worker count does not change reports") {
  for (unsigned workers : {2u, 3u, 8u}) {
    const CheckOptions par{.witness_cap = 5, .workers = workers};
    const CheckOptions seq{.witness_cap = 5, .workers = 1};
    for (const char* name : {"fibonacci", "lucas", "ce_12"}) {
      const IntegerSequence s = family(name);
      CHECK(to_json(check_gauss(s, 150, par)) == to_json(check_gauss(s, 150, seq)));
      CHECK(to_json(check_euler_gauss(s, 150, par)) == to_json(check_euler_gauss(s, 150, seq)));
      CHECK(to_json(check_strong_euler_gauss(s, 150, par)) ==
            to_json(check_strong_euler_gauss(s, 150, seq)));
    }
  }
}

TEST_CASE("classify audits the implication chain") {
  const auto lucas = classify(family("lucas"), 60);
  REQUIRE(lucas.size() == 11);  // 4 checks + 6 pairwise + audit
  CHECK(lucas[0].family == "euler");
  CHECK(lucas[1].family == "gauss");
  CHECK(lucas[1].pass());
  const CongruenceReport& audit = lucas.back();
  CHECK(audit.family == "containment-audit");
  CHECK(audit.pass());
  CHECK(audit.notes[1] == "gauss=pass");
  CHECK(audit.notes[3] == "strong_euler_gauss=fail");

  const auto fib = classify(family("fibonacci"), 60);
  CHECK(!fib[1].pass());
  CHECK(fib.back().pass());
  CHECK(fib.back().notes[0] == "euler=fail");
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(check_euler(family("lucas"), 0), std::invalid_argument);
  CHECK_THROWS_AS(check_gauss(family("lucas"), 0), std::invalid_argument);
  CHECK_THROWS_AS(check_euler_gauss(family("lucas"), 0), std::invalid_argument);
}

TEST_CASE("report serialization") {
  CongruenceReport r{.family = "gauss", .from = 1, .to = 50};
  CHECK(to_json(r)["verdict"] == "pass");
  CHECK(to_csv_row(r) == "gauss,1,50,pass,0,");
  r.add_witness(10, 6, "3", "divisor sum mod 6");
  CHECK(to_json(r)["verdict"] == "fail");
  CHECK(to_json(r)["witnesses"][0]["n"] == 6);
  CHECK(to_csv_row(r) == "gauss,1,50,fail,1,6");
  CHECK(csv_header() == "family,from,to,verdict,witness_count,first_witness_n");
}
