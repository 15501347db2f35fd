#include <doctest.h>

#include "eg/sequences.hpp"

using namespace eg;

namespace {

IntegerSequence family(const std::string& name) {
  SequenceSpec spec;
  spec.family = name;
  return make_sequence(spec);
}

std::vector<Int> front(const IntegerSequence& s, std::uint64_t N) {
  std::vector<Int> out;
  for (std::uint64_t n = 1; n <= N; ++n) out.push_back(s.term(n));
  return out;
}

}  // namespace

TEST_CASE("basic recurrences") {
  CHECK(front(family("lucas"), 8) == std::vector<Int>{1, 3, 4, 7, 11, 18, 29, 47});
  CHECK(front(family("fibonacci"), 8) == std::vector<Int>{1, 1, 2, 3, 5, 8, 13, 21});
  CHECK(front(family("perrin"), 8) == std::vector<Int>{0, 2, 3, 2, 5, 5, 7, 10});
  // perrin satisfies P(p) = 0 (mod p) at primes
  const IntegerSequence perrin = family("perrin");
  for (std::uint64_t p : primes_upto(100)) CHECK(perrin.term(p) % static_cast<unsigned long>(p) == 0);
}

TEST_CASE("geometric and powers") {
  SequenceSpec spec;
  spec.family = "geometric";
  spec.base = 3;
  const IntegerSequence geo = make_sequence(spec);
  CHECK(front(geo, 4) == std::vector<Int>{3, 9, 27, 81});

  SequenceSpec np;
  np.family = "npow";
  np.k = 2;
  const IntegerSequence sq = make_sequence(np);
  CHECK(front(sq, 5) == std::vector<Int>{0, 4, 9, 16, 25});
}

TEST_CASE("apery against the closed-form oracle") {
  // a_n = sum_k C(n,k)^2 C(n+k,k)^2, computed with exact binomials
  auto oracle = [](unsigned long n) {
    Int total = 0;
    for (unsigned long k = 0; k <= n; ++k) {
      Int b1, b2;
      mpz_bin_uiui(b1.get_mpz_t(), n, k);
      mpz_bin_uiui(b2.get_mpz_t(), n + k, k);
      total += b1 * b1 * b2 * b2;
    }
    return total;
  };
  const IntegerSequence apery = family("apery");
  CHECK(front(apery, 5) == std::vector<Int>{5, 73, 1445, 33001, 819005});
  for (unsigned long n = 1; n <= 30; ++n) CHECK(apery.term(n) == oracle(n));
}

TEST_CASE("sigma") {
  const IntegerSequence sigma = family("sigma");
  CHECK(front(sigma, 8) == std::vector<Int>{1, 3, 4, 7, 6, 12, 8, 15});
}

TEST_CASE("matrix_trace cross-checks lucas") {
  SequenceSpec spec;
  spec.family = "matrix_trace";
  spec.matrix = {{Int(0), Int(1)}, {Int(1), Int(1)}};
  const IntegerSequence tr = make_sequence(spec);
  const IntegerSequence lucas = family("lucas");
  for (std::uint64_t n = 1; n <= 40; ++n) CHECK(tr.term(n) == lucas.term(n));
  // out-of-order access must agree with sequential recomputation
  const IntegerSequence tr2 = make_sequence(spec);
  CHECK(tr2.term(25) == lucas.term(25));
  CHECK(tr2.term(3) == lucas.term(3));
  CHECK(tr2.term(30) == lucas.term(30));

  SequenceSpec bad;
  bad.family = "matrix_trace";
  bad.matrix = {{Int(1), Int(2)}};
  CHECK_THROWS_AS(make_sequence(bad), std::invalid_argument);
}

TEST_CASE("prime-factor families") {
  const IntegerSequence spf = family("spf");
  const IntegerSequence gpf = family("gpf");
  CHECK(front(spf, 10) == std::vector<Int>{0, 2, 3, 2, 5, 2, 7, 2, 3, 2});
  CHECK(front(gpf, 10) == std::vector<Int>{0, 2, 3, 2, 5, 3, 7, 2, 3, 5});

  SequenceSpec k2;
  k2.family = "k_spf";
  k2.k = 2;
  const IntegerSequence spf2 = make_sequence(k2);
  CHECK(spf2.term(6) == 3);
  CHECK(spf2.term(8) == 2);   // saturates to gpf on prime powers
  CHECK(spf2.term(30) == 3);
  CHECK(spf2.term(1) == 0);
}

TEST_CASE("derived divisor families") {
  SequenceSpec ident;
  ident.family = "identity";
  auto input = std::make_shared<IntegerSequence>(make_sequence(ident));

  SequenceSpec ds;
  ds.family = "divisor_sum_family";
  ds.input = input;
  const IntegerSequence dsum = make_sequence(ds);
  // sum_{d|n} d*d
  for (std::uint64_t n = 1; n <= 60; ++n) {
    Int expect = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) expect += Int(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
    CHECK(dsum.term(n) == expect);
  }

  SequenceSpec pf;
  pf.family = "product_family";
  pf.input = input;
  const IntegerSequence prod = make_sequence(pf);
  // prod_{d|n} (d*d + 1)
  CHECK(prod.term(1) == 2);
  CHECK(prod.term(6) == Int(2) * 5 * 10 * 37);

  SequenceSpec missing;
  missing.family = "product_family";
  CHECK_THROWS_AS(make_sequence(missing), std::invalid_argument);
}

TEST_CASE("rad and mu_rad families") {
  SequenceSpec rf;
  rf.family = "rad_family";
  rf.table.fallback = 1;  // f_p identically 1: a_n = sum of distinct primes
  const IntegerSequence rad1 = make_sequence(rf);
  CHECK(rad1.term(12) == 5);
  CHECK(rad1.term(1) == 0);
  rf.table.entries[{2, 6}] = 10;  // f_2(rad(n)=6) = 10
  const IntegerSequence rad2 = make_sequence(rf);
  CHECK(rad2.term(12) == 2 * 10 + 3);
  CHECK(rad2.term(4) == 2);  // rad = 2, table miss -> fallback

  SequenceSpec mf;
  mf.family = "mu_rad_family";
  mf.table.fallback = 1;  // g_d identically 1 (d > 1): a_n = sum mu(d) d
  const IntegerSequence mu1 = make_sequence(mf);
  // n = 6: -2 - 3 + 6 = 1
  CHECK(mu1.term(6) == 1);
  // n = 4: only d = 2 contributes (d=1 skipped, mu(4)=0)
  CHECK(mu1.term(4) == -2);
  CHECK(mu1.term(1) == 0);
}

TEST_CASE("piecewise counterexample families pinned") {
  const IntegerSequence eps = family("ce_epsilon_prime_power");
  CHECK(front(eps, 12) == std::vector<Int>{1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0});

  const IntegerSequence c2 = family("ce_2k1");
  CHECK(c2.term(1) == 1);
  CHECK(c2.term(2) == 3);
  CHECK(c2.term(4) == 7);
  CHECK(c2.term(12) == 7);
  CHECK(c2.term(3) == 1);

  const IntegerSequence c12 = family("ce_12");
  CHECK(c12.term(1) == 4);
  CHECK(c12.term(6) == 4);
  CHECK(c12.term(12) == 1);
  CHECK(c12.term(24) == 7);
  CHECK(c12.term(48) == 19);

  const IntegerSequence c615 = family("ce_6_15");
  CHECK(c615.term(6) == 1);
  CHECK(c615.term(12) == 3);
  CHECK(c615.term(24) == 7);
  CHECK(c615.term(15) == 1);
  CHECK(c615.term(45) == 16);
  CHECK(c615.term(7) == 6);
  CHECK(c615.term(30) == 1);

  const IntegerSequence par = family("ce_parity");
  CHECK(front(par, 8) == std::vector<Int>{1, 1, 1, 3, 1, 1, 1, 3});
}

TEST_CASE("sequence_from_terms range enforcement") {
  const IntegerSequence s = sequence_from_terms("short", {Int(7), Int(8)});
  CHECK(s.term(1) == 7);
  CHECK(s.term(2) == 8);
  CHECK(s.max_index() == 2);
  CHECK_THROWS_AS(s.term(3), std::out_of_range);
  CHECK_THROWS_AS(s.term(0), std::out_of_range);
}

TEST_CASE("b-file parsing") {
  const BFileResult ok = parse_bfile("# comment\n1 5\n2 -7\n\n3 123456789012345678901\n");
  CHECK(!ok.shifted);
  CHECK(ok.seq.term(1) == 5);
  CHECK(ok.seq.term(2) == -7);
  CHECK(ok.seq.term(3) == Int("123456789012345678901"));
  CHECK(ok.seq.max_index() == 3);

  const BFileResult crlf = parse_bfile("1 2\r\n2 3\r\n");
  CHECK(crlf.seq.term(2) == 3);

  const BFileResult shifted = parse_bfile("0 10\n1 20\n", true);
  CHECK(shifted.shifted);
  CHECK(shifted.seq.term(1) == 10);
  CHECK(shifted.seq.term(2) == 20);

  CHECK_THROWS_AS(parse_bfile("0 10\n1 20\n"), std::runtime_error);       // offset 0, no flag
  CHECK_THROWS_AS(parse_bfile("1 2\n3 4\n"), std::runtime_error);         // gap
  CHECK_THROWS_AS(parse_bfile("1 2\n1 3\n"), std::runtime_error);         // duplicate
  CHECK_THROWS_AS(parse_bfile("2 5\n"), std::runtime_error);              // wrong start
  CHECK_THROWS_AS(parse_bfile("1 2 3\n"), std::runtime_error);            // trailing token
  CHECK_THROWS_AS(parse_bfile("1 xyz\n"), std::runtime_error);            // bad value
  CHECK_THROWS_AS(parse_bfile("# only comments\n"), std::runtime_error);  // empty
}

TEST_CASE("lambert coefficients of sigma are the identity") {
  const auto b = lambert_coefficients(family("sigma"), 200);
  for (std::uint64_t n = 1; n <= 200; ++n) CHECK(b[n - 1] == static_cast<unsigned long>(n));
}

TEST_CASE("lambert coefficients invert back to the sequence") {
  const IntegerSequence lucas = family("lucas");
  const auto b = lambert_coefficients(lucas, 200);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    Int sum = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) sum += b[d - 1];
    CHECK(sum == lucas.term(n));
  }
}

TEST_CASE("exp-product exponents") {
  const auto c = exp_product_exponents(family("lucas"), 60);
  for (const Rat& x : c) CHECK(x.get_den() == 1);  // divisor sums divisible by n

  const auto c12 = exp_product_exponents(family("ce_12"), 12);
  CHECK(c12[11] == Rat(-1, 4));

  CHECK(denominators_supported({Rat(1), Rat(-1, 4), Rat(5, 6)}, PrimeSet::parse("2,3")));
  CHECK(!denominators_supported({Rat(1), Rat(-1, 4), Rat(5, 6)}, PrimeSet::parse("2")));
  CHECK(denominators_supported({Rat(3), Rat(-2)}, PrimeSet::explicit_set({})));
  CHECK(denominators_supported({Rat(1, 8)}, PrimeSet::all()));
  CHECK(!denominators_supported({Rat(1, 6)}, PrimeSet::odd()));
}

TEST_CASE("alladi duality swaps spf and gpf") {
  const IntegerSequence spf = family("spf");
  const IntegerSequence gpf = family("gpf");
  const IntegerSequence dual_spf = alladi_dual(spf, 500);
  const IntegerSequence dual_gpf = alladi_dual(gpf, 500);
  for (std::uint64_t n = 2; n <= 500; ++n) {
    CHECK(dual_spf.term(n) == gpf.term(n));
    CHECK(dual_gpf.term(n) == spf.term(n));
  }
  // duality is an involution on the whole range, n = 1 included
  const IntegerSequence twice = alladi_dual(dual_spf, 500);
  for (std::uint64_t n = 1; n <= 500; ++n) CHECK(twice.term(n) == spf.term(n));
}
