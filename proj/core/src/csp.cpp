#include "eg/csp.hpp"

namespace eg {

FixedPointProfile profile(const QSequence& qseq, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("profile: n must be >= 1");
  const QPoly a = qseq.term(n);
  // the value depends only on gcd(n, i), so evaluate once per divisor class
  std::map<std::uint64_t, std::optional<Int>> per_gcd;
  for (std::uint64_t g : divisors(factorize(n))) per_gcd[g] = eval_at_root(a, n, g % n);
  FixedPointProfile prof{n, {}};
  prof.values.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    prof.values.push_back(per_gcd.at(i == 0 ? n : gcd_u64(n, i)));
  }
  return prof;
}

OrbitTable realizable(const FixedPointProfile& prof) {
  OrbitTable table;
  const std::uint64_t n = prof.n;
  if (n == 0 || prof.values.size() != n) {
    table.reason = "malformed profile";
    return table;
  }
  // collect Fix(g) per gcd class, rejecting non-integer or inconsistent entries
  std::map<std::uint64_t, Int> fix;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!prof.values[i]) {
      table.reason = "non-integer value at i=" + std::to_string(i);
      return table;
    }
    const std::uint64_t g = i == 0 ? n : gcd_u64(n, i);
    auto [it, inserted] = fix.emplace(g, *prof.values[i]);
    if (!inserted && it->second != *prof.values[i]) {
      table.reason = "values disagree within gcd class g=" + std::to_string(g);
      return table;
    }
  }
  // Fix(g) = sum_{d|g} m_d, so m_d = sum_{e|d} mu(d/e) Fix(e)
  for (std::uint64_t d : divisors(factorize(n))) {
    Int m = 0;
    for (std::uint64_t e : divisors(factorize(d))) {
      const int mu = mobius(factorize(d / e));
      if (mu != 0) m += mu * fix.at(e);
    }
    if (m < 0) {
      table.reason = "negative element count " + m.get_str() + " for orbit size " +
                     std::to_string(d);
      return table;
    }
    Int orbits, rem;
    mpz_tdiv_qr(orbits.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t(),
                Int(static_cast<unsigned long>(d)).get_mpz_t());
    if (rem != 0) {
      table.reason = "element count " + m.get_str() + " not divisible by orbit size " +
                     std::to_string(d);
      return table;
    }
    if (orbits != 0) table.orbit_counts[d] = orbits;
  }
  table.realizable = true;
  return table;
}

TripleResult verify_standard_triple(const QSequence& qseq, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("verify_standard_triple: n must be >= 1");
  // precondition: a_d(1) != 0 whenever n/d is not 1 or a prime power
  for (std::uint64_t d : divisors(factorize(n))) {
    const FactoredInt quo = factorize(n / d);
    if (quo.is_one() || quo.is_prime_power()) continue;
    if (qseq.term(d).eval_at_one() == 0) {
      return {TripleVerdict::PreconditionUnmet,
              "a_" + std::to_string(d) + "(1) = 0 with n/d = " + std::to_string(n / d) +
                  " not a prime power"};
    }
  }
  const FixedPointProfile prof = profile(qseq, n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t g = i == 0 ? n : gcd_u64(n, i);
    const Int expected = qseq.term(g).eval_at_one();
    if (!prof.values[i] || *prof.values[i] != expected) {
      return {TripleVerdict::Fail,
              "a_n(omega^" + std::to_string(i) + ") != a_" + std::to_string(g) + "(1) = " +
                  expected.get_str()};
    }
  }
  const OrbitTable table = realizable(prof);
  if (!table.realizable) return {TripleVerdict::Fail, "profile not realizable: " + table.reason};
  return {TripleVerdict::Pass, {}};
}

TripleResult verify_spf_triple(PrimeOrder order, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("verify_spf_triple: n must be >= 1");
  if (n == 1) return {TripleVerdict::Pass, "X_1 is the empty set"};
  const std::uint64_t s = prime_factor_rank(factorize(n), 1, order);
  const FixedPointProfile prof = profile(q_prime_factor_seq(order, 1), n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Int expected = i % s == 0 ? Int(static_cast<unsigned long>(s)) : Int(0);
    if (!prof.values[i] || *prof.values[i] != expected) {
      return {TripleVerdict::Fail, "profile value at i=" + std::to_string(i) + " is not " +
                                       expected.get_str()};
    }
  }
  const OrbitTable table = realizable(prof);
  if (!table.realizable) return {TripleVerdict::Fail, "profile not realizable: " + table.reason};
  Int total = 0;
  for (const auto& [d, count] : table.orbit_counts) total += count * static_cast<unsigned long>(d);
  if (total != static_cast<unsigned long>(s)) {
    return {TripleVerdict::Fail, "total cardinality " + total.get_str() + " != " +
                                     std::to_string(s)};
  }
  return {TripleVerdict::Pass, {}};
}

}  // namespace eg
