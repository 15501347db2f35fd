#include "eg/qcongruence.hpp"

#include <algorithm>
#include <map>

namespace eg {

namespace {

void check_degree(const QPoly& a, const CheckOptions& opts, const std::string& where) {
  if (a.degree() > opts.degree_cap) {
    throw std::runtime_error(where + ": intermediate degree " + std::to_string(a.degree()) +
                             " exceeds the cap " + std::to_string(opts.degree_cap) +
                             " (raise --degree-cap to proceed)");
  }
}

QPoly gauss_sum(const QSequence& qseq, std::uint64_t n, std::uint64_t m = 1) {
  // sum_{d|n} mu(d) a_{nm/d}(q^d)
  QPoly s;
  for (std::uint64_t d : divisors(factorize(n))) {
    const int mu = mobius(factorize(d));
    if (mu == 0) continue;
    QPoly t = substitute_power(qseq.term(n * m / d), d);
    if (mu == 1) {
      s += t;
    } else {
      s -= t;
    }
  }
  return s;
}

void finish(CongruenceReport& report, std::vector<Witness> found, const CheckOptions& opts) {
  std::sort(found.begin(), found.end(), [](const Witness& a, const Witness& b) {
    return a.n != b.n ? a.n < b.n : a.detail < b.detail;
  });
  for (Witness& w : found) report.add_witness(opts.witness_cap, w.n, std::move(w.remainder),
                                              std::move(w.detail));
}

void q_pairwise_into(const QSequence& qseq, std::uint64_t p, std::uint64_t N, bool modified,
                     const CheckOptions& opts, std::vector<Witness>& out) {
  for (std::uint64_t pr = p; pr <= N; pr *= p) {
    for (std::uint64_t m = 1; m * pr <= N; ++m) {
      if (modified && m % p == 0) continue;
      const QPoly diff =
          qseq.term(pr * m) - substitute_power(qseq.term(pr / p * m), p);
      check_degree(diff, opts, "q-pairwise");
      const QPoly modulus = q_integer(pr, modified ? m : 1);
      const QPoly rem = divrem(diff, modulus).remainder;
      if (!rem.is_zero()) {
        out.push_back({pr * m, to_string(rem),
                       "p=" + std::to_string(p) + " p^r=" + std::to_string(pr) +
                           " m=" + std::to_string(m)});
      }
    }
    if (pr > N / p) break;
  }
}

bool support_in(const FactoredInt& n, const PrimeSet& S) {
  return std::all_of(n.factors.begin(), n.factors.end(),
                     [&](const PrimePower& pp) { return S.contains(pp.prime); });
}

std::string wrt_note(const PrimeSet& S, std::uint64_t N) {
  return "indices with prime support in " + S.describe() +
         (S.truncated() ? ", checked up to " + std::to_string(N) : "");
}

}  // namespace

CongruenceReport q_check_euler(const QSequence& qseq, std::uint64_t N, const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("q_check_euler: N must be >= 1");
  CongruenceReport report{.family = "q_euler", .from = 1, .to = N};
  for (std::uint64_t p : primes_upto(N)) {
    for (std::uint64_t pr = p; pr <= N; pr *= p) {
      const QPoly diff = qseq.term(pr) - substitute_power(qseq.term(pr / p), p);
      check_degree(diff, opts, "q_check_euler");
      const QPoly rem = divrem(diff, q_integer(pr)).remainder;
      if (!rem.is_zero()) {
        report.add_witness(opts.witness_cap, pr, to_string(rem),
                           "p=" + std::to_string(p) + " p^r=" + std::to_string(pr));
      }
      if (pr > N / p) break;
    }
  }
  return report;
}

CongruenceReport q_check_gauss(const QSequence& qseq, std::uint64_t N, const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("q_check_gauss: N must be >= 1");
  CongruenceReport report{.family = "q_gauss", .from = 1, .to = N};
  for (std::uint64_t n = 2; n <= N; ++n) {
    const QPoly s = gauss_sum(qseq, n);
    check_degree(s, opts, "q_check_gauss");
    const QPoly rem = divrem(s, q_integer(n)).remainder;
    if (!rem.is_zero()) {
      report.add_witness(opts.witness_cap, n, to_string(rem), "mod [" + std::to_string(n) + "]_q");
    }
  }
  return report;
}

CongruenceReport q_check_weak(const QSequence& qseq, std::uint64_t p, std::uint64_t N,
                              const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("q_check_weak: N must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("q_check_weak: p must be prime");
  CongruenceReport report{.family = "q_weak(p=" + std::to_string(p) + ")", .from = 1, .to = N};
  std::vector<Witness> found;
  q_pairwise_into(qseq, p, N, /*modified=*/false, opts, found);
  finish(report, std::move(found), opts);
  return report;
}

CongruenceReport q_check_modified_pairwise(const QSequence& qseq, std::uint64_t p, std::uint64_t N,
                                           const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("q_check_modified_pairwise: N must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("q_check_modified_pairwise: p must be prime");
  CongruenceReport report{.family = "q_modified_pairwise(p=" + std::to_string(p) + ")",
                          .from = 1,
                          .to = N};
  std::vector<Witness> found;
  q_pairwise_into(qseq, p, N, /*modified=*/true, opts, found);
  finish(report, std::move(found), opts);
  return report;
}

CongruenceReport q_check_gauss_wrt(const QSequence& qseq, const PrimeSet& S, std::uint64_t N,
                                   const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("q_check_gauss_wrt: N must be >= 1");
  CongruenceReport report{.family = "q_gauss_wrt(" + S.describe() + ")", .from = 1, .to = N};
  report.notes.push_back(wrt_note(S, N));
  std::vector<Witness> found;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const FactoredInt fn = factorize(n);
    if (!support_in(fn, S)) continue;
    for (std::uint64_t m = 1; n * m <= N; ++m) {
      const QPoly s = gauss_sum(qseq, n, m);
      check_degree(s, opts, "q_check_gauss_wrt");
      const QPoly rem = divrem(s, q_integer(n)).remainder;
      if (!rem.is_zero()) {
        found.push_back({n * m, to_string(rem),
                         "n=" + std::to_string(n) + " m=" + std::to_string(m)});
      }
    }
  }
  finish(report, std::move(found), opts);
  return report;
}

CongruenceReport q_check_modified_wrt(const QSequence& qseq, const PrimeSet& S, std::uint64_t N,
                                      const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("q_check_modified_wrt: N must be >= 1");
  CongruenceReport report{.family = "q_modified_wrt(" + S.describe() + ")", .from = 1, .to = N};
  report.notes.push_back(wrt_note(S, N));
  std::vector<Witness> found;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const FactoredInt fn = factorize(n);
    if (!support_in(fn, S)) continue;
    for (std::uint64_t m = 1; n * m <= N; ++m) {
      if (gcd_u64(m, n) != 1) continue;
      const QPoly s = gauss_sum(qseq, n, m);
      check_degree(s, opts, "q_check_modified_wrt");
      const QPoly rem = divrem(s, q_integer(n, m)).remainder;
      if (!rem.is_zero()) {
        found.push_back({n * m, to_string(rem),
                         "n=" + std::to_string(n) + " m=" + std::to_string(m)});
      }
    }
  }
  finish(report, std::move(found), opts);
  return report;
}

CongruenceReport q_check_euler_gauss(const QSequence& qseq, std::uint64_t N,
                                     const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("q_check_euler_gauss: N must be >= 1");
  CongruenceReport report{.family = "q_euler_gauss", .from = 1, .to = N};
  for (std::uint64_t n = 2; n <= N; ++n) {
    const QPoly modulus = q_integer(n);
    check_degree(modulus, opts, "q_check_euler_gauss");
    QPoly plus(1), minus(1);
    for (std::uint64_t d : divisors(factorize(n))) {
      const int mu = mobius(factorize(d));
      if (mu == 0) continue;
      const QPoly t = substitute_power(qseq.term(n / d), d);
      check_degree(t, opts, "q_check_euler_gauss");
      QPoly& side = mu == 1 ? plus : minus;
      side = divrem(side * t, modulus).remainder;
    }
    const QPoly rem = divrem(plus - minus, modulus).remainder;
    if (!rem.is_zero()) {
      report.add_witness(opts.witness_cap, n, to_string(rem), "mod [" + std::to_string(n) + "]_q");
    }
  }
  return report;
}

CongruenceReport q_root_of_unity_profile(const QSequence& qseq, std::uint64_t n,
                                         const CheckOptions& opts) {
  if (n == 0) throw std::invalid_argument("q_root_of_unity_profile: n must be >= 1");
  CongruenceReport report{.family = "root_profile(n=" + std::to_string(n) + ")",
                          .from = n,
                          .to = n};
  const QPoly a = qseq.term(n);
  check_degree(a, opts, "q_root_of_unity_profile");
  for (std::uint64_t m : divisors(factorize(n))) {
    if (m == 1) continue;
    const Int expected = qseq.term(n / m).eval_at_one();
    const QPoly rem = divrem(a - QPoly(expected), cyclotomic(m)).remainder;
    if (!rem.is_zero()) {
      report.add_witness(opts.witness_cap, m, to_string(rem),
                         "Phi_" + std::to_string(m) + " does not divide a_n - " +
                             expected.get_str());
    }
  }
  return report;
}

std::vector<QPoly> q_int_prime_factorization(const FactoredInt& n) {
  if (n.value < 2) throw std::invalid_argument("q_int_prime_factorization: n must be >= 2");
  std::vector<QPoly> out;
  QPoly product(1);
  for (std::size_t i = 0; i < n.factors.size(); ++i) {
    std::uint64_t pe = 1;
    for (unsigned e = 0; e < n.factors[i].exponent; ++e) pe *= n.factors[i].prime;
    std::uint64_t m = 1;
    for (std::size_t j = i + 1; j < n.factors.size(); ++j) {
      for (unsigned e = 0; e < n.factors[j].exponent; ++e) m *= n.factors[j].prime;
    }
    out.push_back(q_integer(pe, m));
    product = product * out.back();
  }
  if (product != q_integer(n.value)) {
    throw std::logic_error("q_int_prime_factorization: product identity violated at n = " +
                           std::to_string(n.value));
  }
  return out;
}

namespace {

const QPoly& conjecture_A_poly(const QSequence& qseq, std::uint64_t n,
                               std::map<std::uint64_t, QPoly>& memo, const CheckOptions& opts) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  QPoly A(1);
  if (n > 1) {
    for (std::uint64_t d : divisors(factorize(n))) {
      const int mu = mobius(factorize(d));
      if (mu == 1 && d > 1) {
        A = A * substitute_power(qseq.term(n / d), d);
      } else if (mu == -1) {
        A = A * substitute_power(conjecture_A_poly(qseq, n / d, memo, opts), d);
      }
      check_degree(A, opts, "conjecture_A");
    }
  }
  return memo.emplace(n, std::move(A)).first->second;
}

}  // namespace

ConjectureResult conjecture_A(const QSequence& qseq, std::uint64_t n, const CheckOptions& opts) {
  if (n == 0) throw std::invalid_argument("conjecture_A: n must be >= 1");
  std::map<std::uint64_t, QPoly> memo;
  ConjectureResult result;
  result.A = conjecture_A_poly(qseq, n, memo, opts);
  if (n == 1) {
    result.remainder = QPoly{};
    result.pass = true;
    return result;
  }
  const QPoly modulus = q_integer(n);
  // Reducing both factors before multiplying leaves the product's remainder
  // modulo [n]_q unchanged and keeps degrees bounded by 2n.
  const QPoly s = divrem(gauss_sum(qseq, n), modulus).remainder;
  const QPoly a = divrem(result.A, modulus).remainder;
  result.remainder = divrem(s * a, modulus).remainder;
  result.pass = result.remainder.is_zero();
  return result;
}

CongruenceReport conjecture_scan(const QSequence& qseq, std::uint64_t N, const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("conjecture_scan: N must be >= 1");
  CongruenceReport report{.family = "conjecture_A", .from = 1, .to = N};
  report.notes.push_back("finite evidence only; divisibility checked for n <= " +
                         std::to_string(N) + ", not a proof");
  for (std::uint64_t n = 1; n <= N; ++n) {
    const ConjectureResult r = conjecture_A(qseq, n, opts);
    if (!r.pass) {
      report.add_witness(opts.witness_cap, n, to_string(r.remainder),
                         "A_n degree " + std::to_string(r.A.degree()));
    }
  }
  return report;
}

}  // namespace eg
