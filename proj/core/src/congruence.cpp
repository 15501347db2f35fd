#include "eg/congruence.hpp"

#include <algorithm>
#include <thread>

namespace eg {

namespace {

/// Runs fn(n, out) for n = 1..N, optionally striped across workers; the
/// caller sorts the merged witnesses, so the partition is invisible.
template <typename Fn>
std::vector<Witness> scan_range(std::uint64_t N, unsigned workers, Fn fn) {
  if (workers <= 1) {
    std::vector<Witness> out;
    for (std::uint64_t n = 1; n <= N; ++n) fn(n, out);
    return out;
  }
  std::vector<std::vector<Witness>> parts(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::uint64_t n = w + 1; n <= N; n += workers) fn(n, parts[w]);
    });
  }
  for (auto& t : threads) t.join();
  std::vector<Witness> out;
  for (auto& part : parts)
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  return out;
}

Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string range_note(const PrimeSet& S, std::uint64_t N) {
  return "primes from " + S.describe() + (S.truncated() ? " checked up to " + std::to_string(N) : "");
}

void pairwise_into(const IntegerSequence& seq, std::uint64_t p, std::uint64_t N,
                   std::vector<Witness>& out) {
  Int modulus = 1;
  for (std::uint64_t pr = p; pr <= N; pr *= p) {
    modulus *= static_cast<unsigned long>(p);
    for (std::uint64_t m = 1; m * pr <= N; ++m) {
      const Int diff = seq.term(pr * m) - seq.term(pr / p * m);
      if (mod_nonneg(diff, modulus) != 0) {
        out.push_back({pr * m, diff.get_str(),
                       "p=" + std::to_string(p) + " p^r=" + std::to_string(pr) +
                           " m=" + std::to_string(m)});
      }
    }
    if (pr > N / p) break;  // overflow guard
  }
}

void finish(CongruenceReport& report, std::vector<Witness> found, const CheckOptions& opts) {
  std::sort(found.begin(), found.end(), [](const Witness& a, const Witness& b) {
    return a.n != b.n ? a.n < b.n : a.detail < b.detail;
  });
  for (Witness& w : found) report.add_witness(opts.witness_cap, w.n, std::move(w.remainder),
                                              std::move(w.detail));
}

}  // namespace

CongruenceReport check_euler(const IntegerSequence& seq, std::uint64_t N,
                             const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("check_euler: N must be >= 1");
  CongruenceReport report{.family = "euler", .from = 1, .to = N};
  for (std::uint64_t p : primes_upto(N)) {
    Int modulus = 1;
    for (std::uint64_t pr = p; pr <= N; pr *= p) {
      modulus *= static_cast<unsigned long>(p);
      const Int diff = seq.term(pr) - seq.term(pr / p);
      if (mod_nonneg(diff, modulus) != 0) {
        report.add_witness(opts.witness_cap, pr, diff.get_str(),
                           "p=" + std::to_string(p) + " p^r=" + std::to_string(pr));
      }
      if (pr > N / p) break;
    }
  }
  return report;
}

CongruenceReport check_gauss(const IntegerSequence& seq, std::uint64_t N,
                             const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("check_gauss: N must be >= 1");
  CongruenceReport report{.family = "gauss", .from = 1, .to = N};
  auto found = scan_range(N, opts.workers, [&](std::uint64_t n, std::vector<Witness>& out) {
    Int b = 0;
    for (std::uint64_t d : divisors(factorize(n))) {
      const int mu = mobius(factorize(d));
      if (mu != 0) b += mu * seq.term(n / d);
    }
    if (mod_nonneg(b, Int(static_cast<unsigned long>(n))) != 0) {
      out.push_back({n, b.get_str(), "divisor sum mod " + std::to_string(n)});
    }
  });
  finish(report, std::move(found), opts);
  return report;
}

CongruenceReport check_pairwise(const IntegerSequence& seq, std::uint64_t p, std::uint64_t N,
                                const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("check_pairwise: N must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("check_pairwise: p must be prime");
  CongruenceReport report{.family = "pairwise(p=" + std::to_string(p) + ")", .from = 1, .to = N};
  std::vector<Witness> found;
  pairwise_into(seq, p, N, found);
  finish(report, std::move(found), opts);
  return report;
}

CongruenceReport check_gauss_wrt(const IntegerSequence& seq, const PrimeSet& S, std::uint64_t N,
                                 const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("check_gauss_wrt: N must be >= 1");
  CongruenceReport report{.family = "gauss_wrt(" + S.describe() + ")", .from = 1, .to = N};
  report.notes.push_back(range_note(S, N));
  std::vector<Witness> found;
  for (std::uint64_t p : S.members_upto(N)) pairwise_into(seq, p, N, found);
  finish(report, std::move(found), opts);
  return report;
}

namespace {

void euler_gauss_products(const IntegerSequence& seq, std::uint64_t n, Int& plus, Int& minus) {
  plus = 1;
  minus = 1;
  for (std::uint64_t d : divisors(factorize(n))) {
    const int mu = mobius(factorize(d));
    if (mu == 1) {
      plus *= seq.term(n / d);
    } else if (mu == -1) {
      minus *= seq.term(n / d);
    }
  }
}

}  // namespace

CongruenceReport check_euler_gauss(const IntegerSequence& seq, std::uint64_t N,
                                   const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("check_euler_gauss: N must be >= 1");
  CongruenceReport report{.family = "euler_gauss", .from = 1, .to = N};
  auto found = scan_range(N, opts.workers, [&](std::uint64_t n, std::vector<Witness>& out) {
    Int plus, minus;
    euler_gauss_products(seq, n, plus, minus);
    const Int rem = mod_nonneg(plus - minus, Int(static_cast<unsigned long>(n)));
    if (rem != 0) {
      out.push_back({n, rem.get_str(), "A+=" + plus.get_str() + " A-=" + minus.get_str()});
    }
  });
  finish(report, std::move(found), opts);
  return report;
}

CongruenceReport check_strong_euler_gauss(const IntegerSequence& seq, std::uint64_t N,
                                          const CheckOptions& opts) {
  if (N == 0) throw std::invalid_argument("check_strong_euler_gauss: N must be >= 1");
  CongruenceReport report{.family = "strong_euler_gauss", .from = 1, .to = N};
  auto found = scan_range(N, opts.workers, [&](std::uint64_t n, std::vector<Witness>& out) {
    Int plus, minus;
    euler_gauss_products(seq, n, plus, minus);
    const Int modulus(static_cast<unsigned long>(n));
    if (plus == 0 && minus == 0) {
      out.push_back({n, "indeterminate", "A+ = A- = 0"});
      return;
    }
    const Int g = gcd(plus, minus);
    const Int u = plus / g;
    const Int v = minus / g;
    if (gcd(u, modulus) != 1 || gcd(v, modulus) != 1) {
      out.push_back({n, "non-invertible", "u=" + u.get_str() + " v=" + v.get_str()});
      return;
    }
    const Int rem = mod_nonneg(u - v, modulus);
    if (rem != 0) {
      out.push_back({n, rem.get_str(), "u=" + u.get_str() + " v=" + v.get_str()});
    }
  });
  finish(report, std::move(found), opts);
  return report;
}

std::vector<CongruenceReport> classify(const IntegerSequence& seq, std::uint64_t N,
                                       const CheckOptions& opts) {
  std::vector<CongruenceReport> reports;
  reports.push_back(check_euler(seq, N, opts));
  reports.push_back(check_gauss(seq, N, opts));
  reports.push_back(check_euler_gauss(seq, N, opts));
  reports.push_back(check_strong_euler_gauss(seq, N, opts));
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    if (p <= N) reports.push_back(check_pairwise(seq, p, N, opts));
  }

  const bool euler = reports[0].pass();
  const bool gauss = reports[1].pass();
  const bool euler_gauss = reports[2].pass();
  const bool strong = reports[3].pass();

  CongruenceReport audit{.family = "containment-audit", .from = 1, .to = N};
  auto flag = [&](bool violated, const std::string& what) {
    if (violated) audit.add_witness(opts.witness_cap, 0, "internal-consistency error", what);
  };
  flag(strong && !gauss, "strong passed but gauss failed");
  flag(gauss && !euler_gauss, "gauss passed but euler_gauss failed");
  flag(euler_gauss && !euler, "euler_gauss passed but euler failed");
  audit.notes.push_back(std::string("euler=") + (euler ? "pass" : "fail"));
  audit.notes.push_back(std::string("gauss=") + (gauss ? "pass" : "fail"));
  audit.notes.push_back(std::string("euler_gauss=") + (euler_gauss ? "pass" : "fail"));
  audit.notes.push_back(std::string("strong_euler_gauss=") + (strong ? "pass" : "fail"));
  reports.push_back(std::move(audit));
  return reports;
}

}  // namespace eg
