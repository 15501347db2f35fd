#pragma once

#include "eg/report.hpp"
#include "eg/sequences.hpp"

namespace eg {

/// a_{p^r} = a_{p^{r-1}} (mod p^r) at every prime power p^r <= N.
/// Witness remainder is the raw difference a_{p^r} - a_{p^{r-1}}.
CongruenceReport check_euler(const IntegerSequence& seq, std::uint64_t N,
                             const CheckOptions& opts = {});

/// sum_{d|n} mu(d) a_{n/d} = 0 (mod n) for every n <= N.
/// Witness remainder is the raw divisor sum b_n.
CongruenceReport check_gauss(const IntegerSequence& seq, std::uint64_t N,
                             const CheckOptions& opts = {});

/// a_{p^r m} = a_{p^{r-1} m} (mod p^r) for all r, m with p^r m <= N.
CongruenceReport check_pairwise(const IntegerSequence& seq, std::uint64_t p, std::uint64_t N,
                                const CheckOptions& opts = {});

/// Pairwise check for every prime in S (equivalent to the divisor-sum form
/// restricted to indices with prime support in S). Truncation of non-explicit
/// sets is noted in the report.
CongruenceReport check_gauss_wrt(const IntegerSequence& seq, const PrimeSet& S, std::uint64_t N,
                                 const CheckOptions& opts = {});

/// A_n^+ = A_n^- (mod n), where A_n^{+/-} are the exact products of a_{n/d}
/// over divisors d with mu(d) = +/-1.
CongruenceReport check_euler_gauss(const IntegerSequence& seq, std::uint64_t N,
                                   const CheckOptions& opts = {});

/// Inverse-form congruence on the gcd-reduced parts of A_n^{+/-}: with
/// g = gcd(A+, A-), u = A+/g, v = A-/g, require gcd(u,n) = gcd(v,n) = 1 and
/// u = v (mod n). A+ = A- = 0 is reported as an indeterminate failure.
CongruenceReport check_strong_euler_gauss(const IntegerSequence& seq, std::uint64_t N,
                                          const CheckOptions& opts = {});

/// Full battery (euler, gauss, euler_gauss, strong, pairwise at small primes)
/// plus a trailing containment-audit report that fails if the verdicts
/// violate the known implications (strong => gauss => euler_gauss => euler).
std::vector<CongruenceReport> classify(const IntegerSequence& seq, std::uint64_t N,
                                       const CheckOptions& opts = {});

}  // namespace eg
