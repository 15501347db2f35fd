#pragma once

#include "eg/qsequences.hpp"
#include "eg/report.hpp"
#include "eg/sequences.hpp"

namespace eg {

/// a_{p^r}(q) = a_{p^{r-1}}(q^p) (mod [p^r]_q) at all prime powers <= N.
CongruenceReport q_check_euler(const QSequence& qseq, std::uint64_t N,
                               const CheckOptions& opts = {});

/// sum_{d|n} mu(d) a_{n/d}(q^d) = 0 (mod [n]_q) for all n <= N.
CongruenceReport q_check_gauss(const QSequence& qseq, std::uint64_t N,
                               const CheckOptions& opts = {});

/// a_{p^r m}(q) = a_{p^{r-1} m}(q^p) (mod [p^r]_q), all r, m with p^r m <= N.
CongruenceReport q_check_weak(const QSequence& qseq, std::uint64_t p, std::uint64_t N,
                              const CheckOptions& opts = {});

/// a_{p^r m}(q) = a_{p^{r-1} m}(q^p) (mod [p^r]_{q^m}), all r and m coprime
/// to p with p^r m <= N. Equivalent to the q-Gauss congruence when required
/// at every prime.
CongruenceReport q_check_modified_pairwise(const QSequence& qseq, std::uint64_t p, std::uint64_t N,
                                           const CheckOptions& opts = {});

/// sum_{d|n} mu(d) a_{nm/d}(q^d) = 0 (mod [n]_q) for all n >= 2 with prime
/// support in S and all m with nm <= N.
CongruenceReport q_check_gauss_wrt(const QSequence& qseq, const PrimeSet& S, std::uint64_t N,
                                   const CheckOptions& opts = {});

/// Same sums but modulo [n]_{q^m}, restricted to gcd(m, n) = 1.
CongruenceReport q_check_modified_wrt(const QSequence& qseq, const PrimeSet& S, std::uint64_t N,
                                      const CheckOptions& opts = {});

/// prod_{mu(d)=1} a_{n/d}(q^d) = prod_{mu(d)=-1} a_{n/d}(q^d) (mod [n]_q).
/// Sides are reduced modulo [n]_q as the products accumulate, which leaves
/// the difference's canonical remainder unchanged.
CongruenceReport q_check_euler_gauss(const QSequence& qseq, std::uint64_t N,
                                     const CheckOptions& opts = {});

/// Root-of-unity characterization at one index: for each divisor m | n with
/// m > 1, checks Phi_m(q) | (a_n(q) - a_{n/m}(1)). Witness indices are the
/// failing divisors m.
CongruenceReport q_root_of_unity_profile(const QSequence& qseq, std::uint64_t n,
                                         const CheckOptions& opts = {});

/// The coprime factorization [n]_q = prod_i [p_i^{r_i}]_{q^{prod_{j>i} p_j^{r_j}}}
/// with p_1 < ... < p_k. The product identity is asserted internally.
std::vector<QPoly> q_int_prime_factorization(const FactoredInt& n);

struct ConjectureResult {
  QPoly A;          // A_n(q) from the recursion
  QPoly remainder;  // canonical remainder of the tested product mod [n]_q
  bool pass = false;
};

/// Tests [n]_q | (sum_{d|n} mu(d) a_{n/d}(q^d)) * A_n(q) with A_n defined by
/// A_1 = 1, A_n = prod_{d|n, d>1, mu(d)=1} a_{n/d}(q^d) * prod_{mu(d)=-1} A_{n/d}(q^d).
ConjectureResult conjecture_A(const QSequence& qseq, std::uint64_t n,
                              const CheckOptions& opts = {});

/// Runs conjecture_A for 1..N; finite evidence only, flagged as such in notes.
CongruenceReport conjecture_scan(const QSequence& qseq, std::uint64_t N,
                                 const CheckOptions& opts = {});

}  // namespace eg
