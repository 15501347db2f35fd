#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eg {

using Int = mpz_class;
using Rat = mpq_class;

/// Deterministic trial division against a cached prime sieve. Inputs whose
/// unfactored cofactor exceeds bound^2 are rejected.
inline constexpr std::uint64_t kDefaultSieveBound = 1'000'000;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its canonical factorization.
/// Primes strictly increasing, exponents >= 1; value 1 has no factors.
struct FactoredInt {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  bool is_one() const { return factors.empty(); }
  unsigned omega() const { return static_cast<unsigned>(factors.size()); }
  unsigned big_omega() const;
  bool squarefree() const;
  bool is_prime_power() const { return factors.size() == 1; }
};

/// Exactly the primes <= bound; backed by a growing sieve cache, safe to
/// call concurrently.
std::vector<std::uint64_t> primes_upto(std::uint64_t bound);

bool is_prime(std::uint64_t n);

FactoredInt factorize(std::uint64_t n, std::uint64_t sieve_bound = kDefaultSieveBound);

int mobius(const FactoredInt& n);
std::uint64_t radical(const FactoredInt& n);
std::vector<std::uint64_t> divisors(const FactoredInt& n);
std::uint64_t euler_phi(const FactoredInt& n);

enum class PrimeOrder { Smallest, Greatest };

/// k-th smallest (resp. greatest) distinct prime factor of n, 0 at n = 1.
/// When n has fewer than k distinct primes the selector saturates to the
/// opposite end: p_k(n) = gpf(n), P_k(n) = spf(n).
std::uint64_t prime_factor_rank(const FactoredInt& n, unsigned k, PrimeOrder order);

int mobius(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// A set of primes: an explicit ascending list, all primes, or all odd primes.
struct PrimeSet {
  enum class Kind { Explicit, All, Odd };
  Kind kind = Kind::All;
  std::vector<std::uint64_t> primes;  // ascending, deduped; Explicit only

  static PrimeSet all() { return {Kind::All, {}}; }
  static PrimeSet odd() { return {Kind::Odd, {}}; }
  static PrimeSet explicit_set(std::vector<std::uint64_t> ps);
  /// Parses "all", "odd", or a comma-separated prime list like "2,3,5".
  static PrimeSet parse(const std::string& text);

  bool contains(std::uint64_t p) const;
  /// Members of the set up to bound (for Kind::Explicit, the listed primes).
  std::vector<std::uint64_t> members_upto(std::uint64_t bound) const;
  bool truncated() const { return kind != Kind::Explicit; }
  std::string describe() const;
};

Int gcd(const Int& a, const Int& b);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
Int pow_int(const Int& base, std::uint64_t exp);

}  // namespace eg
