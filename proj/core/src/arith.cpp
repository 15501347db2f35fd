#include "eg/arith.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace eg {

unsigned FactoredInt::big_omega() const {
  unsigned total = 0;
  for (const auto& f : factors) total += f.exponent;
  return total;
}

bool FactoredInt::squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

namespace {

struct SieveCache {
  std::mutex mu;
  std::uint64_t bound = 0;
  std::shared_ptr<const std::vector<std::uint64_t>> primes;
};

SieveCache& sieve_cache() {
  static SieveCache cache;
  return cache;
}

std::vector<std::uint64_t> sieve(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
  return primes;
}

// Immutable snapshot of the sieve covering at least `bound`; readers iterate
// their snapshot while later calls may swap in a larger one.
std::shared_ptr<const std::vector<std::uint64_t>> sieve_at_least(std::uint64_t bound) {
  auto& cache = sieve_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  if (!cache.primes || bound > cache.bound) {
    cache.primes = std::make_shared<const std::vector<std::uint64_t>>(sieve(bound));
    cache.bound = bound;
  }
  return cache.primes;
}

}  // namespace

std::vector<std::uint64_t> primes_upto(std::uint64_t bound) {
  const auto snapshot = sieve_at_least(bound);
  const auto end = std::upper_bound(snapshot->begin(), snapshot->end(), bound);
  return {snapshot->begin(), end};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  FactoredInt f = factorize(n);
  return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

FactoredInt factorize(std::uint64_t n, std::uint64_t sieve_bound) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  FactoredInt result;
  result.value = n;
  const auto primes = sieve_at_least(sieve_bound);
  std::uint64_t rest = n;
  for (std::uint64_t p : *primes) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (rest > 1) {
    // rest has no prime factor <= min(sieve_bound, sqrt(rest)), so it is
    // prime whenever it fits below bound^2.
    if (rest > sieve_bound && rest / sieve_bound > sieve_bound) {
      std::ostringstream msg;
      msg << "factorize: " << n << " has an unfactored cofactor " << rest
          << " above the sieve bound squared (" << sieve_bound << "^2)";
      throw std::domain_error(msg.str());
    }
    result.factors.push_back({rest, 1});
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return result;
}

int mobius(const FactoredInt& n) {
  if (!n.squarefree()) return 0;
  return n.omega() % 2 == 0 ? 1 : -1;
}

std::uint64_t radical(const FactoredInt& n) {
  std::uint64_t r = 1;
  for (const auto& f : n.factors) r *= f.prime;
  return r;
}

std::vector<std::uint64_t> divisors(const FactoredInt& n) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& f : n.factors) {
    const std::size_t count = divs.size();
    std::uint64_t pe = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pe *= f.prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::uint64_t euler_phi(const FactoredInt& n) {
  std::uint64_t phi = 1;
  for (const auto& f : n.factors) {
    std::uint64_t pe1 = 1;
    for (unsigned e = 1; e < f.exponent; ++e) pe1 *= f.prime;
    phi *= pe1 * (f.prime - 1);
  }
  return phi;
}

std::uint64_t prime_factor_rank(const FactoredInt& n, unsigned k, PrimeOrder order) {
  if (k == 0) throw std::invalid_argument("prime_factor_rank: k must be >= 1");
  if (n.is_one()) return 0;
  const std::size_t count = n.factors.size();
  std::size_t index;
  if (order == PrimeOrder::Smallest) {
    // saturates to the greatest prime factor when fewer than k primes
    index = k <= count ? k - 1 : count - 1;
  } else {
    index = k <= count ? count - k : 0;
  }
  return n.factors[index].prime;
}

int mobius(std::uint64_t n) { return mobius(factorize(n)); }
std::uint64_t radical(std::uint64_t n) { return radical(factorize(n)); }
std::vector<std::uint64_t> divisors(std::uint64_t n) { return divisors(factorize(n)); }
std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

PrimeSet PrimeSet::explicit_set(std::vector<std::uint64_t> ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (std::uint64_t p : ps) {
    if (!is_prime(p)) {
      throw std::invalid_argument("PrimeSet: " + std::to_string(p) + " is not prime");
    }
  }
  return {Kind::Explicit, std::move(ps)};
}

PrimeSet PrimeSet::parse(const std::string& text) {
  if (text == "all") return all();
  if (text == "odd") return odd();
  std::vector<std::uint64_t> ps;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    ps.push_back(std::stoull(tok));
  }
  if (ps.empty()) throw std::invalid_argument("PrimeSet: empty prime list '" + text + "'");
  return explicit_set(std::move(ps));
}

bool PrimeSet::contains(std::uint64_t p) const {
  switch (kind) {
    case Kind::All:
      return is_prime(p);
    case Kind::Odd:
      return p != 2 && is_prime(p);
    case Kind::Explicit:
      return std::binary_search(primes.begin(), primes.end(), p);
  }
  return false;
}

std::vector<std::uint64_t> PrimeSet::members_upto(std::uint64_t bound) const {
  if (kind == Kind::Explicit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : primes)
      if (p <= bound) out.push_back(p);
    return out;
  }
  std::vector<std::uint64_t> out = primes_upto(bound);
  if (kind == Kind::Odd && !out.empty() && out.front() == 2) out.erase(out.begin());
  return out;
}

std::string PrimeSet::describe() const {
  switch (kind) {
    case Kind::All:
      return "all primes";
    case Kind::Odd:
      return "odd primes";
    case Kind::Explicit: {
      std::string s = "{";
      for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(primes[i]);
      }
      return s + "}";
    }
  }
  return "";
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int pow_int(const Int& base, std::uint64_t exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

}  // namespace eg
