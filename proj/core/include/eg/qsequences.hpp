#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "eg/qpoly.hpp"

namespace eg {

/// Lazily evaluated, cached polynomial sequence indexed from 1. Same caching
/// contract as IntegerSequence: copies share the append-only term cache.
class QSequence {
 public:
  /// Called with n and the already-computed terms 1..n-1 (prior[i] = term(i+1)).
  using Generator = std::function<QPoly(std::uint64_t, const std::vector<QPoly>&)>;

  QSequence() = default;
  QSequence(std::string name, Generator gen);

  const std::string& name() const { return state_->name; }
  QPoly term(std::uint64_t n) const;

 private:
  struct State {
    std::string name;
    Generator gen;
    mutable std::mutex mu;
    mutable std::vector<QPoly> cache;
  };
  std::shared_ptr<State> state_;
};

/// The constructed sequence a_n(q) = sum_{d|n} [n/d]_{q^d} g_{n/d}(q^d),
/// which satisfies the q-Gauss congruence for any g.
QSequence q_gauss_from(const QSequence& g);

/// S_n^k(q) / G_n^k(q): term(1) = Phi_1(q) = q - 1, otherwise Phi_p(q^{n/p})
/// with p the k-th smallest (resp. greatest) prime factor, saturating to the
/// opposite end when n has fewer than k distinct primes.
QSequence q_prime_factor_seq(PrimeOrder order, unsigned k = 1);

/// Catalog identity plus parameters for polynomial sequences.
struct QSequenceSpec {
  std::string family;
  unsigned k = 1;                         // k-variants of q_spf / q_gpf
  std::map<std::uint64_t, QPoly> terms;   // explicit g terms for qgauss_from
};

/// Families: q_spf, q_gpf (with k), qgauss_from (g from explicit terms,
/// default 0), constant_one, qce_weak, qce_power, qce_prime, qce_odd2,
/// qce_omega.
QSequence make_qsequence(const QSequenceSpec& spec);

/// Finite polynomial sequence from explicit terms (terms[0] is index 1);
/// indices beyond the list are zero.
QSequence qsequence_from_terms(std::string name, std::vector<QPoly> terms);

}  // namespace eg
