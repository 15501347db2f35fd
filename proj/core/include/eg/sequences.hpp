#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "eg/arith.hpp"

namespace eg {

/// Finite lookup table for user-supplied function families f_p(x) / g_d(x):
/// (index, argument) -> value, with an explicit default.
struct FuncTable {
  std::map<std::pair<std::uint64_t, std::uint64_t>, Int> entries;
  Int fallback = 0;

  Int operator()(std::uint64_t index, std::uint64_t arg) const {
    auto it = entries.find({index, arg});
    return it != entries.end() ? it->second : fallback;
  }
};

/// Lazily evaluated, cached integer sequence indexed from 1. Copies share
/// the underlying term cache; the cache grows append-only under a mutex.
class IntegerSequence {
 public:
  static constexpr std::uint64_t kUnbounded = 0;

  /// Called with n and the already-computed terms 1..n-1 (prior[i] = term(i+1)),
  /// so recurrences need no side state. Calls are serialized in increasing n.
  using Generator = std::function<Int(std::uint64_t, const std::vector<Int>&)>;

  IntegerSequence() = default;
  IntegerSequence(std::string name, Generator gen, std::uint64_t max_index = kUnbounded);

  const std::string& name() const { return state_->name; }
  /// Largest defined index, or kUnbounded for generator-backed sequences.
  std::uint64_t max_index() const { return state_->max_index; }

  Int term(std::uint64_t n) const;

 private:
  struct State {
    std::string name;
    Generator gen;
    std::uint64_t max_index = kUnbounded;
    mutable std::mutex mu;
    mutable std::vector<Int> cache;  // cache[i] = term(i+1)
  };
  std::shared_ptr<State> state_;
};

/// Catalog identity plus parameters; validated by make_sequence.
struct SequenceSpec {
  std::string family;
  Int base = 0;                          // geometric base a / constant value
  unsigned k = 1;                        // k-variants, npow exponent
  std::vector<std::vector<Int>> matrix;  // matrix_trace
  FuncTable table;                       // rad_family f_p / mu_rad_family g_d
  std::shared_ptr<IntegerSequence> input;  // product_family b / divisor_sum_family g
};

/// Families: geometric, lucas, fibonacci, perrin, apery, sigma, matrix_trace,
/// product_family, divisor_sum_family, rad_family, mu_rad_family, spf, gpf,
/// k_spf, k_gpf, n_intlog, identity, constant, ce_epsilon_prime_power,
/// ce_2k1, ce_12, ce_6_15, ce_parity, npow.
IntegerSequence make_sequence(const SequenceSpec& spec);

/// Finite sequence from explicit terms (terms[0] is index 1).
IntegerSequence sequence_from_terms(std::string name, std::vector<Int> terms);

struct BFileResult {
  IntegerSequence seq;
  bool shifted = false;  // true when indices were re-based from 0 to 1
};

/// OEIS b-file text: `index value` pairs, `#` comments, blank lines allowed,
/// consecutive indices starting at 1 (or at 0 with allow_offset_shift, which
/// re-indexes by +1). Malformed lines, gaps and duplicates are rejected.
BFileResult parse_bfile(const std::string& text, bool allow_offset_shift = false);

/// Lambert-series coefficients b_n = sum_{d|n} mu(d) a_{n/d}, n = 1..N.
std::vector<Int> lambert_coefficients(const IntegerSequence& seq, std::uint64_t N);

/// Exponents c_n = b_n / n of the exp-product form, as exact reduced rationals.
std::vector<Rat> exp_product_exponents(const IntegerSequence& seq, std::uint64_t N);

/// True iff every denominator's prime support lies inside S.
bool denominators_supported(const std::vector<Rat>& exponents, const PrimeSet& S);

/// Alladi dual: dual_n = -sum_{d|n} mu(d) seq(d), defined on 1..N.
IntegerSequence alladi_dual(const IntegerSequence& seq, std::uint64_t N);

}  // namespace eg
