#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eg/arith.hpp"

namespace eg {

/// Integer-coefficient univariate polynomial in q, dense ascending-degree
/// coefficients. Canonical form: no trailing zero coefficients; the zero
/// polynomial is the empty list.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) : QPoly(Int(c)) {}  // NOLINT: implicit constants are handy
  QPoly(Int c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }

  static QPoly from_coeffs(std::vector<Int> coeffs);
  static QPoly monomial(Int c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const Int& leading() const;

  Int eval_at_one() const;
  Int eval_int(const Int& x) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// [n]_{q^m} = 1 + q^m + ... + q^{m(n-1)}.
QPoly q_integer(std::uint64_t n, std::uint64_t m = 1);

/// n-th cyclotomic polynomial, memoized per process. Computed by repeated
/// exact division of q^n - 1 by the cyclotomics of proper divisors.
const QPoly& cyclotomic(std::uint64_t n);

/// a(q^d).
QPoly substitute_power(const QPoly& a, std::uint64_t d);

struct DivRem {
  QPoly quotient;
  QPoly remainder;
};

/// Euclidean division a = b*quotient + remainder, deg(remainder) < deg(b).
/// b must be nonzero with leading coefficient +-1.
DivRem divrem(const QPoly& a, const QPoly& b);

/// True iff divrem(a, b) has zero remainder.
bool divides(const QPoly& b, const QPoly& a);

/// Exact evaluation of a at the n-th roots of unity omega_n^i: with
/// g = gcd(n, i) and m = n/g, the value at every primitive m-th root is the
/// integer c iff the remainder of a mod Phi_m is the constant c. Returns
/// nullopt when the remainder is non-constant (no common integer value).
std::optional<Int> eval_at_root(const QPoly& a, std::uint64_t n, std::uint64_t i);

/// Fixed report rendering, ascending terms: "-1 - q^3", "1 + q + 2q^2", "0".
std::string to_string(const QPoly& a);

/// Optional disk persistence for the cyclotomic cache (used by the CLI when
/// a cache directory is configured).
void load_cyclotomic_cache(const std::string& path);
void save_cyclotomic_cache(const std::string& path);

}  // namespace eg
