#include "eg/sequences.hpp"

#include <algorithm>
#include <sstream>

namespace eg {

IntegerSequence::IntegerSequence(std::string name, Generator gen, std::uint64_t max_index)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->gen = std::move(gen);
  state_->max_index = max_index;
}

Int IntegerSequence::term(std::uint64_t n) const {
  if (!state_) throw std::logic_error("IntegerSequence: empty");
  if (n == 0) throw std::out_of_range(state_->name + ": sequence indices start at 1");
  if (state_->max_index != kUnbounded && n > state_->max_index) {
    throw std::out_of_range(state_->name + ": term " + std::to_string(n) +
                            " beyond defined range 1.." + std::to_string(state_->max_index));
  }
  std::lock_guard<std::mutex> lock(state_->mu);
  while (state_->cache.size() < n) {
    state_->cache.push_back(state_->gen(state_->cache.size() + 1, state_->cache));
  }
  return state_->cache[n - 1];
}

IntegerSequence sequence_from_terms(std::string name, std::vector<Int> terms) {
  auto holder = std::make_shared<std::vector<Int>>(std::move(terms));
  const std::uint64_t count = holder->size();
  return IntegerSequence(
      std::move(name),
      [holder](std::uint64_t n, const std::vector<Int>&) { return (*holder)[n - 1]; }, count);
}

namespace {

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

using Matrix = std::vector<std::vector<Int>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntegerSequence make_matrix_trace(const Matrix& m) {
  if (m.empty()) throw std::invalid_argument("matrix_trace: empty matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("matrix_trace: matrix must be square");
  }
  // term() fills sequentially under the sequence mutex, so the running power
  // advances by one multiplication per call.
  struct Power {
    Matrix value;
    std::uint64_t exponent = 0;
  };
  auto state = std::make_shared<Power>();
  return IntegerSequence("matrix_trace", [m, state](std::uint64_t n, const std::vector<Int>&) {
    if (state->exponent == 0 || state->exponent > n) {
      state->value = m;
      state->exponent = 1;
    }
    while (state->exponent < n) {
      state->value = mat_mul(state->value, m);
      ++state->exponent;
    }
    Int tr = 0;
    for (std::size_t i = 0; i < m.size(); ++i) tr += state->value[i][i];
    return tr;
  });
}

IntegerSequence make_apery() {
  // (n+1)^3 a_{n+1} = (34n^3+51n^2+27n+5) a_n - n^3 a_{n-1}, a_0 = 1, a_1 = 5.
  // Exposed as term(n) = Apery(n) for n >= 1; the division by (n+1)^3 is
  // asserted exact at every step.
  return IntegerSequence("apery", [](std::uint64_t n, const std::vector<Int>& prior) {
    if (n == 1) return Int(5);
    const std::uint64_t j = n - 1;  // a_{j+1} from a_j, a_{j-1}
    const Int jj(static_cast<unsigned long>(j));
    const Int a_j = prior[j - 1];
    const Int a_jm1 = j == 1 ? Int(1) : prior[j - 2];
    Int numer = (34 * jj * jj * jj + 51 * jj * jj + 27 * jj + 5) * a_j - jj * jj * jj * a_jm1;
    Int cube = (jj + 1) * (jj + 1) * (jj + 1);
    Int quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), numer.get_mpz_t(), cube.get_mpz_t());
    if (rem != 0) {
      throw std::logic_error("apery: recurrence step not divisible by (n+1)^3 at n = " +
                             std::to_string(j) + " (implementation bug)");
    }
    return quot;
  });
}

}  // namespace

IntegerSequence make_sequence(const SequenceSpec& spec) {
  const std::string& f = spec.family;
  if (f == "geometric") {
    const Int a = spec.base;
    return IntegerSequence("geometric(" + a.get_str() + ")",
                           [a](std::uint64_t n, const std::vector<Int>&) { return pow_int(a, n); });
  }
  if (f == "lucas") {
    return IntegerSequence("lucas", [](std::uint64_t n, const std::vector<Int>& prior) {
      if (n == 1) return Int(1);
      if (n == 2) return Int(3);
      return Int(prior[n - 2] + prior[n - 3]);
    });
  }
  if (f == "fibonacci") {
    return IntegerSequence("fibonacci", [](std::uint64_t n, const std::vector<Int>& prior) {
      if (n <= 2) return Int(1);
      return Int(prior[n - 2] + prior[n - 3]);
    });
  }
  if (f == "perrin") {
    // P(0)=3, P(1)=0, P(2)=2, P(n)=P(n-2)+P(n-3); term(n) = P(n).
    return IntegerSequence("perrin", [](std::uint64_t n, const std::vector<Int>& prior) {
      if (n == 1) return Int(0);
      if (n == 2) return Int(2);
      if (n == 3) return Int(3);
      return Int(prior[n - 3] + prior[n - 4]);
    });
  }
  if (f == "apery") return make_apery();
  if (f == "sigma") {
    return IntegerSequence("sigma", [](std::uint64_t n, const std::vector<Int>&) {
      Int s = 0;
      for (std::uint64_t d : divisors(factorize(n))) s += static_cast<unsigned long>(d);
      return s;
    });
  }
  if (f == "matrix_trace") return make_matrix_trace(spec.matrix);
  if (f == "product_family") {
    if (!spec.input) throw std::invalid_argument("product_family: missing input sequence b");
    auto b = *spec.input;
    return IntegerSequence("product_family", [b](std::uint64_t n, const std::vector<Int>&) {
      Int prod = 1;
      for (std::uint64_t d : divisors(factorize(n)))
        prod *= Int(static_cast<unsigned long>(d)) * b.term(d) + 1;
      return prod;
    });
  }
  if (f == "divisor_sum_family") {
    if (!spec.input) throw std::invalid_argument("divisor_sum_family: missing input sequence g");
    auto g = *spec.input;
    return IntegerSequence("divisor_sum_family", [g](std::uint64_t n, const std::vector<Int>&) {
      Int s = 0;
      for (std::uint64_t d : divisors(factorize(n))) s += Int(static_cast<unsigned long>(d)) * g.term(d);
      return s;
    });
  }
  if (f == "rad_family") {
    const FuncTable table = spec.table;
    return IntegerSequence("rad_family", [table](std::uint64_t n, const std::vector<Int>&) {
      const FactoredInt fn = factorize(n);
      const std::uint64_t rad = radical(fn);
      Int s = 0;
      for (const auto& pp : fn.factors)
        s += Int(static_cast<unsigned long>(pp.prime)) * table(pp.prime, rad);
      return s;
    });
  }
  if (f == "mu_rad_family") {
    const FuncTable table = spec.table;
    return IntegerSequence("mu_rad_family", [table](std::uint64_t n, const std::vector<Int>&) {
      const FactoredInt fn = factorize(n);
      const std::uint64_t rad = radical(fn);
      Int s = 0;
      for (std::uint64_t d : divisors(fn)) {
        if (d == 1) continue;  // g_1 is identically 0
        const int mu = mobius(factorize(d));
        if (mu == 0) continue;
        s += mu * Int(static_cast<unsigned long>(d)) * table(d, rad);
      }
      return s;
    });
  }
  if (f == "spf" || f == "gpf" || f == "k_spf" || f == "k_gpf") {
    const PrimeOrder order =
        (f == "spf" || f == "k_spf") ? PrimeOrder::Smallest : PrimeOrder::Greatest;
    const unsigned k = (f == "spf" || f == "gpf") ? 1 : spec.k;
    std::string name = f;
    if (k != 1 || f == "k_spf" || f == "k_gpf") name += "(" + std::to_string(k) + ")";
    return IntegerSequence(name, [order, k](std::uint64_t n, const std::vector<Int>&) {
      return Int(static_cast<unsigned long>(prime_factor_rank(factorize(n), k, order)));
    });
  }
  if (f == "n_intlog") {
    return IntegerSequence("n_intlog", [](std::uint64_t n, const std::vector<Int>&) {
      Int s = 0;
      for (const auto& pp : factorize(n).factors)
        s += Int(pp.exponent) * static_cast<unsigned long>(pp.prime);
      return Int(s * static_cast<unsigned long>(n));
    });
  }
  if (f == "identity") {
    return IntegerSequence("identity", [](std::uint64_t n, const std::vector<Int>&) {
      return Int(static_cast<unsigned long>(n));
    });
  }
  if (f == "constant") {
    const Int c = spec.base;
    return IntegerSequence("constant(" + c.get_str() + ")",
                           [c](std::uint64_t, const std::vector<Int>&) { return c; });
  }
  if (f == "ce_epsilon_prime_power") {
    return IntegerSequence("ce_epsilon_prime_power", [](std::uint64_t n, const std::vector<Int>&) {
      return Int(n == 1 || factorize(n).is_prime_power() ? 1 : 0);
    });
  }
  if (f == "ce_2k1") {
    return IntegerSequence("ce_2k1", [](std::uint64_t n, const std::vector<Int>&) {
      const unsigned k = valuation(n, 2);
      return Int((Int(1) << (k + 1)) - 1);
    });
  }
  if (f == "ce_12") {
    return IntegerSequence("ce_12", [](std::uint64_t n, const std::vector<Int>&) {
      if (n % 12 != 0) return Int(4);
      const unsigned k = valuation(n, 2);  // k >= 2 here
      return Int(6 * ((Int(1) << (k - 2)) - 1) + 1);
    });
  }
  if (f == "ce_6_15") {
    return IntegerSequence("ce_6_15", [](std::uint64_t n, const std::vector<Int>&) {
      if (n % 6 == 0) {
        const unsigned k = valuation(n, 2);
        return Int((Int(1) << k) - 1);
      }
      if (n % 15 == 0 && n % 2 != 0) {
        const unsigned k = valuation(n, 3);
        Int p3 = 1;
        for (unsigned i = 1; i < k; ++i) p3 *= 3;
        return Int(1 + 15 * (p3 - 1) / 2);
      }
      return Int(6);
    });
  }
  if (f == "ce_parity") {
    return IntegerSequence("ce_parity", [](std::uint64_t n, const std::vector<Int>&) {
      return Int(n % 2 == 1 || (n / 2) % 2 == 1 ? 1 : 3);
    });
  }
  if (f == "npow") {
    const unsigned k = spec.k;
    return IntegerSequence("npow(" + std::to_string(k) + ")",
                           [k](std::uint64_t n, const std::vector<Int>&) {
                             if (n == 1) return Int(0);
                             return pow_int(Int(static_cast<unsigned long>(n)), k);
                           });
  }
  throw std::invalid_argument("make_sequence: unknown family '" + f + "'");
}

BFileResult parse_bfile(const std::string& text, bool allow_offset_shift) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<Int> terms;
  bool have_first = false;
  bool shifted = false;
  long long expected = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();  // CRLF
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line);
    long long index = 0;
    std::string value_tok, extra;
    if (!(fields >> index >> value_tok)) {
      throw std::runtime_error("b-file: malformed line " + std::to_string(lineno) + ": '" + line + "'");
    }
    if (fields >> extra) {
      throw std::runtime_error("b-file: trailing tokens on line " + std::to_string(lineno));
    }
    Int value;
    if (mpz_set_str(value.get_mpz_t(), value_tok.c_str(), 10) != 0) {
      throw std::runtime_error("b-file: bad value on line " + std::to_string(lineno) + ": '" +
                               value_tok + "'");
    }
    if (!have_first) {
      if (index == 0) {
        if (!allow_offset_shift) {
          throw std::runtime_error(
              "b-file: starts at index 0; pass the offset-shift flag to re-index from 1");
        }
        shifted = true;
      } else if (index != 1) {
        throw std::runtime_error("b-file: must start at index 1 (or 0 with offset shift), got " +
                                 std::to_string(index));
      }
      have_first = true;
      expected = index;
    }
    if (index < expected) {
      throw std::runtime_error("b-file: duplicate or decreasing index " + std::to_string(index) +
                               " on line " + std::to_string(lineno));
    }
    if (index > expected) {
      throw std::runtime_error("b-file: gap before index " + std::to_string(index) + " on line " +
                               std::to_string(lineno));
    }
    terms.push_back(std::move(value));
    ++expected;
  }
  if (terms.empty()) throw std::runtime_error("b-file: no data lines");
  std::string name = shifted ? "bfile(shifted+1)" : "bfile";
  return {sequence_from_terms(std::move(name), std::move(terms)), shifted};
}

std::vector<Int> lambert_coefficients(const IntegerSequence& seq, std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("lambert_coefficients: N must be >= 1");
  std::vector<Int> b;
  b.reserve(N);
  for (std::uint64_t n = 1; n <= N; ++n) {
    Int s = 0;
    for (std::uint64_t d : divisors(factorize(n))) {
      const int mu = mobius(factorize(d));
      if (mu != 0) s += mu * seq.term(n / d);
    }
    b.push_back(std::move(s));
  }
  return b;
}

std::vector<Rat> exp_product_exponents(const IntegerSequence& seq, std::uint64_t N) {
  std::vector<Int> b = lambert_coefficients(seq, N);
  std::vector<Rat> c;
  c.reserve(N);
  for (std::uint64_t n = 1; n <= N; ++n) {
    Rat r(b[n - 1], Int(static_cast<unsigned long>(n)));
    r.canonicalize();
    c.push_back(std::move(r));
  }
  return c;
}

bool denominators_supported(const std::vector<Rat>& exponents, const PrimeSet& S) {
  for (const Rat& c : exponents) {
    Int den = c.get_den();
    if (den == 1) continue;
    // denominators divide the index, so they fit in 64 bits at desk scale
    for (const auto& pp : factorize(den.get_ui()).factors) {
      if (!S.contains(pp.prime)) return false;
    }
  }
  return true;
}

IntegerSequence alladi_dual(const IntegerSequence& seq, std::uint64_t N) {
  std::vector<Int> terms;
  terms.reserve(N);
  for (std::uint64_t n = 1; n <= N; ++n) {
    Int s = 0;
    for (std::uint64_t d : divisors(factorize(n))) {
      const int mu = mobius(factorize(d));
      if (mu != 0) s += mu * seq.term(d);
    }
    terms.push_back(Int(-s));
  }
  return sequence_from_terms("dual(" + seq.name() + ")", std::move(terms));
}

}  // namespace eg
