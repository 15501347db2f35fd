#include "eg/qsequences.hpp"

namespace eg {

QSequence::QSequence(std::string name, Generator gen) : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->gen = std::move(gen);
}

QPoly QSequence::term(std::uint64_t n) const {
  if (!state_) throw std::logic_error("QSequence: empty");
  if (n == 0) throw std::out_of_range(state_->name + ": sequence indices start at 1");
  std::lock_guard<std::mutex> lock(state_->mu);
  while (state_->cache.size() < n) {
    state_->cache.push_back(state_->gen(state_->cache.size() + 1, state_->cache));
  }
  return state_->cache[n - 1];
}

QSequence qsequence_from_terms(std::string name, std::vector<QPoly> terms) {
  auto holder = std::make_shared<std::vector<QPoly>>(std::move(terms));
  return QSequence(std::move(name), [holder](std::uint64_t n, const std::vector<QPoly>&) {
    return n <= holder->size() ? (*holder)[n - 1] : QPoly{};
  });
}

QSequence q_gauss_from(const QSequence& g) {
  return QSequence("qgauss_from(" + g.name() + ")",
                   [g](std::uint64_t n, const std::vector<QPoly>&) {
                     QPoly a;
                     for (std::uint64_t d : divisors(factorize(n))) {
                       const std::uint64_t nd = n / d;
                       const QPoly gd = g.term(nd);
                       if (gd.is_zero()) continue;
                       a += q_integer(nd, d) * substitute_power(gd, d);
                     }
                     return a;
                   });
}

QSequence q_prime_factor_seq(PrimeOrder order, unsigned k) {
  std::string name = order == PrimeOrder::Smallest ? "q_spf" : "q_gpf";
  if (k != 1) name += "(" + std::to_string(k) + ")";
  return QSequence(name, [order, k](std::uint64_t n, const std::vector<QPoly>&) {
    if (n == 1) return cyclotomic(1);
    const std::uint64_t p = prime_factor_rank(factorize(n), k, order);
    return substitute_power(cyclotomic(p), n / p);
  });
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

QPoly qce_weak_term(std::uint64_t n, const std::vector<QPoly>& prior) {
  if (n % 12 != 0) return QPoly(1);
  const unsigned k = valuation(n, 2);  // k >= 2
  const std::uint64_t base = (std::uint64_t{1} << k) * 3;
  const std::uint64_t m = n / base;
  const std::uint64_t prev = base / 2;  // 2^{k-1} * 3 < n, so already cached
  return q_integer(std::uint64_t{1} << k, m) * q_integer(3, m) +
         substitute_power(prior[prev - 1], n / prev);
}

QPoly qce_power_term(std::uint64_t n, const std::vector<QPoly>&) {
  if (n % 12 != 0) return QPoly::monomial(1, n) - QPoly(1);
  const unsigned k = valuation(n, 2);
  const std::uint64_t base = (std::uint64_t{1} << k) * 3;
  return QPoly::monomial(1, n / base);
}

QPoly qce_prime_term(std::uint64_t n, const std::vector<QPoly>& prior) {
  if (n == 1) return cyclotomic(1);
  const FactoredInt fn = factorize(n);
  if (fn.is_prime_power() && fn.factors[0].exponent == 1) return q_integer(n);
  const unsigned k = valuation(n, 2);
  if (n == (std::uint64_t{1} << k) * 3 && k >= 2) {
    if (k % 2 == 0) return q_integer(3, std::uint64_t{1} << (k - 1)) + QPoly(2);
    return q_integer(2, (std::uint64_t{1} << (k - 1)) * 3) + q_integer(3, std::uint64_t{1} << k);
  }
  // otherwise: the canonical remainder of -sum_{d|n, d>1} mu(d) a_{n/d}(q^d)
  // modulo [n]_q
  QPoly s;
  for (std::uint64_t d : divisors(fn)) {
    if (d == 1) continue;
    const int mu = mobius(factorize(d));
    if (mu == 0) continue;
    QPoly t = substitute_power(prior[n / d - 1], d);
    if (mu == 1) {
      s -= t;
    } else {
      s += t;
    }
  }
  return divrem(s, q_integer(n)).remainder;
}

QPoly qce_odd2_term(std::uint64_t n, const std::vector<QPoly>&) {
  if (n % 2 == 1) return QPoly(1);
  const unsigned k = valuation(n, 2);
  return q_integer(2, std::uint64_t{1} << (k - 1)) + QPoly(1);
}

QPoly qce_omega_term(std::uint64_t n, const std::vector<QPoly>&) {
  if (n == 1) return q_integer(2);  // q + 1
  if (n % 2 == 1) return QPoly(2);
  const FactoredInt half = factorize(n / 2);
  if (half.is_one() || half.is_prime_power()) {
    return QPoly(1) - QPoly::monomial(1, n / 2);
  }
  const unsigned big = factorize(n).big_omega();  // >= 3 here
  const Int c = Int(1) << (big - 3);
  return QPoly::monomial(c - 1, n / 2) + QPoly(c + 1);
}

}  // namespace

QSequence make_qsequence(const QSequenceSpec& spec) {
  const std::string& f = spec.family;
  if (f == "q_spf" || f == "q_gpf") {
    return q_prime_factor_seq(f == "q_spf" ? PrimeOrder::Smallest : PrimeOrder::Greatest, spec.k);
  }
  if (f == "qgauss_from") {
    auto terms = spec.terms;
    QSequence g("g", [terms](std::uint64_t n, const std::vector<QPoly>&) {
      auto it = terms.find(n);
      return it != terms.end() ? it->second : QPoly{};
    });
    return q_gauss_from(g);
  }
  if (f == "constant_one") {
    return QSequence("constant_one", [](std::uint64_t, const std::vector<QPoly>&) { return QPoly(1); });
  }
  if (f == "qce_weak") return QSequence("qce_weak", qce_weak_term);
  if (f == "qce_power") return QSequence("qce_power", qce_power_term);
  if (f == "qce_prime") return QSequence("qce_prime", qce_prime_term);
  if (f == "qce_odd2") return QSequence("qce_odd2", qce_odd2_term);
  if (f == "qce_omega") return QSequence("qce_omega", qce_omega_term);
  throw std::invalid_argument("make_qsequence: unknown family '" + f + "'");
}

}  // namespace eg
