#include "eg/qpoly.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace eg {

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::from_coeffs(std::vector<Int> coeffs) {
  QPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

QPoly QPoly::monomial(Int c, std::size_t degree) {
  if (c == 0) return {};
  QPoly p;
  p.coeffs_.assign(degree + 1, Int(0));
  p.coeffs_[degree] = std::move(c);
  return p;
}

const Int& QPoly::leading() const {
  if (is_zero()) throw std::logic_error("QPoly::leading on zero polynomial");
  return coeffs_.back();
}

Int QPoly::eval_at_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

Int QPoly::eval_int(const Int& x) const {
  Int s = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * x + *it;
  return s;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (Int& c : p.coeffs_) c = -c;
  return p;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly::from_coeffs(std::move(out));
}

QPoly q_integer(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("q_integer: n and m must be >= 1");
  std::vector<Int> coeffs(m * (n - 1) + 1, Int(0));
  for (std::uint64_t j = 0; j < n; ++j) coeffs[j * m] = 1;
  return QPoly::from_coeffs(std::move(coeffs));
}

QPoly substitute_power(const QPoly& a, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("substitute_power: d must be >= 1");
  if (d == 1 || a.is_zero()) return a;
  std::vector<Int> out(static_cast<std::size_t>(a.degree()) * d + 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i * d] = a.coeffs()[i];
  return QPoly::from_coeffs(std::move(out));
}

DivRem divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  const Int& lead = b.leading();
  if (lead != 1 && lead != -1) {
    throw std::invalid_argument("divrem: divisor must be monic up to sign, got leading " +
                                lead.get_str());
  }
  // A negative leading coefficient is absorbed by negating divisor and quotient.
  if (lead == -1) {
    DivRem dr = divrem(a, -b);
    dr.quotient = -dr.quotient;
    return dr;
  }
  const int db = b.degree();
  if (a.degree() < db) return {QPoly{}, a};
  std::vector<Int> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Int> quot(a.coeffs().size() - db, Int(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    Int c = rem[i];
    if (c == 0) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  rem.resize(db);
  return {QPoly::from_coeffs(std::move(quot)), QPoly::from_coeffs(std::move(rem))};
}

bool divides(const QPoly& b, const QPoly& a) { return divrem(a, b).remainder.is_zero(); }

namespace {

struct CycloCache {
  std::mutex mu;
  std::map<std::uint64_t, QPoly> table;
};

CycloCache& cyclo_cache() {
  static CycloCache cache;
  return cache;
}

QPoly compute_cyclotomic(std::uint64_t n, std::map<std::uint64_t, QPoly>& table) {
  if (auto it = table.find(n); it != table.end()) return it->second;
  // q^n - 1 divided by Phi_d for all proper divisors d.
  QPoly num = QPoly::monomial(1, n) - QPoly(1);
  for (std::uint64_t d : divisors(factorize(n))) {
    if (d == n) continue;
    num = divrem(num, compute_cyclotomic(d, table)).quotient;
  }
  table.emplace(n, num);
  return num;
}

}  // namespace

const QPoly& cyclotomic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be >= 1");
  auto& cache = cyclo_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  compute_cyclotomic(n, cache.table);
  return cache.table.at(n);
}

std::optional<Int> eval_at_root(const QPoly& a, std::uint64_t n, std::uint64_t i) {
  if (n == 0) throw std::invalid_argument("eval_at_root: n must be >= 1");
  const std::uint64_t g = i == 0 ? n : gcd_u64(n, i);
  const std::uint64_t m = n / g;
  if (m == 1) return a.eval_at_one();
  const QPoly rem = divrem(a, cyclotomic(m)).remainder;
  if (rem.degree() > 0) return std::nullopt;
  return rem.is_zero() ? Int(0) : rem.coeffs()[0];
}

std::string to_string(const QPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Int& c = a.coeffs()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str();
      out << "q";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

void load_cyclotomic_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  auto& cache = cyclo_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::uint64_t n = 0;
    if (!(ss >> n) || n == 0) continue;
    std::vector<Int> coeffs;
    std::string tok;
    while (ss >> tok) coeffs.emplace_back(tok);
    if (!coeffs.empty()) cache.table.emplace(n, QPoly::from_coeffs(std::move(coeffs)));
  }
}

void save_cyclotomic_cache(const std::string& path) {
  auto& cache = cyclo_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  std::ofstream out(path, std::ios::trunc);
  if (!out) return;
  for (const auto& [n, poly] : cache.table) {
    out << n;
    for (const Int& c : poly.coeffs()) out << ' ' << c.get_str();
    out << '\n';
  }
}

}  // namespace eg
