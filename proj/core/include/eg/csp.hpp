#pragma once

#include <map>
#include <optional>

#include "eg/qsequences.hpp"

namespace eg {

/// The values a_n(omega_n^i) for i = 0..n-1; nullopt marks an entry where the
/// polynomial takes no common integer value on that root class.
struct FixedPointProfile {
  std::uint64_t n = 0;
  std::vector<std::optional<Int>> values;
};

FixedPointProfile profile(const QSequence& qseq, std::uint64_t n);

/// Orbit decomposition of a hypothetical Z_n action with these fixed-point
/// counts: orbit_counts[d] = number of orbits of size d.
struct OrbitTable {
  bool realizable = false;
  std::string reason;  // set when not realizable
  std::map<std::uint64_t, Int> orbit_counts;
};

/// Decides realizability by Moebius inversion over the subgroup lattice:
/// with Fix(g) the common value on the gcd class g | n, the element count in
/// size-d orbits is m_d = sum_{e|d} mu(d/e) Fix(e); realizable iff every m_d
/// is nonnegative and divisible by d.
OrbitTable realizable(const FixedPointProfile& profile);

enum class TripleVerdict { Pass, Fail, PreconditionUnmet };

struct TripleResult {
  TripleVerdict verdict = TripleVerdict::Fail;
  std::string detail;
};

/// CSP triple for a q-Euler-Gauss sequence at n: requires a_d(1) != 0 for
/// every divisor d | n with n/d not a prime power (else precondition-unmet);
/// then checks the profile equals a_{gcd(n,i)}(1) and is realizable.
TripleResult verify_standard_triple(const QSequence& qseq, std::uint64_t n);

/// CSP triple for the q-SPF / q-GPF sequence at n: the profile must equal
/// s_n (resp. g_n) exactly on the indices i it divides, 0 elsewhere, and be
/// realizable with |X_n| = s_n (resp. g_n). n = 1 is the empty set.
TripleResult verify_spf_triple(PrimeOrder order, std::uint64_t n);

}  // namespace eg
