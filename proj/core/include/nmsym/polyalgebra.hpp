#ifndef NMSYM_POLYALGEBRA_HH
#define NMSYM_POLYALGEBRA_HH

#include <cstdint>

#include "nmsym/multipoly.hpp"
#include "nmsym/symcore.hpp"
#include "nmsym/unipoly.hpp"

namespace nmsym {

// P(t) = prod (t - x_i); monic of degree n, coefficients
// (-1)^j C(n,j) E_j(x). Exact mode only.
UniPoly poly_from_roots(const SymPoint& x);

// The quartic derivative reduction at s=1:
//   E_{k-3} t^4 - 4 E_{k-2} t^3 + 6 E_{k-1} t^2 - 4 E_k t + E_{k+1},
// real-rooted whenever x is real. 3 <= k <= n-1.
UniPoly quartic_reduction(const SymPoint& x, long long k);

// The degree-(k+1) reduction sum_j (-1)^j C(k+1,j) E_j(x) t^{k+1-j},
// real-rooted whenever x is real. 1 <= k <= n-1.
UniPoly truncation_reduction(const SymPoint& x, long long k);

// Adds eps > 0 to exactly the zero entries of y; zero entries must come
// first (checked).
SymPoint epsilon_perturb(const SymPoint& y, const Scalar& eps);

// Elementary symmetric polynomials of arbitrary ring elements (the same
// descending recurrence as sigma_all); table[k] = sigma_k(entries).
std::vector<MultiPoly> esf_table(const std::vector<MultiPoly>& entries);

// Symbolic certificates, each by exact canonical-form comparison.
bool verify_lemma21();
bool verify_sos_n5();
bool verify_eq32(long long k, long long k_bound = 6);
bool verify_eq33(long long k, long long k_bound = 5);

enum class IdentityId { Lemma21, SosN5, Eq32, Eq33 };
IdentityId parse_identity_id(const std::string& name);

// Randomized polynomial identity testing at seeded rational points
// (numerators in [-10^6, 10^6]); disagreement refutes, agreement is
// probabilistic evidence. Exact mode.
bool identity_sample(IdentityId id, long long k, unsigned trials, std::uint64_t seed);

}  // namespace nmsym

#endif
