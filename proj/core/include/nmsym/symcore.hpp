#ifndef NMSYM_SYMCORE_HH
#define NMSYM_SYMCORE_HH

#include <cstdint>

#include "nmsym/scalar.hpp"

namespace nmsym {

// C(n,k), exact; 0 for k < 0 or k > n.
Int binomial(unsigned n, long long k);

// sigma[0..n] and e[0..n] with the out-of-range convention
// sigma_k = E_k = 0 for k < 0 or k > n, sigma_0 = E_0 = 1.
struct SigmaTable {
  std::size_t n = 0;
  Mode mode = Mode::Exact;
  std::vector<Scalar> sigma;  // size n+1
  std::vector<Scalar> e;      // size n+1

  Scalar sigma_at(long long k) const;
  Scalar e_at(long long k) const;

 private:
  Scalar zero() const;
};

// One-pass descending-index recurrence, O(n^2) scalar multiplications.
SigmaTable sigma_all(const SymPoint& x);

// sigma_k by explicit subset enumeration; independent oracle, n <= 20.
Scalar sigma_oracle(const SymPoint& x, long long k);

// sigma_k via the two-variable split over x' = (x_3..x_n):
//   x_1 x_2 sigma_{k-2}(x') + (x_1+x_2) sigma_{k-1}(x') + sigma_k(x').
// Requires n >= 3.
Scalar sigma_split(const SymPoint& x, long long k);

// Strict Garding cone test: sigma_m(x) > 0 for m = 1..k. 1 <= k <= n.
bool garding_member(const SymPoint& x, long long k);

// (x_1 + t, ..., x_n + t).
SymPoint shift_vector(const SymPoint& x, const Scalar& t);

}  // namespace nmsym

#endif
