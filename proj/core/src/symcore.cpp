#include "nmsym/symcore.hpp"

#include <algorithm>

namespace nmsym {

Int binomial(unsigned n, long long k) {
  if (k < 0 || k > static_cast<long long>(n)) return 0;
  auto kk = static_cast<unsigned>(k);
  kk = std::min(kk, n - kk);
  Int r = 1;
  for (unsigned i = 1; i <= kk; ++i) {
    r *= n - kk + i;
    r /= i;  // exact at every step
  }
  return r;
}

Scalar SigmaTable::zero() const {
  return mode == Mode::Exact ? Scalar(0) : Scalar::float64(0.0);
}

Scalar SigmaTable::sigma_at(long long k) const {
  if (k < 0 || k > static_cast<long long>(n)) return zero();
  return sigma[static_cast<std::size_t>(k)];
}

Scalar SigmaTable::e_at(long long k) const {
  if (k < 0 || k > static_cast<long long>(n)) return zero();
  return e[static_cast<std::size_t>(k)];
}

SigmaTable sigma_all(const SymPoint& x) {
  const std::size_t n = x.n();
  SigmaTable t;
  t.n = n;
  t.mode = x.mode();
  const Scalar zero = x.mode() == Mode::Exact ? Scalar(0) : Scalar::float64(0.0);
  const Scalar one = x.mode() == Mode::Exact ? Scalar(1) : Scalar::float64(1.0);

  t.sigma.assign(n + 1, zero);
  t.sigma[0] = one;
  for (std::size_t i = 0; i < n; ++i) {
    // descending j keeps the update one-pass and in place
    for (std::size_t j = std::min(i + 1, n); j >= 1; --j)
      t.sigma[j] += x[i] * t.sigma[j - 1];
  }

  t.e.assign(n + 1, zero);
  for (std::size_t k = 0; k <= n; ++k) {
    Int c = binomial(static_cast<unsigned>(n), static_cast<long long>(k));
    Scalar denom = x.mode() == Mode::Exact ? Scalar(c) : Scalar::float64(c.convert_to<double>());
    t.e[k] = t.sigma[k] / denom;
  }
  return t;
}

Scalar sigma_oracle(const SymPoint& x, long long k) {
  const std::size_t n = x.n();
  if (n > 20) throw precondition_error("sigma_oracle: n > 20 (enumeration guard)");
  const Scalar zero = x.mode() == Mode::Exact ? Scalar(0) : Scalar::float64(0.0);
  const Scalar one = x.mode() == Mode::Exact ? Scalar(1) : Scalar::float64(1.0);
  if (k < 0 || k > static_cast<long long>(n)) return zero;
  if (k == 0) return one;

  const auto kk = static_cast<std::size_t>(k);
  std::vector<std::size_t> idx(kk);
  for (std::size_t i = 0; i < kk; ++i) idx[i] = i;
  Scalar sum = zero;
  while (true) {
    Scalar prod = one;
    for (std::size_t i : idx) prod *= x[i];
    sum += prod;
    // next k-combination of {0..n-1}
    std::size_t i = kk;
    while (i-- > 0) {
      if (idx[i] != i + n - kk) {
        ++idx[i];
        for (std::size_t j = i + 1; j < kk; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return sum;
    }
  }
}

Scalar sigma_split(const SymPoint& x, long long k) {
  if (x.n() < 3) throw precondition_error("sigma_split: n >= 3 required");
  std::vector<Scalar> rest(x.entries().begin() + 2, x.entries().end());
  SigmaTable tail = sigma_all(SymPoint(std::move(rest)));
  return x[0] * x[1] * tail.sigma_at(k - 2) + (x[0] + x[1]) * tail.sigma_at(k - 1) +
         tail.sigma_at(k);
}

bool garding_member(const SymPoint& x, long long k) {
  if (k < 1 || k > static_cast<long long>(x.n()))
    throw precondition_error("garding_member: k must be in 1..n");
  SigmaTable t = sigma_all(x);
  for (long long m = 1; m <= k; ++m)
    if (t.sigma_at(m).sign() <= 0) return false;
  return true;
}

SymPoint shift_vector(const SymPoint& x, const Scalar& t) {
  std::vector<Scalar> out;
  out.reserve(x.n());
  for (const auto& e : x.entries()) out.push_back(e + t);
  return SymPoint(std::move(out));
}

}  // namespace nmsym
