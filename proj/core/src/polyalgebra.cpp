#include "nmsym/polyalgebra.hpp"

#include "nmsym/operators.hpp"
#include "nmsym/rng.hpp"

namespace nmsym {

namespace {

void require_exact(const SymPoint& x, const char* who) {
  if (x.mode() != Mode::Exact) throw precondition_error(std::string(who) + ": exact mode required");
}

Rational e_rat(const SigmaTable& t, long long k) { return t.e_at(k).rat(); }

}  // namespace

UniPoly poly_from_roots(const SymPoint& x) {
  require_exact(x, "poly_from_roots");
  SigmaTable t = sigma_all(x);
  const long long n = static_cast<long long>(x.n());
  // constant term first: coefficient of t^j is (-1)^{n-j} sigma_{n-j}
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (long long j = 0; j <= n; ++j) {
    Rational v = t.sigma_at(n - j).rat();
    c[static_cast<std::size_t>(j)] = ((n - j) % 2 != 0) ? Rational(-v) : v;
  }
  return UniPoly(std::move(c));
}

UniPoly quartic_reduction(const SymPoint& x, long long k) {
  require_exact(x, "quartic_reduction");
  const long long n = static_cast<long long>(x.n());
  if (k < 3 || k > n - 1) throw precondition_error("quartic_reduction: k must be in 3..n-1");
  SigmaTable t = sigma_all(x);
  return UniPoly({e_rat(t, k + 1), -4 * e_rat(t, k), 6 * e_rat(t, k - 1), -4 * e_rat(t, k - 2),
                  e_rat(t, k - 3)});
}

UniPoly truncation_reduction(const SymPoint& x, long long k) {
  require_exact(x, "truncation_reduction");
  const long long n = static_cast<long long>(x.n());
  if (k < 1 || k > n - 1) throw precondition_error("truncation_reduction: k must be in 1..n-1");
  SigmaTable t = sigma_all(x);
  // sum_j (-1)^j C(k+1,j) E_j t^{k+1-j}, constant term first
  std::vector<Rational> c(static_cast<std::size_t>(k) + 2);
  for (long long j = 0; j <= k + 1; ++j) {
    Rational v = Rational(binomial(static_cast<unsigned>(k + 1), j)) * e_rat(t, j);
    c[static_cast<std::size_t>(k + 1 - j)] = (j % 2 != 0) ? Rational(-v) : v;
  }
  return UniPoly(std::move(c));
}

SymPoint epsilon_perturb(const SymPoint& y, const Scalar& eps) {
  if (eps.sign() <= 0) throw precondition_error("epsilon_perturb: eps > 0 required");
  bool seen_nonzero = false;
  for (const auto& v : y.entries()) {
    if (v.is_zero() && seen_nonzero)
      throw precondition_error("epsilon_perturb: zero entries must come first");
    if (!v.is_zero()) seen_nonzero = true;
  }
  std::vector<Scalar> out;
  out.reserve(y.n());
  for (const auto& v : y.entries()) out.push_back(v.is_zero() ? eps : v);
  return SymPoint(std::move(out));
}

std::vector<MultiPoly> esf_table(const std::vector<MultiPoly>& entries) {
  if (entries.empty()) throw precondition_error("esf_table: empty entry list");
  const auto& vars = entries.front().vars();
  std::vector<MultiPoly> sigma(entries.size() + 1, MultiPoly(vars));
  sigma[0] = MultiPoly::constant(vars, 1);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = std::min(i + 1, entries.size()); j >= 1; --j)
      sigma[j] = sigma[j] + entries[i] * sigma[j - 1];
  return sigma;
}

namespace {

MultiPoly mp_E(const std::vector<MultiPoly>& sigma, std::size_t n, long long k,
               const std::vector<std::string>& vars) {
  if (k < 0 || k > static_cast<long long>(n)) return MultiPoly(vars);
  return sigma[static_cast<std::size_t>(k)] *
         Rational(1, Int(binomial(static_cast<unsigned>(n), k)));
}

// S_{k;s} over a symbolic alpha.
MultiPoly mp_S_ks(const std::vector<MultiPoly>& sigma, std::size_t n, const MultiPoly& alpha,
                  int s, long long k, const std::vector<std::string>& vars) {
  MultiPoly sum(vars);
  for (int i = 0; i <= s; ++i)
    sum = sum + alpha.pow(static_cast<unsigned>(i)) *
                    (mp_E(sigma, n, k - i, vars) * Rational(binomial(static_cast<unsigned>(s), i)));
  return sum;
}

}  // namespace

bool verify_lemma21() {
  std::vector<std::string> vars{"z1", "z2", "z3", "z4", "alpha", "beta"};
  auto var = [&](std::size_t i) { return MultiPoly::variable(vars, i); };
  std::vector<MultiPoly> z{var(0), var(1), var(2), var(3)};
  MultiPoly A = var(4), B = var(5);
  auto sigma = esf_table(z);
  auto E = [&](long long k) { return mp_E(sigma, 4, k, vars); };
  auto S = [&](long long k) { return E(k) + (A + B) * E(k - 1) + A * B * E(k - 2); };

  MultiPoly lhs = (S(3) * S(3) - S(2) * S(4)) * Rational(576);

  auto bracket = [&](int i, int j, int k, int l) {
    MultiPoly b = (z[i] - z[j]) * (z[k] + A) * (z[l] + B) + (z[i] - z[j]) * (z[l] + A) * (z[k] + B);
    return b * b;
  };
  MultiPoly squares = bracket(0, 1, 2, 3) + bracket(0, 2, 1, 3) + bracket(0, 3, 1, 2) +
                      bracket(1, 2, 0, 3) + bracket(1, 3, 0, 2) + bracket(2, 3, 0, 1);
  auto cross = [&](int i, int j, int k, int l) {
    MultiPoly c = (z[i] - z[j]) * (z[k] - z[l]) * (A - B);
    return c * c;
  };
  MultiPoly crosses = cross(0, 1, 2, 3) + cross(0, 2, 1, 3) + cross(0, 3, 1, 2);
  MultiPoly rhs = squares * Rational(3) + crosses * Rational(2);
  return lhs == rhs;
}

bool verify_sos_n5() {
  std::vector<std::string> vars{"z1", "z2", "z3", "z4", "z5", "alpha"};
  auto var = [&](std::size_t i) { return MultiPoly::variable(vars, i); };
  std::vector<MultiPoly> z{var(0), var(1), var(2), var(3), var(4)};
  MultiPoly A = var(5);
  auto sigma = esf_table(z);
  auto S = [&](long long k) { return mp_S_ks(sigma, 5, A, 3, k, vars); };

  MultiPoly lhs = (S(4) * S(4) - S(3) * S(5)) * Rational(100);

  MultiPoly rhs(vars);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      MultiPoly term = (z[i] - z[j]) * (z[i] - z[j]);
      for (int l = 0; l < 5; ++l) {
        if (l == i || l == j) continue;
        term = term * ((z[l] + A) * (z[l] + A));
      }
      rhs = rhs + term;
    }
  return lhs == rhs;
}

bool verify_eq32(long long k, long long k_bound) {
  if (k < 2) throw precondition_error("verify_eq32: k >= 2 required");
  if (k > k_bound)
    throw precondition_error("verify_eq32: k above symbolic bound; use identity_sample");
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("z" + std::to_string(i));
  std::vector<MultiPoly> z;
  for (std::size_t i = 0; i < n; ++i) z.push_back(MultiPoly::variable(vars, i));
  auto sigma = esf_table(z);
  auto E = [&](long long m) { return mp_E(sigma, n, m, vars); };

  MultiPoly lhs =
      (E(k) * E(k) - E(k - 1) * E(k + 1)) * Rational(k * static_cast<long long>(n * n));

  MultiPoly rhs(vars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MultiPoly term = (z[i] - z[j]) * (z[i] - z[j]);
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        term = term * (z[l] * z[l]);
      }
      rhs = rhs + term;
    }
  return lhs == rhs;
}

bool verify_eq33(long long k, long long k_bound) {
  if (k < 2) throw precondition_error("verify_eq33: k >= 2 required");
  if (k > k_bound)
    throw precondition_error("verify_eq33: k above symbolic bound; use identity_sample");
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  const int s = static_cast<int>(k) - 1;
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("z" + std::to_string(i));
  vars.push_back("alpha");
  std::vector<MultiPoly> z;
  for (std::size_t i = 0; i < n; ++i) z.push_back(MultiPoly::variable(vars, i));
  MultiPoly A = MultiPoly::variable(vars, n);

  auto sigma = esf_table(z);
  auto S = [&](long long m) { return mp_S_ks(sigma, n, A, s, m, vars); };
  MultiPoly lhs = S(k) * S(k) - S(k - 1) * S(k + 1);

  std::vector<MultiPoly> shifted;
  for (const auto& zi : z) shifted.push_back(zi + A);
  auto sig_sh = esf_table(shifted);
  auto Esh = [&](long long m) { return mp_E(sig_sh, n, m, vars); };
  MultiPoly rhs = Esh(k) * Esh(k) - Esh(k - 1) * Esh(k + 1);
  return lhs == rhs;
}

IdentityId parse_identity_id(const std::string& name) {
  if (name == "lemma21") return IdentityId::Lemma21;
  if (name == "sos5") return IdentityId::SosN5;
  if (name == "eq32") return IdentityId::Eq32;
  if (name == "eq33") return IdentityId::Eq33;
  throw precondition_error("unknown identity id: '" + name + "'");
}

namespace {

SymPoint random_point(CounterRng& rng, std::size_t n) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar(rng.next_rational(1000000, 1000)));
  return SymPoint(std::move(v));
}

bool sample_eq32(long long k, CounterRng rng) {
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  SymPoint z = random_point(rng, n);
  SigmaTable t = sigma_all(z);
  Rational lhs = Rational(k * static_cast<long long>(n * n)) *
                 (e_rat(t, k) * e_rat(t, k) - e_rat(t, k - 1) * e_rat(t, k + 1));
  Rational rhs = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational diff = z[i].rat() - z[j].rat();
      Rational term = diff * diff;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        term *= z[l].rat() * z[l].rat();
      }
      rhs += term;
    }
  return lhs == rhs;
}

bool sample_eq33(long long k, CounterRng rng) {
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  const int s = static_cast<int>(k) - 1;
  SymPoint z = random_point(rng, n);
  Scalar alpha{rng.next_rational(1000000, 1000)};
  Scalar lk = eval_S_ks(z, alpha, s, k);
  Scalar lhs = lk * lk - eval_S_ks(z, alpha, s, k - 1) * eval_S_ks(z, alpha, s, k + 1);
  SigmaTable t = sigma_all(shift_vector(z, alpha));
  Scalar rhs = t.e_at(k) * t.e_at(k) - t.e_at(k - 1) * t.e_at(k + 1);
  return lhs == rhs;
}

bool sample_lemma21(CounterRng rng) {
  SymPoint z = random_point(rng, 4);
  Scalar A{rng.next_rational(1000000, 1000)}, B{rng.next_rational(1000000, 1000)};
  auto S = [&](long long m) { return eval_S(z, A, B, m); };
  Scalar lhs = Scalar(576) * (S(3) * S(3) - S(2) * S(4));
  auto bracket = [&](int i, int j, int k, int l) {
    Scalar b = (z[i] - z[j]) * (z[k] + A) * (z[l] + B) + (z[i] - z[j]) * (z[l] + A) * (z[k] + B);
    return b * b;
  };
  auto cross = [&](int i, int j, int k, int l) {
    Scalar c = (z[i] - z[j]) * (z[k] - z[l]) * (A - B);
    return c * c;
  };
  Scalar rhs = Scalar(3) * (bracket(0, 1, 2, 3) + bracket(0, 2, 1, 3) + bracket(0, 3, 1, 2) +
                            bracket(1, 2, 0, 3) + bracket(1, 3, 0, 2) + bracket(2, 3, 0, 1)) +
               Scalar(2) * (cross(0, 1, 2, 3) + cross(0, 2, 1, 3) + cross(0, 3, 1, 2));
  return lhs == rhs;
}

bool sample_sos_n5(CounterRng rng) {
  SymPoint z = random_point(rng, 5);
  Scalar A{rng.next_rational(1000000, 1000)};
  auto S = [&](long long m) { return eval_S_ks(z, A, 3, m); };
  Scalar lhs = Scalar(100) * (S(4) * S(4) - S(3) * S(5));
  Scalar rhs{0};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      Scalar term = (z[i] - z[j]) * (z[i] - z[j]);
      for (int l = 0; l < 5; ++l) {
        if (l == i || l == j) continue;
        term *= (z[l] + A) * (z[l] + A);
      }
      rhs += term;
    }
  return lhs == rhs;
}

}  // namespace

bool identity_sample(IdentityId id, long long k, unsigned trials, std::uint64_t seed) {
  for (unsigned trial = 0; trial < trials; ++trial) {
    CounterRng rng(seed, static_cast<std::uint64_t>(id), trial);
    bool ok = false;
    switch (id) {
      case IdentityId::Lemma21: ok = sample_lemma21(rng); break;
      case IdentityId::SosN5: ok = sample_sos_n5(rng); break;
      case IdentityId::Eq32: ok = sample_eq32(k, rng); break;
      case IdentityId::Eq33: ok = sample_eq33(k, rng); break;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace nmsym
