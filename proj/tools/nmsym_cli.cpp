#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nmsym/counterexamples.hpp"
#include "nmsym/polyalgebra.hpp"
#include "nmsym/rng.hpp"
#include "nmsym/serialize.hpp"

using namespace nmsym;

namespace {

constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  Mode mode = Mode::Exact;
  std::uint64_t seed = 0;
  unsigned trials = 1000;
  std::string output = "json";
};

json config_json(const RunConfig& cfg) {
  return json{{"mode", cfg.mode == Mode::Exact ? "exact" : "float"},
              {"seed", cfg.seed},
              {"trials", cfg.trials},
              {"output", cfg.output}};
}

void emit(const RunConfig& cfg, const std::string& command, json result) {
  json j{{"version", kVersion},
         {"generator", kGeneratorName},
         {"config", config_json(cfg)},
         {"command", command},
         {"result", std::move(result)}};
  std::cout << j.dump(2) << "\n";
}

// Shared flag bundle for commands that take a vector and an operator.
struct VectorArgs {
  std::string x, input;

  void attach(CLI::App* cmd, bool required = true) {
    auto* ox = cmd->add_option("--x", x, "vector as comma-separated rationals, e.g. \"1,2/3,-5\"");
    auto* oi = cmd->add_option("--input", input, "file holding the vector as a JSON array");
    ox->excludes(oi);
    if (required) {
      // one of the two must be present; checked at parse time
      cmd->callback([this]() {
        if (x.empty() && input.empty())
          throw CLI::ValidationError("--x or --input is required");
      });
    }
  }

  SymPoint point(Mode mode) const {
    if (!input.empty()) {
      std::ifstream f(input);
      if (!f) throw precondition_error("--input: cannot open '" + input + "'");
      json j = json::parse(f, nullptr, true);
      return point_from_json(j, mode);
    }
    return parse_point(x, mode);
  }
};

struct OperatorArgs {
  std::string alpha, beta, a, b;
  int s = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "shift alpha (with --beta, or with --s)");
    cmd->add_option("--beta", beta, "shift beta");
    cmd->add_option("--a", a, "quadratic coefficient a (with --b)");
    cmd->add_option("--b", b, "quadratic coefficient b");
    cmd->add_option("--s", s, "binomial order s >= 1 (with --alpha)");
  }

  OperatorSpec spec(Mode mode) const {
    bool quad = !a.empty() || !b.empty();
    bool binom = s != 0;
    if (quad && (binom || !alpha.empty() || !beta.empty()))
      throw precondition_error("--a/--b cannot be combined with --alpha/--beta/--s");
    if (quad) {
      if (a.empty() || b.empty()) throw precondition_error("--a and --b must be given together");
      return QuadCoef{Scalar::parse(a, mode), Scalar::parse(b, mode)};
    }
    if (binom) {
      if (alpha.empty()) throw precondition_error("--s requires --alpha");
      if (!beta.empty()) throw precondition_error("--s cannot be combined with --beta");
      return BinomialShift{Scalar::parse(alpha, mode), s};
    }
    if (alpha.empty() || beta.empty())
      throw precondition_error("operator needs --alpha/--beta, --a/--b, or --alpha/--s");
    return TwoShift{Scalar::parse(alpha, mode), Scalar::parse(beta, mode)};
  }
};

std::vector<Scalar> parse_scalar_list(const std::string& text, Mode mode) {
  return parse_point(text, mode).entries();
}

// ---- randomized verification suites ----------------------------------------

struct SuiteResult {
  std::string name;
  unsigned trials = 0;
  unsigned failures = 0;
  json first_failure;
};

SymPoint random_vector(CounterRng& rng, std::size_t n) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.next_rational(1000, 20));
  return SymPoint(std::move(v));
}

SymPoint random_positive_vector(CounterRng& rng, std::size_t n) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i)
    v.emplace_back(Rational(rng.next_int(1, 1000), rng.next_int(1, 20)));
  return SymPoint(std::move(v));
}

void record_failure(SuiteResult& out, json instance) {
  if (out.failures == 0) out.first_failure = std::move(instance);
  ++out.failures;
}

SuiteResult suite_theorem11(std::uint64_t seed, int n_max, unsigned trials) {
  SuiteResult out{"theorem11", trials};
  if (n_max < 4) throw precondition_error("theorem11 requires --n-max >= 4");
  for (unsigned trial = 0; trial < trials; ++trial) {
    CounterRng rng(seed, 11, trial);
    std::size_t n = static_cast<std::size_t>(rng.next_int(4, n_max));
    SymPoint x = random_vector(rng, n);
    Scalar alpha{rng.next_rational(1000, 20)}, beta{rng.next_rational(1000, 20)};
    for (long long k = 3; k <= static_cast<long long>(n) - 1; ++k) {
      auto r = newton_gap(x, TwoShift{alpha, beta}, k);
      if (r.gap.sign() < 0) {
        record_failure(out, json{{"trial", trial},
                                 {"x", to_json(x)},
                                 {"alpha", to_json(alpha)},
                                 {"beta", to_json(beta)},
                                 {"k", k},
                                 {"gap", to_json(r.gap)}});
      }
    }
  }
  return out;
}

SuiteResult suite_theorem14(std::uint64_t seed, int n_max, unsigned trials) {
  SuiteResult out{"theorem14", trials};
  if (n_max < 3) throw precondition_error("theorem14 requires --n-max >= 3");
  for (unsigned trial = 0; trial < trials; ++trial) {
    CounterRng rng(seed, 14, trial);
    int s = static_cast<int>(rng.next_int(1, std::min(4, n_max - 2)));
    std::size_t n = static_cast<std::size_t>(rng.next_int(s + 2, n_max));
    SymPoint x = random_vector(rng, n);
    Scalar alpha{rng.next_rational(1000, 20)};
    for (long long k = s + 1; k <= static_cast<long long>(n) - 1; ++k) {
      auto r = newton_gap(x, BinomialShift{alpha, s}, k);
      if (r.gap.sign() < 0) {
        record_failure(out, json{{"trial", trial},
                                 {"x", to_json(x)},
                                 {"alpha", to_json(alpha)},
                                 {"s", s},
                                 {"k", k},
                                 {"gap", to_json(r.gap)}});
      }
    }
  }
  return out;
}

SuiteResult suite_chain(std::uint64_t seed, int n_max, unsigned trials) {
  SuiteResult out{"chain", trials};
  if (n_max < 2) throw precondition_error("chain requires --n-max >= 2");
  for (unsigned trial = 0; trial < trials; ++trial) {
    CounterRng rng(seed, 20, trial);
    std::size_t n = static_cast<std::size_t>(rng.next_int(2, n_max));
    SymPoint x = random_positive_vector(rng, n);
    Scalar alpha{Rational(rng.next_int(0, 1000), rng.next_int(1, 20))};
    Scalar beta{Rational(rng.next_int(0, 1000), rng.next_int(1, 20))};
    auto r = maclaurin_chain(x, TwoShift{alpha, beta}, static_cast<long long>(n));
    bool ok = r.hypothesis_failures.empty() && r.monotone.has_value() && *r.monotone;
    if (!ok) {
      record_failure(out, json{{"trial", trial},
                               {"x", to_json(x)},
                               {"alpha", to_json(alpha)},
                               {"beta", to_json(beta)},
                               {"report", to_json(r)}});
    }
  }
  return out;
}

SuiteResult suite_lemma22(std::uint64_t seed, int n_max, unsigned trials) {
  SuiteResult out{"lemma22", trials};
  if (n_max < 2) throw precondition_error("lemma22 requires --n-max >= 2");
  int n_cap = std::min(n_max, 10);
  for (unsigned trial = 0; trial < trials; ++trial) {
    CounterRng rng(seed, 22, trial);
    std::size_t n = static_cast<std::size_t>(rng.next_int(2, n_cap));
    SymPoint x = random_vector(rng, n);
    auto check = [&](const UniPoly& p, const char* form, long long k) {
      if (p.degree() < 1) return;
      if (!sturm_real_roots(p).all_roots_real) {
        record_failure(out, json{{"trial", trial},
                                 {"x", to_json(x)},
                                 {"form", form},
                                 {"k", k},
                                 {"poly", to_json(p)}});
      }
    };
    for (long long k = 1; k <= static_cast<long long>(n) - 1; ++k)
      check(truncation_reduction(x, k), "truncation", k);
    for (long long k = 3; k <= static_cast<long long>(n) - 1; ++k)
      check(quartic_reduction(x, k), "quartic", k);
  }
  return out;
}

json suite_json(const SuiteResult& r) {
  json j{{"suite", r.name}, {"trials", r.trials}, {"failures", r.failures}};
  if (r.failures > 0) j["first_failure"] = r.first_failure;
  return j;
}

// ---- command bodies --------------------------------------------------------

int run_counterexample_single(const RunConfig& cfg, const std::string& which, int n, int k,
                              const Scalar& c, const Scalar& d) {
  CounterexampleReport r;
  if (which == "1")
    r = construct_case1(n, c, d);
  else if (which == "2")
    r = construct_case2(n, c, d);
  else if (which == "highk")
    r = construct_highk(n, k, c, d);
  else
    throw precondition_error("--case must be 1, 2, or highk");
  emit(cfg, "counterexample", to_json(r));
  return 0;
}

int run_counterexample_sweep(const std::string& which, int k, const std::vector<Scalar>& cs,
                             const std::vector<Scalar>& ds, int n_lo, int n_hi) {
  std::cout << "n,k,c,d,gap,negative\n";
  for (int n = n_lo; n <= n_hi; ++n)
    for (const auto& c : cs)
      for (const auto& d : ds) {
        CounterexampleReport r;
        try {
          if (which == "1")
            r = construct_case1(n, c, d);
          else if (which == "2")
            r = construct_case2(n, c, d);
          else if (which == "highk")
            r = construct_highk(n, k, c, d);
          else
            throw precondition_error("--case must be 1, 2, or highk");
        } catch (const precondition_error&) {
          continue;  // outside this case's parameter domain
        }
        std::cout << r.n << "," << r.k << "," << r.c.str() << "," << r.d.str() << ","
                  << r.gap.str() << "," << (r.negative ? "true" : "false") << "\n";
      }
  return 0;
}

int run_verify(const RunConfig& cfg, const std::string& identity, long long k, unsigned trials,
               const VectorArgs& vec, const std::string& alpha_text) {
  if (identity == "shift") {
    SymPoint x = vec.point(cfg.mode);
    if (alpha_text.empty()) throw precondition_error("verify shift requires --alpha");
    Scalar alpha = Scalar::parse(alpha_text, cfg.mode);
    bool ok = shift_identity_check(x, alpha, k);
    emit(cfg, "verify",
         json{{"identity", "shift"}, {"method", "direct"}, {"k", k}, {"verified", ok}});
    return ok ? 0 : 2;
  }

  IdentityId id = parse_identity_id(identity);
  bool symbolic;
  switch (id) {
    case IdentityId::Lemma21:
    case IdentityId::SosN5: symbolic = trials == 0; break;
    case IdentityId::Eq32: symbolic = trials == 0 && k <= 6; break;
    case IdentityId::Eq33: symbolic = trials == 0 && k <= 5; break;
    default: symbolic = false; break;
  }

  bool ok;
  json result{{"identity", identity}};
  if (symbolic) {
    switch (id) {
      case IdentityId::Lemma21: ok = verify_lemma21(); break;
      case IdentityId::SosN5: ok = verify_sos_n5(); break;
      case IdentityId::Eq32: ok = verify_eq32(k); break;
      default: ok = verify_eq33(k); break;
    }
    result["method"] = "symbolic";
  } else {
    unsigned t = trials == 0 ? cfg.trials : trials;
    ok = identity_sample(id, k, t, cfg.seed);
    result["method"] = "sampled";
    result["trials"] = t;
  }
  if (id == IdentityId::Eq32 || id == IdentityId::Eq33) result["k"] = k;
  result["verified"] = ok;
  emit(cfg, "verify", result);
  return ok ? 0 : 2;
}

int run_randomtest(const RunConfig& cfg, const std::string& suite, int n_max, unsigned trials) {
  std::vector<SuiteResult> results;
  if (suite == "theorem11" || suite == "all")
    results.push_back(suite_theorem11(cfg.seed, std::min(n_max, 9), trials));
  if (suite == "theorem14" || suite == "all")
    results.push_back(suite_theorem14(cfg.seed, std::min(n_max, 9), trials));
  if (suite == "chain" || suite == "all") results.push_back(suite_chain(cfg.seed, n_max, trials));
  if (suite == "lemma22" || suite == "all")
    results.push_back(suite_lemma22(cfg.seed, n_max, trials));
  if (results.empty())
    throw precondition_error("unknown suite '" + suite +
                             "' (theorem11|theorem14|chain|lemma22|all)");

  unsigned failures = 0;
  json suites = json::array();
  for (const auto& r : results) {
    failures += r.failures;
    suites.push_back(suite_json(r));
  }
  emit(cfg, "randomtest", json{{"suites", suites}, {"failures", failures}});
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for shifted symmetric means, Newton gaps, and real-rootedness"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string mode_name = "exact";
  app.add_option("--mode", mode_name, "scalar mode: exact|float")->default_val("exact");
  app.add_option("--seed", cfg.seed, "seed for randomized commands")->default_val(0);
  app.add_option("--output", cfg.output, "output format: json|csv")->default_val("json");

  // sigma
  auto* c_sigma = app.add_subcommand("sigma", "elementary symmetric table sigma_k, E_k");
  VectorArgs sigma_vec;
  sigma_vec.attach(c_sigma);

  // eval
  auto* c_eval = app.add_subcommand("eval", "evaluate the selected operator S_k");
  VectorArgs eval_vec;
  OperatorArgs eval_op;
  long long eval_k = 0;
  eval_vec.attach(c_eval);
  eval_op.attach(c_eval);
  c_eval->add_option("--k", eval_k, "index k")->required();

  // gap
  auto* c_gap = app.add_subcommand("gap", "Newton gap S_k^2 - S_{k-1} S_{k+1}");
  VectorArgs gap_vec;
  OperatorArgs gap_op;
  long long gap_k = 0;
  bool gap_low = false;
  gap_vec.attach(c_gap);
  gap_op.attach(c_gap);
  c_gap->add_option("--k", gap_k, "index k")->required();
  c_gap->add_flag("--low", gap_low, "low-index gap with hypothesis validation");

  // chain
  auto* c_chain = app.add_subcommand("chain", "Maclaurin chain via cross powers");
  VectorArgs chain_vec;
  OperatorArgs chain_op;
  long long chain_k = 0;
  chain_vec.attach(c_chain);
  chain_op.attach(c_chain);
  c_chain->add_option("--k", chain_k, "chain length k")->required();

  // product
  auto* c_prod = app.add_subcommand("product", "product comparison S_l S_{k-1} >= S_{l-1} S_k");
  VectorArgs prod_vec;
  OperatorArgs prod_op;
  long long prod_l = 0, prod_k = 0;
  prod_vec.attach(c_prod);
  prod_op.attach(c_prod);
  c_prod->add_option("--l", prod_l, "lower index l")->required();
  c_prod->add_option("--k", prod_k, "upper index k")->required();

  // cone
  auto* c_cone = app.add_subcommand("cone", "strict Garding cone membership");
  VectorArgs cone_vec;
  long long cone_k = 0;
  cone_vec.attach(c_cone);
  c_cone->add_option("--k", cone_k, "cone index k")->required();

  // sturm
  auto* c_sturm = app.add_subcommand("sturm", "distinct real roots and real-rootedness");
  std::string sturm_poly;
  c_sturm->add_option("--poly", sturm_poly, "coefficients, constant term first")->required();

  // reduce
  auto* c_reduce = app.add_subcommand("reduce", "derivative reductions with Sturm certification");
  VectorArgs red_vec;
  long long red_k = 0;
  std::string red_form = "quartic", red_eps;
  red_vec.attach(c_reduce);
  c_reduce->add_option("--k", red_k, "index k")->required();
  c_reduce->add_option("--form", red_form, "quartic|truncation")->default_val("quartic");
  c_reduce->add_option("--eps", red_eps, "perturb zero entries (zeros first) by eps before reducing");

  // quad
  auto* c_quad = app.add_subcommand("quad", "root structure of t^2 + a t + b");
  std::string quad_a, quad_b;
  c_quad->add_option("--a", quad_a, "coefficient a")->required();
  c_quad->add_option("--b", quad_b, "coefficient b")->required();

  // counterexample
  auto* c_cex = app.add_subcommand("counterexample", "complex-root gap sign reversals");
  std::string cex_case;
  int cex_n = 5, cex_k = 4;
  std::string cex_c, cex_d;
  bool cex_sweep = false;
  int cex_n_hi = 0;
  c_cex->add_option("--case", cex_case, "1|2|highk")->required();
  c_cex->add_option("--n", cex_n, "vector length n")->required();
  c_cex->add_option("--k", cex_k, "index k (highk only: 4 or 5)");
  c_cex->add_option("--c", cex_c, "real part parameter c (comma list with --sweep)")->required();
  c_cex->add_option("--d", cex_d, "imaginary part parameter d (comma list with --sweep)")
      ->required();
  c_cex->add_flag("--sweep", cex_sweep, "emit a CSV grid over --n..--n-hi and the c,d lists");
  c_cex->add_option("--n-hi", cex_n_hi, "upper n for --sweep (defaults to --n)");

  // verify
  auto* c_verify = app.add_subcommand("verify", "symbolic and sampled identity checks");
  std::string verify_identity;
  long long verify_k = 2;
  unsigned verify_trials = 0;
  VectorArgs verify_vec;
  std::string verify_alpha;
  c_verify->add_option("identity", verify_identity, "lemma21|sos5|eq32|eq33|shift")->required();
  c_verify->add_option("--k", verify_k, "index k (eq32, eq33, shift)");
  c_verify->add_option("--trials", verify_trials, "force the sampled method with this many trials");
  verify_vec.attach(c_verify, /*required=*/false);
  c_verify->add_option("--alpha", verify_alpha, "shift parameter (shift identity)");

  // randomtest
  auto* c_rt = app.add_subcommand("randomtest", "seeded randomized verification suites");
  std::string rt_suite;
  int rt_n_max = 8;
  unsigned rt_trials = 1000;
  c_rt->add_option("suite", rt_suite, "theorem11|theorem14|chain|lemma22|all")->required();
  c_rt->add_option("--n-max", rt_n_max, "largest vector length")->default_val(8);
  c_rt->add_option("--trials", rt_trials, "trials per suite")->default_val(1000);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (mode_name == "exact")
      cfg.mode = Mode::Exact;
    else if (mode_name == "float")
      cfg.mode = Mode::Float64;
    else
      throw precondition_error("--mode must be exact or float");

    if (c_sigma->parsed()) {
      emit(cfg, "sigma", to_json(sigma_all(sigma_vec.point(cfg.mode))));
      return 0;
    }
    if (c_eval->parsed()) {
      SymPoint x = eval_vec.point(cfg.mode);
      OperatorSpec spec = eval_op.spec(cfg.mode);
      SigmaTable t = sigma_all(x);
      emit(cfg, "eval",
           json{{"spec", to_json(spec)},
                {"k", eval_k},
                {"value", to_json(eval_operator(t, spec, eval_k))}});
      return 0;
    }
    if (c_gap->parsed()) {
      SymPoint x = gap_vec.point(cfg.mode);
      OperatorSpec spec = gap_op.spec(cfg.mode);
      if (gap_low) {
        auto r = gap_low_k(x, spec, gap_k);
        emit(cfg, "gap", json{{"spec", to_json(spec)}, {"low", true}, {"result", to_json(r)}});
      } else {
        auto r = newton_gap(x, spec, gap_k);
        emit(cfg, "gap", json{{"spec", to_json(spec)}, {"result", to_json(r)}});
      }
      return 0;
    }
    if (c_chain->parsed()) {
      SymPoint x = chain_vec.point(cfg.mode);
      OperatorSpec spec = chain_op.spec(cfg.mode);
      emit(cfg, "chain",
           json{{"spec", to_json(spec)}, {"result", to_json(maclaurin_chain(x, spec, chain_k))}});
      return 0;
    }
    if (c_prod->parsed()) {
      SymPoint x = prod_vec.point(cfg.mode);
      OperatorSpec spec = prod_op.spec(cfg.mode);
      emit(cfg, "product",
           json{{"spec", to_json(spec)},
                {"l", prod_l},
                {"k", prod_k},
                {"result", to_json(corollary_product(x, spec, prod_l, prod_k))}});
      return 0;
    }
    if (c_cone->parsed()) {
      SymPoint x = cone_vec.point(cfg.mode);
      emit(cfg, "cone", json{{"k", cone_k}, {"member", garding_member(x, cone_k)}});
      return 0;
    }
    if (c_sturm->parsed()) {
      if (cfg.mode != Mode::Exact) throw precondition_error("sturm: exact mode required");
      std::vector<Rational> coeffs;
      for (const auto& s : parse_scalar_list(sturm_poly, Mode::Exact)) coeffs.push_back(s.rat());
      UniPoly p(std::move(coeffs));
      auto r = sturm_real_roots(p);
      emit(cfg, "sturm",
           json{{"poly", to_json(p)},
                {"distinct_real", r.distinct_real},
                {"all_roots_real", r.all_roots_real}});
      return 0;
    }
    if (c_reduce->parsed()) {
      SymPoint x = red_vec.point(cfg.mode);
      if (!red_eps.empty()) x = epsilon_perturb(x, Scalar::parse(red_eps, cfg.mode));
      UniPoly p;
      if (red_form == "quartic")
        p = quartic_reduction(x, red_k);
      else if (red_form == "truncation")
        p = truncation_reduction(x, red_k);
      else
        throw precondition_error("--form must be quartic or truncation");
      json result{{"form", red_form}, {"k", red_k}, {"poly", to_json(p)}};
      if (p.degree() >= 1) {
        auto r = sturm_real_roots(p);
        result["distinct_real"] = r.distinct_real;
        result["all_roots_real"] = r.all_roots_real;
      }
      emit(cfg, "reduce", result);
      return 0;
    }
    if (c_quad->parsed()) {
      auto r = classify_quadratic(Scalar::parse(quad_a, cfg.mode), Scalar::parse(quad_b, cfg.mode));
      emit(cfg, "quad", to_json(r));
      return 0;
    }
    if (c_cex->parsed()) {
      if (cfg.mode != Mode::Exact) throw precondition_error("counterexample: exact mode required");
      if (cex_sweep) {
        auto cs = parse_scalar_list(cex_c, Mode::Exact);
        auto ds = parse_scalar_list(cex_d, Mode::Exact);
        int hi = cex_n_hi == 0 ? cex_n : cex_n_hi;
        return run_counterexample_sweep(cex_case, cex_k, cs, ds, cex_n, hi);
      }
      return run_counterexample_single(cfg, cex_case, cex_n, cex_k,
                                       Scalar::parse(cex_c, Mode::Exact),
                                       Scalar::parse(cex_d, Mode::Exact));
    }
    if (c_verify->parsed()) {
      if (cfg.mode != Mode::Exact) throw precondition_error("verify: exact mode required");
      return run_verify(cfg, verify_identity, verify_k, verify_trials, verify_vec, verify_alpha);
    }
    if (c_rt->parsed()) {
      if (cfg.mode != Mode::Exact) throw precondition_error("randomtest: exact mode required");
      cfg.trials = rt_trials;
      return run_randomtest(cfg, rt_suite, rt_n_max, rt_trials);
    }
    throw precondition_error("no subcommand given");
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const invariant_error& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return 2;
  }
}
