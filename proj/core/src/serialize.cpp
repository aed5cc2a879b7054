#include "nmsym/serialize.hpp"

#include <sstream>

namespace nmsym {

json to_json(const Scalar& s) {
  if (s.is_exact()) return s.str();
  return s.f64();
}

json to_json(const SymPoint& x) {
  json arr = json::array();
  for (const auto& e : x.entries()) arr.push_back(to_json(e));
  return arr;
}

json to_json(const SigmaTable& t) {
  json sigma = json::array(), e = json::array();
  for (const auto& v : t.sigma) sigma.push_back(to_json(v));
  for (const auto& v : t.e) e.push_back(to_json(v));
  return json{{"n", t.n}, {"sigma", sigma}, {"e", e}};
}

json to_json(const OperatorSpec& spec) {
  if (const auto* ts = std::get_if<TwoShift>(&spec))
    return json{{"kind", "two_shift"}, {"alpha", to_json(ts->alpha)}, {"beta", to_json(ts->beta)}};
  if (const auto* q = std::get_if<QuadCoef>(&spec))
    return json{{"kind", "quad"}, {"a", to_json(q->a)}, {"b", to_json(q->b)}};
  const auto& b = std::get<BinomialShift>(spec);
  return json{{"kind", "binomial"}, {"alpha", to_json(b.alpha)}, {"s", b.s}};
}

json to_json(const QuadRootClass& qrc) {
  if (const auto* rr = std::get_if<RealRoots>(&qrc))
    return json{{"kind", "real_roots"}, {"alpha", to_json(rr->alpha)}, {"beta", to_json(rr->beta)}};
  if (const auto* ri = std::get_if<RealIrrational>(&qrc))
    return json{{"kind", "real_irrational"}, {"discriminant", to_json(ri->discriminant)}};
  const auto& cr = std::get<ComplexRoots>(qrc);
  return json{{"kind", "complex_roots"}, {"c", to_json(cr.c)}, {"d_squared", to_json(cr.d_squared)}};
}

json to_json(const GapReport& r) {
  json j{{"k", r.k},
         {"s_km1", to_json(r.s_km1)},
         {"s_k", to_json(r.s_k)},
         {"s_kp1", to_json(r.s_kp1)},
         {"gap", to_json(r.gap)},
         {"equality", r.equality.tag()}};
  if (r.equality.alpha) j["alpha"] = to_json(*r.equality.alpha);
  return j;
}

json to_json(const ChainReport& r) {
  json values = json::array();
  for (const auto& v : r.values) values.push_back(to_json(v));
  json j{{"k_max", r.k_max}, {"values", values}, {"hypothesis_failures", r.hypothesis_failures}};
  if (r.monotone) j["monotone"] = *r.monotone;
  return j;
}

json to_json(const LowKGapReport& r) {
  return json{{"report", to_json(r.report)},
              {"hypothesis_failures", r.hypothesis_failures},
              {"asserted_nonneg", r.asserted_nonneg}};
}

json to_json(const CorollaryResult& r) {
  return json{{"hypothesis_ok", r.hypothesis_ok}, {"holds", r.holds}};
}

json to_json(const CounterexampleReport& r) {
  json z0 = json::array();
  for (const auto& v : r.z0) z0.push_back(to_json(v));
  json j{{"n", r.n},        {"k", r.k},
         {"c", to_json(r.c)}, {"d", to_json(r.d)},
         {"z0", z0},          {"gap", to_json(r.gap)},
         {"negative", r.negative}};
  if (r.closed_form) j["closed_form"] = to_json(*r.closed_form);
  if (r.exploratory) j["exploratory"] = true;
  return j;
}

json to_json(const UniPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(format_rational(c));
  return json{{"coeffs", arr}, {"degree", p.degree()}};
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  const auto& map = p.terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it)
    terms.push_back(json{{"exponents", it->first}, {"coefficient", format_rational(it->second)}});
  return json{{"vars", p.vars()}, {"terms", terms}};
}

SymPoint parse_point(const std::string& text, Mode mode) {
  std::vector<Scalar> entries;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // trim spaces
    auto first = tok.find_first_not_of(" \t");
    auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos) throw precondition_error("empty entry in vector '" + text + "'");
    entries.push_back(Scalar::parse(tok.substr(first, last - first + 1), mode));
  }
  if (entries.empty()) throw precondition_error("empty vector");
  return SymPoint(std::move(entries));
}

SymPoint point_from_json(const json& j, Mode mode) {
  if (!j.is_array()) throw precondition_error("vector JSON must be an array of rational strings");
  std::vector<Scalar> entries;
  for (const auto& v : j) {
    if (v.is_string())
      entries.push_back(Scalar::parse(v.get<std::string>(), mode));
    else if (v.is_number() && mode == Mode::Float64)
      entries.push_back(Scalar::float64(v.get<double>()));
    else if (v.is_number_integer())
      entries.push_back(Scalar(v.get<long long>()));
    else
      throw precondition_error("vector entries must be rational strings");
  }
  if (entries.empty()) throw precondition_error("empty vector");
  return SymPoint(std::move(entries));
}

}  // namespace nmsym
