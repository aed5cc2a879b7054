#ifndef NMSYM_SERIALIZE_HH
#define NMSYM_SERIALIZE_HH

#include "json.hpp"

#include "nmsym/counterexamples.hpp"
#include "nmsym/inequalities.hpp"
#include "nmsym/multipoly.hpp"
#include "nmsym/unipoly.hpp"

namespace nmsym {

using json = nlohmann::ordered_json;

// Scalars serialize as "p/q" strings (q omitted when 1); floats as numbers.
json to_json(const Scalar& s);
json to_json(const SymPoint& x);
json to_json(const SigmaTable& t);
json to_json(const OperatorSpec& spec);
json to_json(const QuadRootClass& qrc);
json to_json(const GapReport& r);
json to_json(const ChainReport& r);
json to_json(const LowKGapReport& r);
json to_json(const CorollaryResult& r);
json to_json(const CounterexampleReport& r);
json to_json(const UniPoly& p);
json to_json(const MultiPoly& p);

// Parses a comma-separated rational vector ("1,2/3,-5").
SymPoint parse_point(const std::string& text, Mode mode);
SymPoint point_from_json(const json& j, Mode mode);

}  // namespace nmsym

#endif
