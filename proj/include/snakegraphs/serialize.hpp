#pragma once

#include <string>

#include <json.hpp>

#include "snakegraphs/enumerate.hpp"
#include "snakegraphs/gcf.hpp"
#include "snakegraphs/genfun.hpp"
#include "snakegraphs/matrices.hpp"
#include "snakegraphs/qpoly.hpp"
#include "snakegraphs/snake_graph.hpp"

namespace snakes {

using Json = nlohmann::ordered_json;

/// "num" when the denominator is 1, otherwise "num/den"; reduced.
std::string rational_str(const mpq_class& q);

/// Parse "p", "p/q", a decimal like "0.001", or scientific like "1e-12"
/// into an exact rational.
mpq_class parse_rational(const std::string& text);

/// Fixed 15-significant-digit float rendering (for CSV and --float output).
std::string float_str(double x);
inline std::string float_str(const mpq_class& q) { return float_str(q.get_d()); }

Json snake_to_json(const SnakeGraph& snake);
Json multiset_to_json(const EdgeMultiset& ms);
Json matrix_to_json(const BigMatrix& x);
Json qpoly_to_json(const QPolynomial& p);
Json cf_vector_to_json(const CfVector& v);
Json enclosure_to_json(const LimitEnclosure& e, bool as_float);
Json cubic_to_json(const CubicData& c, bool as_float);
Json qx_rational_to_json(const QXRational& f);

}  // namespace snakes
