#include "snakegraphs/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace snakes {

std::string rational_str(const mpq_class& q) {
    mpq_class r = q;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpq_class q(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
        q.canonicalize();
        return q;
    }
    // Decimal / scientific form: mantissa [.] [e exponent], kept exact.
    std::string digits;
    long exp10 = 0;
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = (text[i++] == '-');
    for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'); ++i) {
        if (text[i] == '.') {
            if (exp10 != 0) throw std::invalid_argument("bad rational literal: " + text);
            exp10 = -1;  // marker: start counting fraction digits
            continue;
        }
        digits += text[i];
        if (exp10 < 0) --exp10;
    }
    if (exp10 < 0) ++exp10;  // drop the marker offset
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E')
            throw std::invalid_argument("bad rational literal: " + text);
        exp10 += std::stol(text.substr(i + 1));
    }
    if (digits.empty()) throw std::invalid_argument("bad rational literal: " + text);
    mpq_class q{mpz_class(digits)};
    if (exp10 >= 0)
        q *= mpq_class(pow_10(static_cast<unsigned>(exp10)));
    else
        q /= mpq_class(pow_10(static_cast<unsigned>(-exp10)));
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

std::string float_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

Json snake_to_json(const SnakeGraph& snake) {
    Json tiles = Json::array();
    for (const Point& t : snake.tiles()) tiles.push_back({t.x, t.y});
    Json edges = Json::array();
    for (const Edge& e : snake.edges())
        edges.push_back({{e.a.x, e.a.y}, {e.b.x, e.b.y}});
    SignSequence seq = sign_sequence_of(snake);
    return Json{{"tiles", tiles},
                {"direction_word", snake.directions()},
                {"sign_sequence", seq.signs},
                {"edges", edges}};
}

Json multiset_to_json(const EdgeMultiset& ms) {
    Json out = Json::array();
    for (const auto& [edge, mult] : ms)
        out.push_back({{"edge", {{edge.a.x, edge.a.y}, {edge.b.x, edge.b.y}}},
                       {"multiplicity", mult}});
    return out;
}

Json matrix_to_json(const BigMatrix& x) {
    Json out = Json::array();
    for (int i = 0; i < x.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < x.size(); ++j) row.push_back(x.at(i, j).get_str());
        out.push_back(row);
    }
    return out;
}

Json qpoly_to_json(const QPolynomial& p) {
    Json out = Json::array();
    for (const mpz_class& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

Json cf_vector_to_json(const CfVector& v) {
    Json out = Json::array();
    for (const mpq_class& q : v) out.push_back(rational_str(q));
    return out;
}

Json enclosure_to_json(const LimitEnclosure& e, bool as_float) {
    Json out;
    if (as_float) {
        out["lower"] = float_str(e.lower);
        out["upper"] = float_str(e.upper);
        out["midpoint"] = float_str(e.midpoint());
        out["width"] = float_str(e.width());
    } else {
        out["lower"] = rational_str(e.lower);
        out["upper"] = rational_str(e.upper);
        out["midpoint"] = rational_str(e.midpoint());
        out["width"] = rational_str(e.width());
    }
    out["converged"] = e.converged;
    out["iterations"] = e.iterations;
    return out;
}

Json cubic_to_json(const CubicData& c, bool as_float) {
    Json poly = Json::array();
    for (const mpz_class& z : c.char_poly) poly.push_back(z.get_str());
    auto polymod = [&](const PolyMod& p) {
        Json out = Json::array();
        for (const mpq_class& q : p) out.push_back(rational_str(q));
        return out;
    };
    Json out;
    out["char_poly"] = poly;
    if (as_float) {
        out["root_lower"] = float_str(c.root_lower);
        out["root_upper"] = float_str(c.root_upper);
    } else {
        out["root_lower"] = rational_str(c.root_lower);
        out["root_upper"] = rational_str(c.root_upper);
    }
    out["alpha"] = polymod(c.alpha);
    out["beta"] = polymod(c.beta);
    auto alpha_iv = eval_poly_interval(c.alpha, c.root_lower, c.root_upper);
    auto beta_iv = eval_poly_interval(c.beta, c.root_lower, c.root_upper);
    out["alpha_value"] = float_str(mpq_class(alpha_iv.first + alpha_iv.second).get_d() / 2);
    out["beta_value"] = float_str(mpq_class(beta_iv.first + beta_iv.second).get_d() / 2);
    return out;
}

Json qx_rational_to_json(const QXRational& f) {
    Json numerator = Json::array();
    for (std::size_t d = 0; d < f.numerator_x.size(); ++d) {
        const auto& coeffs = f.numerator_x[d].coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            numerator.push_back({coeffs[k].get_str(), k, d});
        }
    }
    return Json{{"numerator", numerator}, {"pochhammer", f.pochhammer}};
}

}  // namespace snakes
