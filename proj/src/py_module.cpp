#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "snakegraphs/bracket.hpp"
#include "snakegraphs/cf.hpp"
#include "snakegraphs/enumerate.hpp"
#include "snakegraphs/gcf.hpp"
#include "snakegraphs/genfun.hpp"
#include "snakegraphs/matrices.hpp"
#include "snakegraphs/serialize.hpp"
#include "snakegraphs/snake_graph.hpp"

namespace py = pybind11;

namespace {

snakes::ContinuedFraction make_cf(const std::vector<int>& parts) {
    return snakes::ContinuedFraction(parts);
}

std::vector<std::string> coeff_strings(const snakes::QPolynomial& p) {
    std::vector<std::string> out;
    for (const mpz_class& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

std::vector<std::vector<std::string>> matrix_strings(const snakes::BigMatrix& x) {
    std::vector<std::vector<std::string>> out;
    for (int i = 0; i < x.size(); ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < x.size(); ++j) row.push_back(x.at(i, j).get_str());
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact snake-graph and generalized continued fraction kernels";

    mod.def("snake_directions", [](const std::vector<int>& parts) {
        return snakes::build_snake(make_cf(parts)).directions();
    });
    mod.def("snake_tiles", [](const std::vector<int>& parts) {
        std::vector<std::pair<int, int>> out;
        for (const auto& t : snakes::build_snake(make_cf(parts)).tiles())
            out.emplace_back(t.x, t.y);
        return out;
    });
    mod.def("sign_sequence", [](const std::vector<int>& parts) {
        return snakes::cf_to_sign_sequence(make_cf(parts)).signs;
    });
    mod.def("dual_cf", [](const std::vector<int>& parts) {
        return snakes::dual_cf(make_cf(parts)).parts();
    });
    mod.def("count_dimers", [](const std::vector<int>& parts, int m) {
        return snakes::lambda_product(make_cf(parts), m).at(0, 0).get_str();
    });
    mod.def("count_dimers_brute", [](const std::vector<int>& parts, int m) {
        return snakes::count_m_dimers(snakes::build_snake(make_cf(parts)), m).get_str();
    });
    mod.def("bracket", [](const std::vector<int>& parts, int m, const std::string& mode) {
        snakes::BracketMode bm = mode == "enum" ? snakes::BracketMode::Enumeration
                                 : mode == "recur" ? snakes::BracketMode::Recurrence
                                                   : snakes::BracketMode::Matrix;
        return snakes::bracket(make_cf(parts), m, bm).get_str();
    }, py::arg("parts"), py::arg("m"), py::arg("mode") = "matrix");
    mod.def("lambda_product", [](const std::vector<int>& parts, int m) {
        return matrix_strings(snakes::lambda_product(make_cf(parts), m));
    });
    mod.def("cf_vector", [](const std::vector<int>& parts, int m) {
        std::vector<std::string> out;
        for (const auto& q : snakes::cf_vector_recursive(make_cf(parts), m))
            out.push_back(snakes::rational_str(q));
        return out;
    });
    mod.def("cf_value", [](const std::vector<int>& parts) {
        return snakes::rational_str(snakes::cf_value(make_cf(parts)));
    });
    mod.def("r_limit", [](const std::vector<int>& prefix, const std::vector<int>& period,
                          int i, int m, const std::string& tol) {
        auto enc = snakes::r_limit({prefix, period}, i, m, snakes::parse_rational(tol));
        py::dict out;
        out["lower"] = snakes::rational_str(enc.lower);
        out["upper"] = snakes::rational_str(enc.upper);
        out["midpoint"] = enc.midpoint().get_d();
        out["converged"] = enc.converged;
        out["iterations"] = enc.iterations;
        return out;
    }, py::arg("prefix"), py::arg("period"), py::arg("i"), py::arg("m"),
       py::arg("tol") = "1e-12");
    mod.def("r_rational", [](const std::string& x, int m) {
        return snakes::rational_str(snakes::r_rational(snakes::parse_rational(x), m));
    });
    mod.def("invert_r", [](const std::string& target, int m, int max_len, int max_part) {
        auto found = snakes::invert_r_m(snakes::parse_rational(target), m, max_len, max_part);
        return found ? py::object(py::cast(found->parts())) : py::object(py::none());
    });
    mod.def("periodic_cubic_char_poly", [](const std::vector<int>& period) {
        std::vector<std::string> out;
        for (const auto& c : snakes::periodic_cubic(make_cf(period)).char_poly)
            out.push_back(c.get_str());
        return out;
    });
    mod.def("q_binomial", [](int n, int k) { return coeff_strings(snakes::q_binomial(n, k)); });
    mod.def("q_fibonacci", [](int k) { return coeff_strings(snakes::q_fibonacci(k)); });
    mod.def("rank_polynomial", [](const std::vector<int>& parts, int m) {
        return coeff_strings(
            snakes::rank_generating_function(snakes::build_snake(make_cf(parts)), m));
    });
    mod.def("unimodality_scan", [](int max_sum, int max_m) {
        return snakes::unimodality_scan(max_sum, max_m).unimodal;
    });
}
