#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snakegraphs/bracket.hpp"
#include "snakegraphs/cf.hpp"
#include "snakegraphs/enumerate.hpp"
#include "snakegraphs/gcf.hpp"
#include "snakegraphs/genfun.hpp"
#include "snakegraphs/matrices.hpp"
#include "snakegraphs/serialize.hpp"
#include "snakegraphs/snake_graph.hpp"

namespace {

using snakes::Json;

std::vector<int> parse_int_list(const std::string& text) {
    return snakes::ContinuedFraction::parse(text).parts();
}

void emit(const Json& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload.dump() << "\n";
    } else {
        std::ofstream f(out_path);
        f << payload.dump() << "\n";
    }
}

int run_verify(int max_sum, int max_m) {
    long checked = 0, mismatches = 0;
    auto complain = [&](const std::string& what, const std::vector<int>& parts, int m) {
        ++mismatches;
        std::cerr << "MISMATCH " << what << " cf=" << snakes::ContinuedFraction(parts).str()
                  << " m=" << m << "\n";
    };
    for (int total = 1; total <= max_sum; ++total)
        for (const std::vector<int>& parts : snakes::compositions(total)) {
            snakes::ContinuedFraction cf(parts);
            snakes::SnakeGraph snake = snakes::build_snake(cf);
            for (int m = 1; m <= max_m; ++m) {
                ++checked;
                mpz_class brute = snakes::count_m_dimers(snake, m);
                mpz_class closed = snakes::lambda_product(cf, m).at(0, 0);
                mpz_class recur = snakes::bracket(cf, m, snakes::BracketMode::Recurrence);
                if (brute != closed || brute != recur)
                    complain("dimer-count", parts, m);
                if (brute != mpz_class(snakes::enumerate_m_lattice_paths(
                                           snakes::build_snake(snakes::dual_cf(cf)), m)
                                           .size()))
                    complain("dual-path-count", parts, m);
                if (snakes::cf_vector_recursive(cf, m) != snakes::cf_vector_matrix(cf, m))
                    complain("cf-vector", parts, m);
            }
        }
    Json summary{{"checked", checked}, {"mismatches", mismatches}};
    std::cout << summary.dump() << "\n";
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact snake-graph, m-dimer and generalized continued fraction toolkit"};
    app.require_subcommand(1);

    std::string cf_text, mode = "matrix", out_path, period_text, prefix_text;
    std::string tol_text = "1e-12", target_text, from_text = "1", to_text = "6", step_text = "0.01";
    int m = 1, i = -1, n = 0, k = 0, max_len = 8, max_part = 12, max_sum = 6, max_m = 2;
    bool as_float = false;
    app.add_flag("--float", as_float, "render rationals as floats");

    auto add_cf = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--cf", cf_text, "comma-separated continued fraction parts");
        if (required) opt->required();
    };
    auto add_m = [&](CLI::App* cmd) { cmd->add_option("--m", m, "dimension m >= 1"); };

    CLI::App* snake_cmd = app.add_subcommand("snake", "snake graph of a continued fraction");
    add_cf(snake_cmd);
    snake_cmd->add_option("--out", out_path, "write JSON to file");

    CLI::App* count_cmd = app.add_subcommand("count", "number of m-dimer covers");
    add_cf(count_cmd);
    add_m(count_cmd);

    CLI::App* bracket_cmd = app.add_subcommand("bracket", "weighted bracket of a continued fraction");
    add_cf(bracket_cmd);
    add_m(bracket_cmd);
    bracket_cmd->add_option("--mode", mode, "enum|recur|matrix")
        ->check(CLI::IsMember({"enum", "recur", "matrix"}));

    CLI::App* matrix_cmd = app.add_subcommand("matrix", "Lambda-matrix product");
    add_cf(matrix_cmd);
    add_m(matrix_cmd);

    CLI::App* gcf_cmd = app.add_subcommand("gcf", "generalized continued fractions");
    gcf_cmd->require_subcommand(1);
    CLI::App* vec_cmd = gcf_cmd->add_subcommand("vector", "exact cf-vector (r_m, ..., r_1, 1)");
    add_cf(vec_cmd);
    add_m(vec_cmd);
    CLI::App* limit_cmd = gcf_cmd->add_subcommand("limit", "certified enclosure of lim r_{i,m}");
    limit_cmd->add_option("--period", period_text, "repeating part block");
    limit_cmd->add_option("--prefix", prefix_text, "explicit leading parts");
    add_m(limit_cmd);
    limit_cmd->add_option("--i", i, "component index, default m");
    limit_cmd->add_option("--tol", tol_text, "target enclosure width");
    CLI::App* cubic_cmd = gcf_cmd->add_subcommand("cubic", "cubic field data of a periodic word (m=2)");
    cubic_cmd->add_option("--period", period_text, "repeating part block")->required();
    CLI::App* curve_cmd = gcf_cmd->add_subcommand("curve", "sample x -> r_m(x) as CSV");
    add_m(curve_cmd);
    curve_cmd->add_option("--from", from_text);
    curve_cmd->add_option("--to", to_text);
    curve_cmd->add_option("--step", step_text);
    curve_cmd->add_option("--out", out_path, "write CSV to file");
    CLI::App* invert_cmd = gcf_cmd->add_subcommand("invert", "search a cf with r_m(cf) == target");
    add_m(invert_cmd);
    invert_cmd->add_option("--target", target_text, "rational target, e.g. 7/1")->required();
    invert_cmd->add_option("--max-len", max_len);
    invert_cmd->add_option("--max-part", max_part);

    CLI::App* genfun_cmd = app.add_subcommand("genfun", "q- and (q,x)-generating functions");
    genfun_cmd->require_subcommand(1);
    CLI::App* qbinom_cmd = genfun_cmd->add_subcommand("qbinom", "Gaussian binomial [n k]_q");
    qbinom_cmd->add_option("--n", n)->required();
    qbinom_cmd->add_option("--k", k)->required();
    CLI::App* qfib_cmd = genfun_cmd->add_subcommand("qfib", "q-deformed Fibonacci polynomial");
    qfib_cmd->add_option("--i", i, "index k >= 1")->required();
    CLI::App* stanley_cmd = genfun_cmd->add_subcommand("stanley", "rank generating function of m-dimer covers");
    add_cf(stanley_cmd);
    add_m(stanley_cmd);
    CLI::App* f_cmd = genfun_cmd->add_subcommand("F", "Stanley F(q,x) of the fence poset");
    add_cf(f_cmd);
    CLI::App* uni_cmd = genfun_cmd->add_subcommand("unimodal", "unimodality scan");
    uni_cmd->add_option("--max-sum", max_sum);
    uni_cmd->add_option("--max-m", max_m);

    CLI::App* verify_cmd = app.add_subcommand("verify", "oracle-equivalence sweep");
    verify_cmd->add_option("--max-sum", max_sum);
    verify_cmd->add_option("--max-m", max_m);

    // Let parent-level flags like --float appear after the subcommand name.
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(snake_cmd)) {
            emit(snakes::snake_to_json(snakes::build_snake(snakes::ContinuedFraction::parse(cf_text))),
                 out_path);
        } else if (app.got_subcommand(count_cmd)) {
            auto cf = snakes::ContinuedFraction::parse(cf_text);
            emit(Json{{"count", snakes::lambda_product(cf, m).at(0, 0).get_str()}}, "");
        } else if (app.got_subcommand(bracket_cmd)) {
            auto cf = snakes::ContinuedFraction::parse(cf_text);
            snakes::BracketMode bm = mode == "enum" ? snakes::BracketMode::Enumeration
                                     : mode == "recur" ? snakes::BracketMode::Recurrence
                                                       : snakes::BracketMode::Matrix;
            emit(Json{{"bracket", snakes::bracket(cf, m, bm).get_str()}}, "");
        } else if (app.got_subcommand(matrix_cmd)) {
            auto cf = snakes::ContinuedFraction::parse(cf_text);
            emit(snakes::matrix_to_json(snakes::lambda_product(cf, m)), "");
        } else if (app.got_subcommand(gcf_cmd)) {
            if (gcf_cmd->got_subcommand(vec_cmd)) {
                auto cf = snakes::ContinuedFraction::parse(cf_text);
                emit(snakes::cf_vector_to_json(snakes::cf_vector_recursive(cf, m)), "");
            } else if (gcf_cmd->got_subcommand(limit_cmd)) {
                snakes::WordSource word;
                if (!prefix_text.empty()) word.prefix = parse_int_list(prefix_text);
                if (!period_text.empty()) word.period = parse_int_list(period_text);
                if (word.prefix.empty() && word.period.empty())
                    throw std::invalid_argument("limit needs --prefix and/or --period");
                int component = (i < 0) ? m : i;
                auto enc = snakes::r_limit(word, component, m, snakes::parse_rational(tol_text));
                emit(snakes::enclosure_to_json(enc, as_float), "");
            } else if (gcf_cmd->got_subcommand(cubic_cmd)) {
                auto period = snakes::ContinuedFraction::parse(period_text);
                emit(snakes::cubic_to_json(snakes::periodic_cubic(period), as_float), "");
            } else if (gcf_cmd->got_subcommand(curve_cmd)) {
                auto samples = snakes::sample_r_curve(m, snakes::parse_rational(from_text),
                                                      snakes::parse_rational(to_text),
                                                      snakes::parse_rational(step_text));
                std::ofstream file;
                std::ostream* os = &std::cout;
                if (!out_path.empty()) {
                    file.open(out_path);
                    os = &file;
                }
                *os << "x,r\n";
                for (const auto& s : samples)
                    *os << snakes::float_str(s.x) << "," << snakes::float_str(s.r) << "\n";
            } else if (gcf_cmd->got_subcommand(invert_cmd)) {
                auto found = snakes::invert_r_m(snakes::parse_rational(target_text), m, max_len,
                                                max_part);
                Json out;
                out["found"] = found.has_value();
                if (found) out["cf"] = found->str();
                emit(out, "");
                if (!found) return 1;
            }
        } else if (app.got_subcommand(genfun_cmd)) {
            if (genfun_cmd->got_subcommand(qbinom_cmd)) {
                emit(Json{{"coefficients", snakes::qpoly_to_json(snakes::q_binomial(n, k))}}, "");
            } else if (genfun_cmd->got_subcommand(qfib_cmd)) {
                emit(Json{{"coefficients", snakes::qpoly_to_json(snakes::q_fibonacci(i))}}, "");
            } else if (genfun_cmd->got_subcommand(stanley_cmd)) {
                auto cf = snakes::ContinuedFraction::parse(cf_text);
                auto u = snakes::rank_generating_function(snakes::build_snake(cf), m);
                emit(Json{{"coefficients", snakes::qpoly_to_json(u)},
                          {"value_at_1", u.at_one().get_str()},
                          {"unimodal", u.unimodal()},
                          {"palindromic", u.palindromic()}},
                     "");
            } else if (genfun_cmd->got_subcommand(f_cmd)) {
                auto cf = snakes::ContinuedFraction::parse(cf_text);
                auto poset = snakes::fence_poset_of(snakes::build_snake(cf));
                emit(snakes::qx_rational_to_json(snakes::stanley_F(poset)), "");
            } else if (genfun_cmd->got_subcommand(uni_cmd)) {
                auto verdict = snakes::unimodality_scan(max_sum, max_m);
                Json out;
                out["unimodal"] = verdict.unimodal;
                if (!verdict.unimodal) {
                    out["counterexample_cf"] =
                        snakes::ContinuedFraction(verdict.counterexample_cf).str();
                    out["counterexample_m"] = verdict.counterexample_m;
                }
                emit(out, "");
                if (!verdict.unimodal) return 1;
            }
        } else if (app.got_subcommand(verify_cmd)) {
            return run_verify(max_sum, max_m);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
