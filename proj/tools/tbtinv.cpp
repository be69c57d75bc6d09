// Copyright 2026 The tbtgrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tbtinv: generate TBT instances, invert them (fast or dense oracle), run
// the WWR baseline, print operation-count tables and cross-verify.
//
// Exit status: 0 pass, 1 tolerance failure, 2 not positive definite,
// 3 I/O or usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tbt/cost.hpp"
#include "tbt/fast.hpp"
#include "tbt/grc.hpp"
#include "tbt/harness.hpp"
#include "tbt/io.hpp"
#include "tbt/wwr.hpp"

namespace {

enum Exit : int { kPass = 0, kToleranceFail = 1, kNotPositiveDefinite = 2, kUsage = 3 };

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw tbt::FormatError("cannot write " + path);
    }
    return out;
}

int cmd_gen(tbt::Index n1, tbt::Index n2, std::uint64_t seed, double ridge, const std::string& output)
{
    tbt::save_generator(output, tbt::generate_pd_tbt(n1, n2, seed, ridge));
    return kPass;
}

int cmd_invert(const std::string& input, const std::string& method, const std::string& output, bool show_counter)
{
    const tbt::TbtGenerator g = tbt::load_generator(input);
    tbt::OpCounter counter;
    const tbt::InverseFactor factor = [&] {
        if (method == "fast") {
            return tbt::tbt_factorization(g, &counter);
        }
        const tbt::DenseHermitian dense = tbt::assemble_dense(g);
        return tbt::build_factorization(tbt::grc_full(dense, &counter), dense);
    }();

    auto out = open_output(output);
    tbt::write_dense(out, tbt::inverse_dense(factor).matrix());
    auto factor_out = open_output(output + ".factor");
    tbt::write_factor(factor_out, factor);
    if (!out || !factor_out) {
        throw tbt::FormatError("write failed for " + output);
    }
    if (show_counter) {
        std::cout << tbt::summary_line(counter) << '\n';
    }
    return kPass;
}

int cmd_wwr(const std::string& input, const std::string& output)
{
    const tbt::TbtGenerator g = tbt::load_generator(input);
    if (g.n2() < 2) {
        std::cerr << "wwr: the generator needs n2 >= 2\n";
        return kUsage;
    }
    const auto states = tbt::wwr_recurse(g);
    const double scale = tbt::wwr_rhs_norm(g);
    const double residual = tbt::wwr_residual(g, states.back());
    const double relative = scale > 0.0 ? residual / scale : residual;

    auto out = open_output(output);
    tbt::write_wwr(out, states.back(), relative);
    std::cout << "residual=" << tbt::format_real(relative) << '\n';
    return kPass;
}

int cmd_opcount(std::int64_t n_min, std::int64_t n_max, const std::string& output)
{
    const auto rows = tbt::comparison_table(n_min, n_max);
    if (output == "-") {
        tbt::write_cost_csv(std::cout, rows);
    } else {
        auto out = open_output(output);
        tbt::write_cost_csv(out, rows);
    }
    return kPass;
}

int cmd_verify(const std::string& input, double tolerance)
{
    const tbt::VerifyReport report = tbt::run_verify(tbt::load_generator(input), tolerance);
    std::cout << report.to_string();
    return report.passed ? kPass : kToleranceFail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Toeplitz-block-Toeplitz inversion by generalized reflection coefficients"};
    app.require_subcommand(1);

    tbt::Index n1 = 0;
    tbt::Index n2 = 0;
    std::uint64_t seed = 0;
    double ridge = tbt::kDefaultRidge;
    double tolerance = tbt::kDefaultTolerance;
    std::string input;
    std::string output;
    std::string method = "fast";
    bool show_counter = false;
    std::int64_t n_min = 2;
    std::int64_t n_max = 64;

    auto* gen = app.add_subcommand("gen", "Generate a random positive definite TBT generator file");
    gen->add_option("--n1", n1, "Block size")->required()->check(CLI::PositiveNumber);
    gen->add_option("--n2", n2, "Number of blocks")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "Random seed")->required();
    gen->add_option("--ridge", ridge, "Relative diagonal loading of c(0,0)")->check(CLI::PositiveNumber);
    gen->add_option("--output", output, "Generator file to write")->required();

    auto* invert = app.add_subcommand("invert", "Invert a TBT matrix; writes the dense inverse and <output>.factor");
    invert->add_option("--input", input, "Generator file")->required();
    invert->add_option("--method", method, "fast or oracle")->check(CLI::IsMember({"fast", "oracle"}));
    invert->add_option("--output", output, "Dense inverse file to write")->required();
    invert->add_flag("--counter", show_counter, "Print the operation counter");

    auto* wwr = app.add_subcommand("wwr", "Run the WWR block Levinson baseline");
    wwr->add_option("--input", input, "Generator file")->required();
    wwr->add_option("--output", output, "Coefficient block file to write")->required();

    auto* opcount = app.add_subcommand("opcount", "Write the operation-count comparison CSV for n1 = n2 = n");
    opcount->add_option("--min", n_min, "Smallest n (>= 2)")->required();
    opcount->add_option("--max", n_max, "Largest n")->required();
    opcount->add_option("--output", output, "CSV file to write, - for stdout")->required();

    auto* verify = app.add_subcommand("verify", "Cross-check fast tables, inverse and WWR against oracles");
    verify->add_option("--input", input, "Generator file")->required();
    verify->add_option("--tolerance", tolerance, "Pass threshold")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*gen) {
            return cmd_gen(n1, n2, seed, ridge, output);
        }
        if (*invert) {
            return cmd_invert(input, method, output, show_counter);
        }
        if (*wwr) {
            return cmd_wwr(input, output);
        }
        if (*opcount) {
            return cmd_opcount(n_min, n_max, output);
        }
        if (*verify) {
            return cmd_verify(input, tolerance);
        }
    } catch (const tbt::NotPositiveDefinite& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNotPositiveDefinite;
    } catch (const tbt::SingularP& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNotPositiveDefinite;
    } catch (const tbt::FactorizationMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kToleranceFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
