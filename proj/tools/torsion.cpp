// torsion: rational torsion subgroup of an elliptic curve over Q.
//
// Usage examples:
//   torsion 12933 -2285226
//   torsion --hex -98D6E49C45C901B B5D1E097F653622F55B036 --json
//   torsion --ainv 1,-10,-10,0,0
//   torsion --file curves.txt --json --oracle

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ectorsion/format.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitSingular = 2;
constexpr int kExitOracleMismatch = 3;

int emit(const ectorsion::OutputRecord& rec, const ectorsion::RunOptions& opts, bool as_json) {
    if (as_json)
        std::cout << ectorsion::record_to_json(rec, opts) << "\n";
    else
        std::cout << ectorsion::record_to_text(rec, opts) << "\n";
    if (rec.oracle_budget_exceeded)
        std::cerr << "warning: oracle skipped, discriminant factorization budget exceeded\n";
    if (rec.oracle && !rec.oracle_agrees) {
        std::cerr << "error: oracle disagreement on " << rec.input.raw << "\n";
        return kExitOracleMismatch;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torsion subgroup of an elliptic curve over Q"};
    app.get_formatter()->column_width(34);

    std::vector<std::string> positional;
    std::string ainv, file;
    bool hex = false, as_json = false;
    ectorsion::RunOptions opts;

    app.add_option("A B", positional,
                   "short Weierstrass coefficients of Y^2 = X^3 + A X + B (rationals, `n` or `n/d`)")
        ->expected(0, 2);
    app.add_option("--ainv", ainv, "long model coefficients a1,a2,a3,a4,a6");
    app.add_flag("--hex", hex, "read coefficients in base 16 (leading minus for negatives)");
    app.add_flag("--json", as_json, "emit JSON records instead of text");
    app.add_flag("--oracle", opts.with_oracle, "cross-check with the Lutz-Nagell computation");
    app.add_option("--primes", opts.primes, "number of good primes for the torsion bound")
        ->default_val(5)
        ->check(CLI::PositiveNumber);
    app.add_option("--file", file, "batch file, one curve per line (`A B` or `ainv:...`)");
    app.add_flag("--trace", opts.with_trace, "include the bound/roots trace in the output");
    app.add_flag("--show-polys", opts.show_final_polys,
                 "with --trace, also print the final polynomials examined");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    const int radix = hex ? 16 : 10;
    std::vector<ectorsion::CurveInput> inputs;
    try {
        if (!file.empty()) {
            if (!positional.empty() || !ainv.empty()) {
                std::cerr << "error: --file excludes inline curve arguments\n";
                return kExitParse;
            }
            std::ifstream in(file);
            if (!in) {
                std::cerr << "error: cannot open " << file << "\n";
                return kExitParse;
            }
            std::string line;
            int lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                try {
                    auto parsed = ectorsion::parse_batch_line(line, radix);
                    if (parsed) inputs.push_back(std::move(*parsed));
                } catch (const ectorsion::ParseFailure& e) {
                    std::cerr << "error: " << file << ":" << lineno << ": " << e.what()
                              << " at position " << e.position << "\n";
                    return kExitParse;
                }
            }
        } else if (!ainv.empty()) {
            if (!positional.empty()) {
                std::cerr << "error: --ainv excludes positional A B\n";
                return kExitParse;
            }
            inputs.push_back(ectorsion::parse_long_input(ainv, radix));
        } else if (positional.size() == 2) {
            inputs.push_back(ectorsion::parse_short_input(positional[0], positional[1], radix));
        } else {
            std::cerr << app.help();
            return kExitParse;
        }
    } catch (const ectorsion::ParseFailure& e) {
        std::cerr << "error: " << e.what() << " at position " << e.position << "\n";
        return kExitParse;
    }

    int exit_code = kExitOk;
    for (const auto& in : inputs) {
        try {
            ectorsion::OutputRecord rec = ectorsion::compute_record(in, opts);
            exit_code = std::max(exit_code, emit(rec, opts, as_json));
        } catch (const ectorsion::SingularCurveError& e) {
            std::cerr << "error: " << in.raw << ": " << e.what() << "\n";
            exit_code = std::max(exit_code, kExitSingular);
        }
    }
    return exit_code;
}
