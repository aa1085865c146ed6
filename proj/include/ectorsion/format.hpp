#pragma once

#include <array>
#include <optional>
#include <string>

#include "ectorsion/engine.hpp"

namespace ectorsion {

/// Number syntax error with the offset of the first offending character.
struct ParseFailure : std::runtime_error {
    std::size_t position;
    ParseFailure(std::string what, std::size_t pos)
        : std::runtime_error(std::move(what)), position(pos) {}
};

/// Parse [+-]digits[/digits] in the given base (10 or 16). Hex uses a
/// leading minus on the magnitude, no 0x prefix.
Rat parse_rational(const std::string& text, int base);

/// Serialize exactly; base-16 output is uppercase with a leading minus.
std::string rat_str(const Rat& q, int base = 10);
std::string int_str(const Int& n, int base = 10);

struct CurveInput {
    bool long_form = false;
    int radix = 10;
    Rat A, B;                  // short form
    std::array<Rat, 5> ainv;   // long form a1, a2, a3, a4, a6
    std::string raw;           // input text as given
};

CurveInput parse_short_input(const std::string& a, const std::string& b, int radix);
CurveInput parse_long_input(const std::string& commaList, int radix);

/// One batch line: `A B` or `ainv:a1,a2,a3,a4,a6`; '#' starts a comment.
/// nullopt for blank/comment lines.
std::optional<CurveInput> parse_batch_line(const std::string& line, int radix);

struct RunOptions {
    int primes = 5;
    bool with_oracle = false;
    bool with_trace = false;
    bool show_final_polys = false;
    uint64_t oracle_budget = kDefaultRhoBudget;
};

struct OutputRecord {
    CurveInput input;
    Int integral_A, integral_B;
    Rat scaling_u;
    TorsionResult result;  // generators on the input model
    std::optional<TorsionResult> oracle;
    bool oracle_agrees = true;
    bool oracle_budget_exceeded = false;
    double elapsed_ms = 0.0;
};

/// Full pipeline for one curve; throws SingularCurveError on singular input.
OutputRecord compute_record(const CurveInput& in, const RunOptions& opts);

std::string record_to_json(const OutputRecord& rec, const RunOptions& opts);
std::string record_to_text(const OutputRecord& rec, const RunOptions& opts);

}  // namespace ectorsion
