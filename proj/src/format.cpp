#include "ectorsion/format.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "ectorsion/model.hpp"
#include "ectorsion/nagell.hpp"
#include "ectorsion/tate.hpp"

namespace ectorsion {

namespace {

bool digit_ok(char ch, int base) {
    if (base == 10) return std::isdigit(static_cast<unsigned char>(ch)) != 0;
    return std::isxdigit(static_cast<unsigned char>(ch)) != 0;
}

// one signed magnitude; returns the value and advances pos
Int parse_magnitude(const std::string& text, std::size_t& pos, int base) {
    std::size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    std::size_t digits_begin = pos;
    while (pos < text.size() && digit_ok(text[pos], base)) ++pos;
    if (pos == digits_begin)
        throw ParseFailure("expected a base-" + std::to_string(base) + " digit", pos);
    Int v;
    if (mpz_set_str(v.get_mpz_t(), text.substr(digits_begin, pos - digits_begin).c_str(), base) !=
        0)
        throw ParseFailure("invalid number", start);
    return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rational(const std::string& text, int base) {
    if (base != 10 && base != 16) throw std::invalid_argument("parse_rational: base 10 or 16");
    std::size_t pos = 0;
    Int num = parse_magnitude(text, pos, base);
    Int den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_magnitude(text, pos, base);
        if (sgn(den) == 0) throw ParseFailure("zero denominator", pos - 1);
        if (sgn(den) < 0) throw ParseFailure("denominator must be positive", pos - 1);
    }
    if (pos != text.size()) throw ParseFailure("unexpected character", pos);
    return make_rat(num, den);
}

std::string int_str(const Int& n, int base) {
    std::string s = n.get_str(base);
    if (base == 16) std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return std::toupper(c);
    });
    return s;
}

std::string rat_str(const Rat& q, int base) {
    std::string s = int_str(Int(q.get_num()), base);
    if (q.get_den() != 1) s += "/" + int_str(Int(q.get_den()), base);
    return s;
}

CurveInput parse_short_input(const std::string& a, const std::string& b, int radix) {
    CurveInput in;
    in.long_form = false;
    in.radix = radix;
    in.A = parse_rational(a, radix);
    in.B = parse_rational(b, radix);
    in.raw = a + " " + b;
    return in;
}

CurveInput parse_long_input(const std::string& commaList, int radix) {
    CurveInput in;
    in.long_form = true;
    in.radix = radix;
    in.raw = "ainv:" + commaList;
    std::size_t pos = 0, item = 0;
    std::string tok;
    std::istringstream is(commaList);
    while (std::getline(is, tok, ',')) {
        if (item >= 5) throw ParseFailure("expected exactly five a-invariants", pos);
        try {
            in.ainv[item] = parse_rational(tok, radix);
        } catch (const ParseFailure& e) {
            throw ParseFailure(std::string(e.what()) + " in a-invariant " + std::to_string(item + 1),
                               pos + e.position);
        }
        pos += tok.size() + 1;
        ++item;
    }
    if (item != 5) throw ParseFailure("expected exactly five a-invariants", pos);
    return in;
}

std::optional<CurveInput> parse_batch_line(const std::string& line, int radix) {
    std::string body = line.substr(0, line.find('#'));
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    body.erase(body.begin(), std::find_if(body.begin(), body.end(), notspace));
    body.erase(std::find_if(body.rbegin(), body.rend(), notspace).base(), body.end());
    if (body.empty()) return std::nullopt;
    if (body.rfind("ainv:", 0) == 0) return parse_long_input(body.substr(5), radix);
    std::istringstream is(body);
    std::string a, b, extra;
    if (!(is >> a >> b) || (is >> extra))
        throw ParseFailure("expected `A B` or `ainv:a1,a2,a3,a4,a6`", 0);
    return parse_short_input(a, b, radix);
}

namespace {

GeneralCurve as_general(const CurveInput& in) {
    return GeneralCurve{in.ainv[0], in.ainv[1], in.ainv[2], in.ainv[3], in.ainv[4]};
}

bool structures_agree(const TorsionResult& a, const TorsionResult& b) {
    return a.structure == b.structure && a.order == b.order;
}

}  // namespace

OutputRecord compute_record(const CurveInput& in, const RunOptions& opts) {
    OutputRecord rec;
    rec.input = in;
    auto t0 = std::chrono::steady_clock::now();

    IntegralModelResult im =
        in.long_form
            ? to_integral_model(to_short_form(as_general(in)).A, to_short_form(as_general(in)).B)
            : to_integral_model(in.A, in.B);
    rec.integral_A = im.curve.A;
    rec.integral_B = im.curve.B;
    rec.scaling_u = im.u;

    rec.result = in.long_form ? torsion_subgroup(as_general(in), opts.primes)
                              : torsion_subgroup(in.A, in.B, opts.primes);

    if (opts.with_oracle) {
        try {
            TorsionResult oracle = lutz_nagell_torsion(im.curve, opts.oracle_budget);
            rec.oracle_agrees = structures_agree(rec.result, oracle);
            rec.oracle = std::move(oracle);
        } catch (const FactorBudgetExceeded&) {
            rec.oracle_budget_exceeded = true;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

namespace {

using nlohmann::json;

json point_json(const RationalPoint& p) {
    if (p.is_infinity()) return json{{"infinity", true}};
    return json{{"x", {{"num", int_str(Int(p.x().get_num()))}, {"den", int_str(Int(p.x().get_den()))}}},
                {"y", {{"num", int_str(Int(p.y().get_num()))}, {"den", int_str(Int(p.y().get_den()))}}}};
}

json result_json(const TorsionResult& r) {
    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back(point_json(g));
    return json{{"structure", r.structure.str()}, {"order", r.order}, {"generators", gens}};
}

json trace_json(const EngineTrace& t, bool show_polys, const Int& A, const Int& B) {
    json roots = json::array();
    for (const auto& [n, rs] : t.roots_examined) {
        json list = json::array();
        for (const Rat& r : rs) list.push_back(rat_str(r));
        json entry{{"n", n}, {"roots", list}};
        if (show_polys && n >= 4 && n <= 9) {
            ShortCurve c(A, B);
            entry["final_polynomial"] = final_polynomial(n, c).str("b");
        }
        roots.push_back(entry);
    }
    json rejected = json::array();
    for (const Rat& r : t.order3_rejected) rejected.push_back(rat_str(r));
    json out{{"bound", int_str(Int(static_cast<unsigned long>(t.bound)))},
             {"primes", t.primes},
             {"roots_examined", roots},
             {"order3_rejected", rejected},
             {"scaling_u", rat_str(t.scaling_u)}};
    if (t.family_alpha) out["family_alpha"] = rat_str(*t.family_alpha);
    return out;
}

}  // namespace

std::string record_to_json(const OutputRecord& rec, const RunOptions& opts) {
    json j;
    j["input"] = json{{"form", rec.input.long_form ? "long" : "short"},
                      {"radix", rec.input.radix},
                      {"text", rec.input.raw}};
    if (!rec.input.long_form) {
        j["input"]["A"] = rat_str(rec.input.A, rec.input.radix);
        j["input"]["B"] = rat_str(rec.input.B, rec.input.radix);
    } else {
        json a = json::array();
        for (const auto& q : rec.input.ainv) a.push_back(rat_str(q, rec.input.radix));
        j["input"]["a_invariants"] = a;
    }
    j["integral_model"] = json{{"A", int_str(rec.integral_A)},
                               {"B", int_str(rec.integral_B)},
                               {"u", rat_str(rec.scaling_u)}};
    j["structure"] = rec.result.structure.str();
    j["order"] = rec.result.order;
    json gens = json::array();
    for (const auto& g : rec.result.generators) gens.push_back(point_json(g));
    j["generators"] = gens;
    j["bound"] = json{{"M", int_str(Int(static_cast<unsigned long>(rec.result.trace.bound)))},
                      {"primes", rec.result.trace.primes}};
    j["elapsed_ms"] = rec.elapsed_ms;
    if (rec.oracle) {
        j["oracle"] = result_json(*rec.oracle);
        j["oracle"]["agrees"] = rec.oracle_agrees;
    } else if (rec.oracle_budget_exceeded) {
        j["oracle"] = json{{"budget_exceeded", true}};
    }
    if (opts.with_trace)
        j["trace"] = trace_json(rec.result.trace, opts.show_final_polys, rec.integral_A,
                                rec.integral_B);
    return j.dump(2);
}

namespace {

std::string point_text(const RationalPoint& p) {
    if (p.is_infinity()) return "O";
    return "(" + rat_str(p.x()) + ", " + rat_str(p.y()) + ")";
}

}  // namespace

std::string record_to_text(const OutputRecord& rec, const RunOptions& opts) {
    std::ostringstream os;
    os << "curve:          " << rec.input.raw << "\n";
    os << "integral model: Y^2 = X^3 + (" << int_str(rec.integral_A) << ")X + ("
       << int_str(rec.integral_B) << "), u = " << rat_str(rec.scaling_u) << "\n";
    os << "torsion:        " << rec.result.structure.str() << " (order " << rec.result.order
       << ")\n";
    if (rec.result.generators.empty()) {
        os << "generators:     none (trivial group)\n";
    } else {
        os << "generators:    ";
        for (const auto& g : rec.result.generators) os << " " << point_text(g);
        os << "\n";
    }
    os << "bound:          M = " << rec.result.trace.bound << " via primes";
    for (uint64_t p : rec.result.trace.primes) os << " " << p;
    os << "\n";
    if (rec.oracle) {
        os << "oracle:         " << rec.oracle->structure.str()
           << (rec.oracle_agrees ? " (agrees)" : " (MISMATCH)") << "\n";
    } else if (rec.oracle_budget_exceeded) {
        os << "oracle:         skipped (factorization budget exceeded)\n";
    }
    if (opts.with_trace) {
        for (const auto& [n, roots] : rec.result.trace.roots_examined) {
            os << "trace:          n = " << n << " roots:";
            if (roots.empty()) os << " none";
            for (const Rat& r : roots) os << " " << rat_str(r);
            os << "\n";
            if (opts.show_final_polys && n >= 4 && n <= 9) {
                ShortCurve c(rec.integral_A, rec.integral_B);
                os << "                F_" << n << " = " << final_polynomial(n, c).str("b")
                   << "\n";
            }
        }
        if (rec.result.trace.family_alpha)
            os << "trace:          family parameter alpha = "
               << rat_str(*rec.result.trace.family_alpha) << "\n";
        for (const Rat& r : rec.result.trace.order3_rejected)
            os << "trace:          order-3 quartic root rejected: " << rat_str(r) << "\n";
    }
    os << "time:           " << rec.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace ectorsion
