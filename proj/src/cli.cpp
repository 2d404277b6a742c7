#include "sosq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sosq/errors.hpp"
#include "sosq/identities.hpp"
#include "sosq/model_spec.hpp"
#include "sosq/report_json.hpp"
#include "sosq/solutions.hpp"
#include "sosq/stability.hpp"
#include "sosq/sumsquares.hpp"
#include "sosq/systems.hpp"

namespace sosq {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Everything a subcommand reads from the command line.
struct RunConfig {
    std::string output = "human";
    std::string out_path;
    std::uint64_t seed = 42;
    std::size_t samples = 10000;
    std::optional<double> tol;
    double lo = -10;
    double hi = 10;
    unsigned threads = 1;
    int arity = 2;
    std::string model;
    std::vector<std::string> bounds;
    double growth_threshold = 1e6;
    double mult_tol = 1e-6;
    double zero_eps = 0;
    bool all_signs = false;
    int squares = 2;
    std::vector<std::string> integers;
    std::vector<double> reals;
};

struct Outcome {
    json result;
    std::string verdict;
    int code = kExitOk;
    std::string human;
};

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string fmt(const Eigen::Ref<const Eigen::VectorXd>& v)
{
    std::string s = "(";
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (k) s += ", ";
        s += fmt(v(k));
    }
    return s + ")";
}

template <int N>
std::string fmt(const Eigen::Matrix<BigInt, N, 1>& v)
{
    std::string s = "(";
    for (int k = 0; k < N; ++k) {
        if (k) s += ", ";
        s += v(k).str();
    }
    return s + ")";
}

template <int N>
json big_json(const Eigen::Matrix<BigInt, N, 1>& v)
{
    json out = json::array();
    for (int k = 0; k < N; ++k) out.push_back(v(k).str());
    return out;
}

BigInt parse_bigint(const std::string& s)
{
    const bool digits_only = !s.empty() &&
                             s.find_first_not_of("0123456789", (s[0] == '-' || s[0] == '+') ? 1 : 0) ==
                                 std::string::npos &&
                             s.size() > ((s[0] == '-' || s[0] == '+') ? 1u : 0u);
    if (!digits_only) throw UsageError("not an integer: '" + s + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

Arity arity_of(int a)
{
    if (a == 2) return Arity::Two;
    if (a == 4) return Arity::Four;
    throw UsageError("--arity must be 2 or 4");
}

void check_common(const RunConfig& cfg)
{
    if (cfg.samples < 1) throw UsageError("--samples must be >= 1");
    if (cfg.tol && !(*cfg.tol > 0)) throw UsageError("--tol must be > 0");
    if (!(cfg.lo < cfg.hi)) throw UsageError("--lo must be < --hi");
}

json sweep_config(const RunConfig& cfg, double tol)
{
    return json{{"arity", cfg.arity},
                {"model", cfg.model},
                {"samples", cfg.samples},
                {"seed", cfg.seed},
                {"tol", real_to_json(tol)},
                {"lo", real_to_json(cfg.lo)},
                {"hi", real_to_json(cfg.hi)}};
}

Outcome run_compose(const RunConfig& cfg, int arity)
{
    Outcome o;
    std::vector<BigInt> v;
    for (const auto& s : cfg.integers) v.push_back(parse_bigint(s));
    if (arity == 2) {
        const IntPair p1 = pair_of(v[0], v[1]);
        const IntPair p2 = pair_of(v[2], v[3]);
        const IntPair r = compose_two(p1, p2);
        const bool ok = norm2(r) == norm2(p1) * norm2(p2);
        o.result = {{"result", big_json(r)},
                    {"norm_product", (norm2(p1) * norm2(p2)).str()},
                    {"norm_result", norm2(r).str()},
                    {"norm_law_holds", ok}};
        o.human = "result " + fmt(r) + "\nnorm " + norm2(p1).str() + " * " + norm2(p2).str() + " = " +
                  norm2(r).str() + (ok ? " (holds)" : " (VIOLATED)") + "\n";
        o.verdict = ok ? "PASS" : "FAIL";
    } else {
        const IntQuad q1 = quad_of(v[0], v[1], v[2], v[3]);
        const IntQuad q2 = quad_of(v[4], v[5], v[6], v[7]);
        const IntQuad r = compose_four(q1, q2);
        const bool ok = norm4(r) == norm4(q1) * norm4(q2);
        o.result = {{"result", big_json(r)},
                    {"norm_product", (norm4(q1) * norm4(q2)).str()},
                    {"norm_result", norm4(r).str()},
                    {"norm_law_holds", ok}};
        o.human = "result " + fmt(r) + "\nnorm " + norm4(q1).str() + " * " + norm4(q2).str() + " = " +
                  norm4(r).str() + (ok ? " (holds)" : " (VIOLATED)") + "\n";
        o.verdict = ok ? "PASS" : "FAIL";
    }
    o.code = o.verdict == "PASS" ? kExitOk : kExitFail;
    return o;
}

Outcome run_solve(const RunConfig& cfg, int arity)
{
    Outcome o;
    const auto& r = cfg.reals;
    if (arity == 2) {
        SolveOptions<double> opts{cfg.tol.value_or(1e-9), cfg.zero_eps};
        const auto rep = solve_two(r[0], r[1], opts);
        o.result = solve_report_json(rep);
        o.human = "solution " + fmt(rep.solution) + "\ncase " + std::string(to_string(rep.case_label)) +
                  "\nresidual " + fmt(rep.residual) + "\nnorm residual " + fmt(rep.norm_residual) + "\n";
        if (cfg.all_signs) {
            json variants = json::array();
            for (const auto& s : sign_variants_two(r[0], r[1], opts)) {
                variants.push_back(json::array({real_to_json(s(0)), real_to_json(s(1))}));
                o.human += "variant " + fmt(s) + "\n";
            }
            o.result["sign_variants"] = variants;
        }
    } else {
        SolveOptions<double> opts{cfg.tol.value_or(1e-6), cfg.zero_eps};
        const auto rep = solve_four(r[0], r[1], r[2], r[3], opts);
        o.result = solve_report_json(rep);
        o.human = "solution " + fmt(rep.solution) + "\ncase " + std::string(to_string(rep.case_label)) +
                  "\nresidual " + fmt(rep.residual) + "\nnorm residual " + fmt(rep.norm_residual) + "\n";
        if (!std::isnan(rep.alpha)) o.human += "alpha " + fmt(rep.alpha) + "\n";
        if (cfg.all_signs) {
            json variants = json::array();
            for (const auto& s : sign_variants_four(r[0], r[1], r[2], r[3], opts)) {
                json v = json::array();
                for (int k = 0; k < 4; ++k) v.push_back(real_to_json(s(k)));
                variants.push_back(v);
                o.human += "variant " + fmt(s) + "\n";
            }
            o.result["sign_variants"] = variants;
        }
    }
    o.verdict = "PASS";
    return o;
}

Outcome run_verify(const RunConfig& cfg)
{
    check_common(cfg);
    const Arity arity = arity_of(cfg.arity);
    const SolutionModel model = parse_model_spec(cfg.model, arity);
    const double tol = cfg.tol.value_or(1e-9);
    const auto sampler = box_sampler(cfg.lo, cfg.hi, cfg.samples, cfg.seed);
    const VerificationReport rep = arity == Arity::Two
                                       ? verify_equation_two(as_function_two(model), sampler, tol, cfg.threads)
                                       : verify_equation_four(as_function_four(model), sampler, tol, cfg.threads);
    Outcome o;
    o.result = rep;
    o.verdict = rep.pass ? "PASS" : "FAIL";
    o.code = rep.pass ? kExitOk : kExitFail;
    o.human = "model " + cfg.model + " (arity " + std::to_string(cfg.arity) + ")\nsamples " +
              std::to_string(rep.sample_count) + " seed " + std::to_string(rep.seed) + "\nmax abs residual " +
              fmt(rep.max_abs_residual) + "\nmax rel residual " + fmt(rep.max_rel_residual) + " (tol " +
              fmt(tol) + ")\n";
    if (!rep.pass) {
        o.human += "worst point " + fmt(Eigen::Map<const Eigen::VectorXd>(
                                        rep.worst_point.data(), static_cast<Eigen::Index>(rep.worst_point.size()))) +
                   "\n";
    }
    o.human += o.verdict + "\n";
    return o;
}

ComplexFn2<double> complex_two(const SolutionModel& model)
{
    return [model](const Pair<double>& p) { return ComplexVal(evaluate(model, p)); };
}

ComplexFn4<double> complex_four(const SolutionModel& model)
{
    return [model](const Quad<double>& q) { return ComplexVal(evaluate(model, q)); };
}

ClassifyOptions classify_options(const RunConfig& cfg)
{
    ClassifyOptions opts;
    opts.growth_threshold = cfg.growth_threshold;
    opts.mult_tol = cfg.mult_tol;
    return opts;
}

std::string evidence_text(const DiagonalEvidence& ev)
{
    return "diagonal " + to_string(ev.classification) + " (empirical)\n  multiplicativity residual " +
           fmt(ev.max_mult_residual) + " (tol " + fmt(ev.mult_tol) + ")\n  sup |m| " + fmt(ev.sup_abs) +
           " (growth threshold " + fmt(ev.growth_threshold) + ")\n  decades probed " + fmt(ev.decades) + "\n";
}

Outcome run_stability(const RunConfig& cfg)
{
    check_common(cfg);
    const Arity arity = arity_of(cfg.arity);
    const SolutionModel model = parse_model_spec(cfg.model, arity);
    if (cfg.bounds.empty()) throw UsageError("--bounds is required");
    const BoundSpec bounds = BoundSpec::from_expressions(arity, cfg.bounds);
    const double tol = cfg.tol.value_or(1e-9);
    const auto sampler = box_sampler(cfg.lo, cfg.hi, cfg.samples, cfg.seed);
    const StabilityReport rep =
        arity == Arity::Two
            ? check_stability_two<double>(complex_two(model), bounds, sampler, tol, classify_options(cfg), cfg.threads)
            : check_stability_four<double>(complex_four(model), bounds, sampler, tol, classify_options(cfg),
                                           cfg.threads);
    Outcome o;
    o.result = rep;
    const bool ok = rep.hypothesis.holds() && rep.conclusion.holds();
    o.verdict = ok ? "PASS" : "FAIL";
    o.code = ok ? kExitOk : kExitFail;
    o.human = "model " + cfg.model + " (arity " + std::to_string(cfg.arity) + ")\nhypothesis max excess " +
              fmt(rep.hypothesis.max_excess) + "\nconclusion max excess " + fmt(rep.conclusion.max_excess) +
              "\n" + evidence_text(rep.diagonal) + o.verdict + "\n";
    return o;
}

Outcome run_classify(const RunConfig& cfg)
{
    const Arity arity = arity_of(cfg.arity);
    const SolutionModel model = parse_model_spec(cfg.model, arity);
    const DiagonalEvidence ev = arity == Arity::Two
                                    ? classify_diagonal(diagonal_of_two<double>(complex_two(model)), classify_options(cfg))
                                    : classify_diagonal(diagonal_of_four<double>(complex_four(model)),
                                                        classify_options(cfg));
    Outcome o;
    o.result = ev;
    o.verdict = to_string(ev.classification);
    o.code = ev.classification == DiagonalClass::Inconclusive ? kExitFail : kExitOk;
    o.human = evidence_text(ev);
    return o;
}

Outcome run_decompose(const RunConfig& cfg)
{
    const BigInt n = parse_bigint(cfg.integers.at(0));
    Outcome o;
    if (cfg.squares == 2) {
        if (n < 1) throw UsageError("decompose --squares 2 needs n >= 1");
        const auto rep = two_square_decompose(n);
        if (!rep) {
            o.result = {{"n", n.str()}, {"representable", false}};
            o.verdict = "FAIL";
            o.code = kExitFail;
            o.human = n.str() + " is not representable as a sum of two squares\n";
            return o;
        }
        o.result = {{"n", n.str()}, {"representable", true}, {"components", big_json(rep->components)}};
        o.human = n.str() + " = " + rep->components(0).str() + "^2 + " + rep->components(1).str() + "^2\n";
    } else if (cfg.squares == 4) {
        if (n < 0) throw UsageError("decompose --squares 4 needs n >= 0");
        const auto rep = four_square_decompose(n);
        o.result = {{"n", n.str()}, {"representable", true}, {"components", big_json(rep.components)}};
        o.human = n.str() + " = " + rep.components(0).str() + "^2 + " + rep.components(1).str() + "^2 + " +
                  rep.components(2).str() + "^2 + " + rep.components(3).str() + "^2\n";
    } else {
        throw UsageError("--squares must be 2 or 4");
    }
    o.verdict = "PASS";
    return o;
}

Outcome run_rep_check(const RunConfig& cfg)
{
    const BigInt n = parse_bigint(cfg.integers.at(0));
    if (n < 1) throw UsageError("rep-check needs n >= 1");
    const bool criterion = is_sum_of_two_squares(n);

    std::optional<IntPair> witness;
    for (BigInt a = 0; 2 * a * a <= n && !witness; ++a) {
        const BigInt rest = n - a * a;
        if (is_perfect_square(rest)) witness = pair_of<BigInt>(isqrt(rest), a);
    }
    const bool brute = witness.has_value();

    json fac = json::array();
    std::string fac_text;
    for (const auto& [p, e] : factorize(n).factors) {
        fac.push_back({{"prime", p.str()}, {"exponent", e}});
        fac_text += (fac_text.empty() ? "" : " * ") + p.str() + (e > 1 ? "^" + std::to_string(e) : "");
    }

    Outcome o;
    o.result = {{"n", n.str()}, {"factorization", fac}, {"criterion", criterion}, {"brute_force", brute}};
    if (witness) o.result["witness"] = big_json(*witness);
    o.verdict = criterion == brute ? "PASS" : "FAIL";
    o.code = criterion == brute ? kExitOk : kExitFail;
    o.human = "n = " + n.str() + (fac_text.empty() ? "" : " = " + fac_text) + "\ncriterion: " +
              (criterion ? "representable" : "not representable") + "\nbrute force: " +
              (brute ? "representable " + fmt(*witness) : "not representable") + "\n" +
              (criterion == brute ? "agree\n" : "DISAGREE\n");
    return o;
}

void emit(const RunConfig& cfg, const std::string& command, const json& config, const Outcome& o,
          std::ostream& out)
{
    std::string text;
    if (cfg.output == "json") {
        json doc{{"command", command}, {"config", config}, {"result", o.result}, {"verdict", o.verdict}};
        text = doc.dump(2) + "\n";
    } else {
        text = o.human;
    }
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open --out file " + cfg.out_path);
    file << text;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    if (const char* env = std::getenv("SOSQ_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: SOSQ_SEED is not an unsigned integer: '" << env << "'\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Sums of squares: composition laws, system solvers, functional-equation checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"human", "json"}));
    app.add_flag_callback("--json", [&cfg] { cfg.output = "json"; }, "Shorthand for --output json");
    app.add_option("--out", cfg.out_path, "Write the report to this file");

    auto add_sweep = [&cfg](CLI::App* sub) {
        sub->add_option("--samples", cfg.samples, "Number of samples");
        sub->add_option("--seed", cfg.seed, "Random seed (default 42 or $SOSQ_SEED)");
        sub->add_option("--tol", cfg.tol, "Tolerance");
        sub->add_option("--lo", cfg.lo, "Lower end of the sampling box");
        sub->add_option("--hi", cfg.hi, "Upper end of the sampling box");
        sub->add_option("--threads", cfg.threads, "Worker threads (results do not depend on this)");
    };
    auto add_classify = [&cfg](CLI::App* sub) {
        sub->add_option("--growth-threshold", cfg.growth_threshold, "sup |m| above which m is not bounded");
        sub->add_option("--mult-tol", cfg.mult_tol, "Relative multiplicativity tolerance");
    };

    auto* compose2 = app.add_subcommand("compose2", "Two-square composition of (x1,y1) and (x2,y2)");
    compose2->add_option("values", cfg.integers, "x1 y1 x2 y2")->expected(4)->required();
    auto* compose4 = app.add_subcommand("compose4", "Four-square composition of two integer quadruples");
    compose4->add_option("values", cfg.integers, "x1 y1 z1 w1 x2 y2 z2 w2")->expected(8)->required();

    auto* solve2 = app.add_subcommand("solve2", "Solve 2xy = u, x^2 - y^2 = v");
    solve2->add_option("values", cfg.reals, "u v")->expected(2)->required();
    auto* solve4 = app.add_subcommand("solve4", "Solve the four-variable system for (a, b, c, d)");
    solve4->add_option("values", cfg.reals, "a b c d")->expected(4)->required();
    for (auto* sub : {solve2, solve4}) {
        sub->add_option("--tol", cfg.tol, "Residual tolerance");
        sub->add_option("--eps", cfg.zero_eps, "Treat |value| <= eps as zero in the case split");
        sub->add_flag("--all-signs", cfg.all_signs, "Also list every sign variant that solves the system");
    }

    auto* verify = app.add_subcommand("verify", "Sample the functional equation for a model");
    verify->add_option("--arity", cfg.arity, "2 or 4")->required();
    verify->add_option("--model", cfg.model, "power:c=<r> | signedpower:c=<r> | one | zero [,sigma=-1]")->required();
    add_sweep(verify);

    auto* stability = app.add_subcommand("stability", "Check the stability hypothesis and conclusion");
    stability->add_option("--arity", cfg.arity, "2 or 4")->required();
    stability->add_option("--model", cfg.model, "Model spec")->required();
    stability->add_option("--bounds", cfg.bounds, "One expression for all slots, or 4 (arity 2) / 8 (arity 4)")
        ->required();
    add_sweep(stability);
    add_classify(stability);

    auto* classify = app.add_subcommand("classify", "Bounded-or-multiplicative verdict for f(x, 0, ...)");
    classify->add_option("--model", cfg.model, "Model spec")->required();
    classify->add_option("--arity", cfg.arity, "2 or 4");
    add_classify(classify);

    auto* decompose = app.add_subcommand("decompose", "Write n as a sum of two or four squares");
    decompose->add_option("--squares", cfg.squares, "2 or 4")->required();
    decompose->add_option("n", cfg.integers, "n")->expected(1)->required();

    auto* rep_check = app.add_subcommand("rep-check", "Two-square criterion with a brute-force cross-check");
    rep_check->add_option("n", cfg.integers, "n")->expected(1)->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    try {
        Outcome o;
        json config;
        if (command == "compose2" || command == "compose4") {
            o = run_compose(cfg, command == "compose2" ? 2 : 4);
            config = {{"values", cfg.integers}};
        } else if (command == "solve2" || command == "solve4") {
            o = run_solve(cfg, command == "solve2" ? 2 : 4);
            json vals = json::array();
            for (double v : cfg.reals) vals.push_back(real_to_json(v));
            config = {{"values", vals}, {"eps", real_to_json(cfg.zero_eps)}, {"all_signs", cfg.all_signs}};
        } else if (command == "verify") {
            o = run_verify(cfg);
            config = sweep_config(cfg, cfg.tol.value_or(1e-9));
        } else if (command == "stability") {
            o = run_stability(cfg);
            config = sweep_config(cfg, cfg.tol.value_or(1e-9));
            config["bounds"] = cfg.bounds;
            config["growth_threshold"] = real_to_json(cfg.growth_threshold);
            config["mult_tol"] = real_to_json(cfg.mult_tol);
        } else if (command == "classify") {
            o = run_classify(cfg);
            config = {{"arity", cfg.arity},
                      {"model", cfg.model},
                      {"growth_threshold", real_to_json(cfg.growth_threshold)},
                      {"mult_tol", real_to_json(cfg.mult_tol)}};
        } else if (command == "decompose") {
            o = run_decompose(cfg);
            config = {{"squares", cfg.squares}, {"n", cfg.integers.at(0)}};
        } else {
            o = run_rep_check(cfg);
            config = {{"n", cfg.integers.at(0)}};
        }
        emit(cfg, command, config, o, out);
        return o.code;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << " (offending token: '" << e.token() << "')\n";
        return kExitUsage;
    } catch (const ResidualExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        // UsageError, NonFiniteInput, ArityMismatch, InvalidBound
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
}

} // namespace sosq
