#ifndef SOSQ_SOLUTIONS_HPP
#define SOSQ_SOLUTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sosq/identities.hpp"
#include "sosq/sampling.hpp"

/// Solutions of the functional equations
///
///   f(p1) f(p2) = f(compose_two(p1, p2))     on R^2
///   f(q1) f(q2) = f(compose_four(q1, q2))    on R^4
///
/// Every solution has the form f(p) = sigma(p) * m(|p|) with m multiplicative
/// and sigma into {+1, -1}. That form is necessary, not sufficient: a model
/// built here is a candidate and must be re-checked with verify_equation_*.
namespace sosq {

enum class Arity { Two = 2, Four = 4 };

std::string to_string(Arity arity);

using RealFn2 = std::function<double(const RealVec2&)>;
using RealFn4 = std::function<double(const RealVec4&)>;

class MultiplicativeFamily {
public:
    enum class Kind { Power, SignedPower, ConstantOne, Zero, Custom };

    /// |x|^c, with m(0) = 0 for c != 0 (singular and flagged for c < 0).
    static MultiplicativeFamily power(double c);
    /// sgn(x) |x|^c
    static MultiplicativeFamily signed_power(double c);
    static MultiplicativeFamily constant_one();
    static MultiplicativeFamily zero();
    /// Not assumed multiplicative; check it with multiplicativity_residual.
    static MultiplicativeFamily custom(std::function<double(double)> fn, std::string name = "custom");

    double operator()(double x) const;

    /// True where the formula has no value and 0 is returned instead.
    bool singular_at(double x) const;

    Kind kind() const { return kind_; }
    double exponent() const { return exponent_; }
    std::string describe() const;

private:
    MultiplicativeFamily(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}

    Kind kind_;
    double exponent_;
    std::function<double(double)> custom_;
    std::string name_;
};

/// max |m(x1 x2) - m(x1) m(x2)| / (1 + |m(x1 x2)|) over the given pairs.
double multiplicativity_residual(const MultiplicativeFamily& m,
                                 const std::vector<std::pair<double, double>>& pairs);

class SignumMap {
public:
    using Fn = std::function<int(const Eigen::Ref<const Eigen::VectorXd>&)>;

    SignumMap() : SignumMap(constant(+1)) {}
    explicit SignumMap(Fn fn, std::string name = "custom") : fn_(std::move(fn)), name_(std::move(name)) {}

    static SignumMap constant(int sign);

    /// Throws std::domain_error if the wrapped function leaves {+1, -1}.
    int operator()(const Eigen::Ref<const Eigen::VectorXd>& point) const;

    const std::string& name() const { return name_; }

private:
    Fn fn_;
    std::string name_;
};

struct SolutionModel {
    Arity arity = Arity::Two;
    MultiplicativeFamily m = MultiplicativeFamily::power(2);
    SignumMap sigma;
};

/// sigma(point) * m(|point|). Throws ArityMismatch or NonFiniteInput.
double evaluate(const SolutionModel& model, const Eigen::Ref<const Eigen::VectorXd>& point);

RealFn2 as_function_two(const SolutionModel& model);
RealFn4 as_function_four(const SolutionModel& model);

struct VerificationReport {
    Arity arity = Arity::Two;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    double tol = 0;
    double max_abs_residual = 0;
    double max_rel_residual = 0;
    /// (p1, p2) concatenated; attains max_abs_residual.
    std::vector<double> worst_point;
    std::size_t nonfinite_count = 0;
    bool pass = false;

    bool operator==(const VerificationReport&) const = default;
};

/// Sweeps |f(p1) f(p2) - f(compose_two(p1, p2))| over sampler draws. The
/// relative residual divides by 1 + max(|f(p1) f(p2)|, |f(composed)|). PASS iff
/// every value is finite and the max relative residual is <= tol.
VerificationReport verify_equation_two(const RealFn2& f, const Sampler<double>& sampler, double tol,
                                       unsigned threads = 1);
VerificationReport verify_equation_four(const RealFn4& f, const Sampler<double>& sampler, double tol,
                                        unsigned threads = 1);

/// +/- 2^k for k = -4..6.
std::vector<double> default_ladder();

struct ProbeSet {
    std::vector<double> ladder = default_ladder();
    /// Extra uniformly drawn probe points in [lo, hi)^arity.
    std::size_t random_points = 0;
    double lo = -10;
    double hi = 10;
    std::uint64_t seed = 42;
};

struct MEntry {
    double x;
    double m;
};

struct SigmaEntry {
    Eigen::VectorXd point;
    double norm;
    double m_at_norm;
    /// f(point) / m(norm); +1 when undefined.
    double sigma;
    bool defined;
    bool violation;
};

struct StructureDiagnostics {
    std::size_t probes = 0;
    std::size_t undefined_sigma = 0;
    std::size_t sigma_violations = 0;
    std::size_t nonfinite = 0;
    /// max over defined probes of ||sigma| - 1|
    double max_sigma_deviation = 0;
    bool consistent() const { return sigma_violations == 0 && nonfinite == 0; }
};

struct StructureReport {
    std::vector<MEntry> m_table;
    std::vector<SigmaEntry> sigma_table;
    StructureDiagnostics diagnostics;
};

/// Recovers m(x) = f(x, 0) and sigma(p) = f(p) / m(|p|) on a probe grid. sigma
/// is undefined where |m(|p|)| <= tol and recorded as +1; probes where |sigma|
/// differs from 1 by more than tol are structure violations.
StructureReport extract_structure_two(const RealFn2& f, const ProbeSet& probe, double tol);
StructureReport extract_structure_four(const RealFn4& f, const ProbeSet& probe, double tol);

} // namespace sosq

#endif // SOSQ_SOLUTIONS_HPP
