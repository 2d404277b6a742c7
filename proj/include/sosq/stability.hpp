#ifndef SOSQ_STABILITY_HPP
#define SOSQ_STABILITY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sosq/errors.hpp"
#include "sosq/expression.hpp"
#include "sosq/identities.hpp"
#include "sosq/sampling.hpp"
#include "sosq/solutions.hpp"

/// Sampled checks of the stability statements for the two- and four-square
/// functional equations. For f with
///
///   |f(p1) f(p2) - f(compose(p1, p2))| <= min{bounds at the coordinates}
///
/// the diagonal m(x) = f(x, 0, ...) is either bounded or multiplicative, and
/// |f(p)^2 - f(|p|^2, 0, ...)| obeys the same bound. A sweep can only look for
/// counterexamples, so the bounded/multiplicative call is labelled empirical
/// and may come back INCONCLUSIVE.
///
/// The checks are templated on the field: `double` by default, or an exact
/// rational type so that composed points carry no rounding.
namespace sosq {

using ComplexVal = std::complex<double>;

template <typename Field>
using ComplexFn2 = std::function<ComplexVal(const Pair<Field>&)>;

template <typename Field>
using ComplexFn4 = std::function<ComplexVal(const Quad<Field>&)>;

using BoundFn = std::function<double(double)>;

/// The bound functions, in the order (M1, M2, N1, N2) for arity two and
/// (K1, K2, L1, L2, M1, M2, N1, N2) for arity four. Index 2k is applied to the
/// k-th coordinate of the first point and 2k+1 to that of the second.
class BoundSpec {
public:
    BoundSpec(Arity arity, std::vector<BoundFn> bounds, std::vector<std::string> labels = {});

    static BoundSpec constant(Arity arity, double value);
    /// One expression is applied to every slot; otherwise 4 (resp. 8) are required.
    static BoundSpec from_expressions(Arity arity, const std::vector<std::string>& exprs);

    Arity arity() const { return arity_; }
    std::size_t size() const { return bounds_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Throws InvalidBound on a negative or NaN value.
    double at(std::size_t slot, double x) const;

    /// min over slots of bound(slot, first[k]) and bound(slot, second[k]).
    double min_over(const double* first, const double* second) const;

    /// Pointwise scaled copy (for monotonicity checks).
    BoundSpec scaled(double factor) const;

private:
    Arity arity_;
    std::vector<BoundFn> bounds_;
    std::vector<std::string> labels_;
};

struct CheckFragment {
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    double tol = 0;
    /// max over samples of max(0, defect - bound)
    double max_excess = 0;
    double max_defect = 0;
    std::vector<double> worst_point;
    bool holds() const { return max_excess == 0; }

    bool operator==(const CheckFragment&) const = default;
};

enum class DiagonalClass { Bounded, Multiplicative, Inconclusive };

std::string to_string(DiagonalClass c);

struct ClassifyOptions {
    std::vector<double> ladder = default_ladder();
    double growth_threshold = 1e6;
    double mult_tol = 1e-6;
};

struct DiagonalEvidence {
    DiagonalClass classification = DiagonalClass::Inconclusive;
    /// max |m(x1) m(x2) - m(x1 x2)| / (1 + |m(x1 x2)|) over ladder pairs
    double max_mult_residual = 0;
    std::pair<double, double> worst_pair{0, 0};
    /// max |m(x)| over the ladder
    double sup_abs = 0;
    double decades = 0;
    double growth_threshold = 0;
    double mult_tol = 0;

    bool operator==(const DiagonalEvidence&) const = default;
};

/// MULTIPLICATIVE when the residual is <= mult_tol and the ladder spans at least
/// three decades (this wins over BOUNDED, so m = 1 is multiplicative); else
/// BOUNDED when sup |m| <= growth_threshold; else INCONCLUSIVE.
DiagonalEvidence classify_diagonal(const std::function<ComplexVal(double)>& m,
                                   const ClassifyOptions& opts = {});

template <typename Field>
std::function<ComplexVal(double)> diagonal_of_two(ComplexFn2<Field> f)
{
    return [f = std::move(f)](double x) { return f(pair_of<Field>(Field(x), Field(0))); };
}

template <typename Field>
std::function<ComplexVal(double)> diagonal_of_four(ComplexFn4<Field> f)
{
    return [f = std::move(f)](double x) {
        return f(quad_of<Field>(Field(x), Field(0), Field(0), Field(0)));
    };
}

struct StabilityReport {
    Arity arity = Arity::Two;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    double tol = 0;
    CheckFragment hypothesis;
    CheckFragment conclusion;
    DiagonalEvidence diagonal;

    double hypothesis_max_violation() const { return hypothesis.max_excess; }
    double conclusion_max_violation() const { return conclusion.max_excess; }
    bool operator==(const StabilityReport&) const = default;
};

/// One point of a sweep. `scale` is |lhs| + |rhs| of the compared products;
/// the sweep forgives tol * (1 + scale) of defect as rounding.
struct DefectSample {
    double defect = 0;
    double bound = 0;
    double scale = 0;
    bool operator==(const DefectSample&) const = default;
};

namespace detail {

template <typename Field>
double to_double(const Field& v)
{
    return static_cast<double>(v);
}

struct ExcessAcc {
    double max_excess = -1;
    double max_defect = 0;
    std::vector<double> worst_point;
};

inline ExcessAcc fold_excess(ExcessAcc a, ExcessAcc b)
{
    if (b.max_excess > a.max_excess) {
        a.max_excess = b.max_excess;
        a.worst_point = std::move(b.worst_point);
    }
    a.max_defect = std::max(a.max_defect, b.max_defect);
    return a;
}

inline double excess_of(const DefectSample& d, double tol)
{
    if (!std::isfinite(d.defect)) return std::numeric_limits<double>::infinity();
    return std::max(0.0, d.defect - d.bound - tol * (1 + d.scale));
}

template <typename Field, int N>
std::vector<double> as_doubles(const Eigen::Matrix<Field, N, 1>& v)
{
    std::vector<double> out;
    for (int k = 0; k < N; ++k) out.push_back(to_double(v(k)));
    return out;
}

template <typename Field, typename Map>
CheckFragment sweep(const Sampler<Field>& sampler, double tol, unsigned threads, Map map)
{
    ExcessAcc acc = indexed_reduce(sampler.count, threads, ExcessAcc{}, map, fold_excess);
    CheckFragment out;
    out.sample_count = sampler.count;
    out.seed = sampler.seed;
    out.tol = tol;
    out.max_excess = std::max(0.0, acc.max_excess);
    out.max_defect = acc.max_defect;
    out.worst_point = std::move(acc.worst_point);
    return out;
}

} // namespace detail

/// |f(p1) f(p2) - f(compose_two(p1, p2))| and the bound min{M1(x1), M2(x2), N1(y1), N2(y2)}.
template <typename Field>
DefectSample hypothesis_defect_two(const ComplexFn2<Field>& f, const BoundSpec& bounds,
                                                const Pair<Field>& p1, const Pair<Field>& p2)
{
    const double a[2] = {detail::to_double(p1(0)), detail::to_double(p1(1))};
    const double b[2] = {detail::to_double(p2(0)), detail::to_double(p2(1))};
    const double bound = bounds.min_over(a, b);
    const ComplexVal lhs = f(p1) * f(p2);
    const ComplexVal rhs = f(compose_two(p1, p2));
    return {std::abs(lhs - rhs), bound, std::abs(lhs) + std::abs(rhs)};
}

/// |f(p)^2 - f(norm2(p), 0)| and min{M1(x), M2(x), N1(y), N2(y)}. Computed with
/// the same expressions as hypothesis_defect_two at (p, p), so the two agree
/// bit for bit on the diagonal.
template <typename Field>
DefectSample conclusion_defect_two(const ComplexFn2<Field>& f, const BoundSpec& bounds,
                                                const Pair<Field>& p)
{
    const double a[2] = {detail::to_double(p(0)), detail::to_double(p(1))};
    const double bound = bounds.min_over(a, a);
    const ComplexVal fp = f(p);
    const ComplexVal lhs = fp * fp;
    const ComplexVal rhs = f(pair_of<Field>(norm2(p), Field(0)));
    return {std::abs(lhs - rhs), bound, std::abs(lhs) + std::abs(rhs)};
}

template <typename Field>
DefectSample hypothesis_defect_four(const ComplexFn4<Field>& f, const BoundSpec& bounds,
                                                 const Quad<Field>& q1, const Quad<Field>& q2)
{
    double a[4], b[4];
    for (int k = 0; k < 4; ++k) {
        a[k] = detail::to_double(q1(k));
        b[k] = detail::to_double(q2(k));
    }
    const double bound = bounds.min_over(a, b);
    const ComplexVal lhs = f(q1) * f(q2);
    const ComplexVal rhs = f(compose_four(q1, q2));
    return {std::abs(lhs - rhs), bound, std::abs(lhs) + std::abs(rhs)};
}

template <typename Field>
DefectSample conclusion_defect_four(const ComplexFn4<Field>& f, const BoundSpec& bounds,
                                                 const Quad<Field>& q)
{
    double a[4];
    for (int k = 0; k < 4; ++k) a[k] = detail::to_double(q(k));
    const double bound = bounds.min_over(a, a);
    const ComplexVal fq = f(q);
    const ComplexVal lhs = fq * fq;
    const ComplexVal rhs = f(quad_of<Field>(norm4(q), Field(0), Field(0), Field(0)));
    return {std::abs(lhs - rhs), bound, std::abs(lhs) + std::abs(rhs)};
}

template <typename Field>
CheckFragment check_hypothesis_two(const ComplexFn2<Field>& f, const BoundSpec& bounds,
                                   const Sampler<Field>& sampler, double tol, unsigned threads = 1)
{
    if (bounds.arity() != Arity::Two) throw ArityMismatch("check_hypothesis_two: bounds have arity 4");
    return detail::sweep(sampler, tol, threads, [&](std::size_t i) {
        const auto t = sampler.template tuple<4>(i);
        const Pair<Field> p1 = t.template head<2>();
        const Pair<Field> p2 = t.template tail<2>();
        const DefectSample d = hypothesis_defect_two(f, bounds, p1, p2);
        return detail::ExcessAcc{detail::excess_of(d, tol), d.defect, detail::as_doubles(t)};
    });
}

template <typename Field>
CheckFragment check_conclusion_two(const ComplexFn2<Field>& f, const BoundSpec& bounds,
                                   const Sampler<Field>& sampler, double tol, unsigned threads = 1)
{
    if (bounds.arity() != Arity::Two) throw ArityMismatch("check_conclusion_two: bounds have arity 4");
    return detail::sweep(sampler, tol, threads, [&](std::size_t i) {
        const Pair<Field> p = sampler.template tuple<2>(i);
        const DefectSample d = conclusion_defect_two(f, bounds, p);
        return detail::ExcessAcc{detail::excess_of(d, tol), d.defect, detail::as_doubles(p)};
    });
}

template <typename Field>
CheckFragment check_hypothesis_four(const ComplexFn4<Field>& f, const BoundSpec& bounds,
                                    const Sampler<Field>& sampler, double tol, unsigned threads = 1)
{
    if (bounds.arity() != Arity::Four) throw ArityMismatch("check_hypothesis_four: bounds have arity 2");
    return detail::sweep(sampler, tol, threads, [&](std::size_t i) {
        const auto t = sampler.template tuple<8>(i);
        const Quad<Field> q1 = t.template head<4>();
        const Quad<Field> q2 = t.template tail<4>();
        const DefectSample d = hypothesis_defect_four(f, bounds, q1, q2);
        return detail::ExcessAcc{detail::excess_of(d, tol), d.defect, detail::as_doubles(t)};
    });
}

template <typename Field>
CheckFragment check_conclusion_four(const ComplexFn4<Field>& f, const BoundSpec& bounds,
                                    const Sampler<Field>& sampler, double tol, unsigned threads = 1)
{
    if (bounds.arity() != Arity::Four) throw ArityMismatch("check_conclusion_four: bounds have arity 2");
    return detail::sweep(sampler, tol, threads, [&](std::size_t i) {
        const Quad<Field> q = sampler.template tuple<4>(i);
        const DefectSample d = conclusion_defect_four(f, bounds, q);
        return detail::ExcessAcc{detail::excess_of(d, tol), d.defect, detail::as_doubles(q)};
    });
}

/// Hypothesis, conclusion and diagonal classification in one report. The
/// conclusion sweep draws its points from the same seed as the hypothesis.
template <typename Field>
StabilityReport check_stability_two(const ComplexFn2<Field>& f, const BoundSpec& bounds,
                                    const Sampler<Field>& sampler, double tol,
                                    const ClassifyOptions& classify = {}, unsigned threads = 1)
{
    StabilityReport r;
    r.arity = Arity::Two;
    r.sample_count = sampler.count;
    r.seed = sampler.seed;
    r.tol = tol;
    r.hypothesis = check_hypothesis_two(f, bounds, sampler, tol, threads);
    r.conclusion = check_conclusion_two(f, bounds, sampler, tol, threads);
    r.diagonal = classify_diagonal(diagonal_of_two<Field>(f), classify);
    return r;
}

template <typename Field>
StabilityReport check_stability_four(const ComplexFn4<Field>& f, const BoundSpec& bounds,
                                     const Sampler<Field>& sampler, double tol,
                                     const ClassifyOptions& classify = {}, unsigned threads = 1)
{
    StabilityReport r;
    r.arity = Arity::Four;
    r.sample_count = sampler.count;
    r.seed = sampler.seed;
    r.tol = tol;
    r.hypothesis = check_hypothesis_four(f, bounds, sampler, tol, threads);
    r.conclusion = check_conclusion_four(f, bounds, sampler, tol, threads);
    r.diagonal = classify_diagonal(diagonal_of_four<Field>(f), classify);
    return r;
}

/// Uniform rationals num/den with |num| <= max_num and 1 <= den <= max_den.
Sampler<BigRational> rational_sampler(long long max_num, long long max_den, std::size_t count,
                                      std::uint64_t seed);

} // namespace sosq

#endif // SOSQ_STABILITY_HPP
