#include "sosq/stability.hpp"

#include <sstream>

namespace sosq {

std::string to_string(DiagonalClass c)
{
    switch (c) {
    case DiagonalClass::Bounded: return "BOUNDED";
    case DiagonalClass::Multiplicative: return "MULTIPLICATIVE";
    case DiagonalClass::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

std::vector<std::string> slot_names(Arity arity)
{
    if (arity == Arity::Two) return {"M1", "M2", "N1", "N2"};
    return {"K1", "K2", "L1", "L2", "M1", "M2", "N1", "N2"};
}

} // namespace

BoundSpec::BoundSpec(Arity arity, std::vector<BoundFn> bounds, std::vector<std::string> labels)
    : arity_(arity), bounds_(std::move(bounds)), labels_(std::move(labels))
{
    const std::size_t expected = 2 * static_cast<std::size_t>(arity);
    if (bounds_.size() != expected) {
        throw ArityMismatch("arity " + to_string(arity) + " needs " + std::to_string(expected) +
                            " bound functions, got " + std::to_string(bounds_.size()));
    }
    if (labels_.empty()) labels_ = slot_names(arity);
}

BoundSpec BoundSpec::constant(Arity arity, double value)
{
    if (!(value >= 0)) throw InvalidBound("constant bound must be nonnegative");
    const std::size_t n = 2 * static_cast<std::size_t>(arity);
    std::ostringstream os;
    os.precision(17);
    os << value;
    return BoundSpec(arity, std::vector<BoundFn>(n, [value](double) { return value; }),
                     std::vector<std::string>(n, os.str()));
}

BoundSpec BoundSpec::from_expressions(Arity arity, const std::vector<std::string>& exprs)
{
    const std::size_t n = 2 * static_cast<std::size_t>(arity);
    if (exprs.size() != 1 && exprs.size() != n) {
        throw ArityMismatch("arity " + to_string(arity) + " needs 1 or " + std::to_string(n) +
                            " bound expressions, got " + std::to_string(exprs.size()));
    }
    std::vector<BoundFn> fns;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& text = exprs.size() == 1 ? exprs[0] : exprs[i];
        fns.emplace_back(Expression::parse(text));
        labels.push_back(text);
    }
    return BoundSpec(arity, std::move(fns), std::move(labels));
}

double BoundSpec::at(std::size_t slot, double x) const
{
    const double v = bounds_.at(slot)(x);
    if (!(v >= 0)) {
        std::ostringstream os;
        os.precision(17);
        os << "bound " << slot_names(arity_)[slot] << " (" << labels_[slot] << ") is " << v << " at x = " << x;
        throw InvalidBound(os.str());
    }
    return v;
}

double BoundSpec::min_over(const double* first, const double* second) const
{
    double m = std::numeric_limits<double>::infinity();
    const std::size_t coords = static_cast<std::size_t>(arity_);
    for (std::size_t k = 0; k < coords; ++k) {
        m = std::min(m, at(2 * k, first[k]));
        m = std::min(m, at(2 * k + 1, second[k]));
    }
    return m;
}

BoundSpec BoundSpec::scaled(double factor) const
{
    std::vector<BoundFn> fns;
    for (const auto& b : bounds_) {
        fns.emplace_back([b, factor](double x) { return factor * b(x); });
    }
    return BoundSpec(arity_, std::move(fns), labels_);
}

DiagonalEvidence classify_diagonal(const std::function<ComplexVal(double)>& m, const ClassifyOptions& opts)
{
    DiagonalEvidence ev;
    ev.growth_threshold = opts.growth_threshold;
    ev.mult_tol = opts.mult_tol;

    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    std::vector<ComplexVal> values;
    values.reserve(opts.ladder.size());
    for (double x : opts.ladder) {
        const ComplexVal v = m(x);
        values.push_back(v);
        const double a = std::abs(v);
        ev.sup_abs = std::isfinite(a) ? std::max(ev.sup_abs, a) : std::numeric_limits<double>::infinity();
        if (x != 0.0) {
            lo = std::min(lo, std::abs(x));
            hi = std::max(hi, std::abs(x));
        }
    }
    ev.decades = hi > 0 ? std::log10(hi / lo) : 0.0;

    for (std::size_t i = 0; i < opts.ladder.size(); ++i) {
        for (std::size_t j = 0; j < opts.ladder.size(); ++j) {
            const double x1 = opts.ladder[i];
            const double x2 = opts.ladder[j];
            const ComplexVal joint = m(x1 * x2);
            double r = std::abs(values[i] * values[j] - joint) / (1.0 + std::abs(joint));
            if (!std::isfinite(r)) r = std::numeric_limits<double>::infinity();
            if (r > ev.max_mult_residual) {
                ev.max_mult_residual = r;
                ev.worst_pair = {x1, x2};
            }
        }
    }

    // multiplicativity is only claimed over at least three decades of |x|
    const bool enough_decades = ev.decades >= 3.0;
    if (ev.max_mult_residual <= opts.mult_tol && enough_decades) {
        ev.classification = DiagonalClass::Multiplicative;
    } else if (ev.sup_abs <= opts.growth_threshold) {
        ev.classification = DiagonalClass::Bounded;
    } else {
        ev.classification = DiagonalClass::Inconclusive;
    }
    return ev;
}

Sampler<BigRational> rational_sampler(long long max_num, long long max_den, std::size_t count,
                                      std::uint64_t seed)
{
    return {[max_num, max_den](std::mt19937_64& rng) {
                const long long num = std::uniform_int_distribution<long long>(-max_num, max_num)(rng);
                const long long den = std::uniform_int_distribution<long long>(1, max_den)(rng);
                return BigRational(num, den);
            },
            count, seed};
}

} // namespace sosq
