#include "sosq/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sosq/errors.hpp"

namespace sosq {

std::string to_string(Arity arity)
{
    return arity == Arity::Two ? "2" : "4";
}

MultiplicativeFamily MultiplicativeFamily::power(double c)
{
    return {Kind::Power, c};
}

MultiplicativeFamily MultiplicativeFamily::signed_power(double c)
{
    return {Kind::SignedPower, c};
}

MultiplicativeFamily MultiplicativeFamily::constant_one()
{
    return {Kind::ConstantOne, 0.0};
}

MultiplicativeFamily MultiplicativeFamily::zero()
{
    return {Kind::Zero, 0.0};
}

MultiplicativeFamily MultiplicativeFamily::custom(std::function<double(double)> fn, std::string name)
{
    MultiplicativeFamily m{Kind::Custom, 0.0};
    m.custom_ = std::move(fn);
    m.name_ = std::move(name);
    return m;
}

double MultiplicativeFamily::operator()(double x) const
{
    switch (kind_) {
    case Kind::ConstantOne:
        return 1.0;
    case Kind::Zero:
        return 0.0;
    case Kind::Custom:
        return custom_(x);
    case Kind::Power:
        if (exponent_ == 0.0) return 1.0;
        if (x == 0.0) return 0.0;
        return std::pow(std::abs(x), exponent_);
    case Kind::SignedPower:
        if (x == 0.0) return 0.0;
        return std::copysign(std::pow(std::abs(x), exponent_), x);
    }
    return 0.0;
}

bool MultiplicativeFamily::singular_at(double x) const
{
    return (kind_ == Kind::Power || kind_ == Kind::SignedPower) && exponent_ < 0 && x == 0.0;
}

std::string MultiplicativeFamily::describe() const
{
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
    case Kind::Power: os << "power:c=" << exponent_; break;
    case Kind::SignedPower: os << "signedpower:c=" << exponent_; break;
    case Kind::ConstantOne: os << "one"; break;
    case Kind::Zero: os << "zero"; break;
    case Kind::Custom: os << name_; break;
    }
    return os.str();
}

double multiplicativity_residual(const MultiplicativeFamily& m,
                                 const std::vector<std::pair<double, double>>& pairs)
{
    double worst = 0.0;
    for (const auto& [x1, x2] : pairs) {
        const double joint = m(x1 * x2);
        const double r = std::abs(m(x1) * m(x2) - joint) / (1.0 + std::abs(joint));
        if (!std::isfinite(r)) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, r);
    }
    return worst;
}

SignumMap SignumMap::constant(int sign)
{
    if (sign != 1 && sign != -1) {
        throw std::domain_error("signum map must be +1 or -1");
    }
    return SignumMap([sign](const Eigen::Ref<const Eigen::VectorXd>&) { return sign; },
                     sign > 0 ? "+1" : "-1");
}

int SignumMap::operator()(const Eigen::Ref<const Eigen::VectorXd>& point) const
{
    const int s = fn_(point);
    if (s != 1 && s != -1) {
        throw std::domain_error("signum map '" + name_ + "' returned " + std::to_string(s));
    }
    return s;
}

double evaluate(const SolutionModel& model, const Eigen::Ref<const Eigen::VectorXd>& point)
{
    if (point.size() != static_cast<Eigen::Index>(model.arity)) {
        throw ArityMismatch("model has arity " + to_string(model.arity) + ", point has " +
                            std::to_string(point.size()) + " components");
    }
    if (!point.allFinite()) {
        throw NonFiniteInput("evaluate: point must be finite");
    }
    return model.sigma(point) * model.m(point.norm());
}

RealFn2 as_function_two(const SolutionModel& model)
{
    if (model.arity != Arity::Two) throw ArityMismatch("as_function_two: model arity is 4");
    return [model](const RealVec2& p) { return evaluate(model, p); };
}

RealFn4 as_function_four(const SolutionModel& model)
{
    if (model.arity != Arity::Four) throw ArityMismatch("as_function_four: model arity is 2");
    return [model](const RealVec4& p) { return evaluate(model, p); };
}

namespace {

struct ResidualAcc {
    double max_abs = -1.0;
    double max_rel = 0.0;
    std::vector<double> worst_point;
    std::size_t nonfinite = 0;
};

ResidualAcc fold_residuals(ResidualAcc a, ResidualAcc b)
{
    if (b.max_abs > a.max_abs) {
        a.max_abs = b.max_abs;
        a.worst_point = std::move(b.worst_point);
    }
    a.max_rel = std::max(a.max_rel, b.max_rel);
    a.nonfinite += b.nonfinite;
    return a;
}

ResidualAcc single_residual(double lhs, double rhs, const double* point, std::size_t n)
{
    ResidualAcc acc;
    acc.worst_point.assign(point, point + n);
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        acc.max_abs = std::numeric_limits<double>::infinity();
        acc.max_rel = std::numeric_limits<double>::infinity();
        acc.nonfinite = 1;
        return acc;
    }
    acc.max_abs = std::abs(lhs - rhs);
    acc.max_rel = acc.max_abs / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
    return acc;
}

VerificationReport finish(Arity arity, const Sampler<double>& sampler, double tol, ResidualAcc acc)
{
    VerificationReport r;
    r.arity = arity;
    r.sample_count = sampler.count;
    r.seed = sampler.seed;
    r.tol = tol;
    r.max_abs_residual = std::max(0.0, acc.max_abs);
    r.max_rel_residual = acc.max_rel;
    r.worst_point = std::move(acc.worst_point);
    r.nonfinite_count = acc.nonfinite;
    r.pass = acc.nonfinite == 0 && r.max_rel_residual <= tol;
    return r;
}

} // namespace

VerificationReport verify_equation_two(const RealFn2& f, const Sampler<double>& sampler, double tol,
                                       unsigned threads)
{
    auto acc = indexed_reduce(
        sampler.count, threads, ResidualAcc{},
        [&](std::size_t i) {
            const Eigen::Vector4d t = sampler.tuple<4>(i);
            const RealVec2 p1 = t.head<2>();
            const RealVec2 p2 = t.tail<2>();
            return single_residual(f(p1) * f(p2), f(compose_two(p1, p2)), t.data(), 4);
        },
        fold_residuals);
    return finish(Arity::Two, sampler, tol, std::move(acc));
}

VerificationReport verify_equation_four(const RealFn4& f, const Sampler<double>& sampler, double tol,
                                        unsigned threads)
{
    auto acc = indexed_reduce(
        sampler.count, threads, ResidualAcc{},
        [&](std::size_t i) {
            const Eigen::Matrix<double, 8, 1> t = sampler.tuple<8>(i);
            const RealVec4 q1 = t.head<4>();
            const RealVec4 q2 = t.tail<4>();
            return single_residual(f(q1) * f(q2), f(compose_four(q1, q2)), t.data(), 8);
        },
        fold_residuals);
    return finish(Arity::Four, sampler, tol, std::move(acc));
}

std::vector<double> default_ladder()
{
    std::vector<double> ladder;
    for (int k = -4; k <= 6; ++k) {
        ladder.push_back(-std::ldexp(1.0, k));
        ladder.push_back(std::ldexp(1.0, k));
    }
    std::sort(ladder.begin(), ladder.end());
    return ladder;
}

namespace {

std::vector<double> grid_values(const std::vector<double>& ladder)
{
    std::vector<double> values = ladder;
    values.push_back(0.0);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

template <typename Fn>
StructureReport extract(const Fn& f, int arity, const std::vector<Eigen::VectorXd>& points,
                        const std::vector<double>& values, double tol)
{
    StructureReport report;
    auto on_axis = [arity](double x) {
        Eigen::VectorXd p = Eigen::VectorXd::Zero(arity);
        p(0) = x;
        return p;
    };
    for (double x : values) {
        report.m_table.push_back({x, f(on_axis(x))});
    }

    auto& diag = report.diagnostics;
    for (const auto& p : points) {
        SigmaEntry e{p, p.norm(), 0.0, 1.0, false, false};
        e.m_at_norm = f(on_axis(e.norm));
        const double fp = f(p);
        ++diag.probes;
        if (!std::isfinite(fp) || !std::isfinite(e.m_at_norm)) {
            ++diag.nonfinite;
            e.violation = true;
        } else if (std::abs(e.m_at_norm) > tol) {
            e.defined = true;
            e.sigma = fp / e.m_at_norm;
            const double dev = std::abs(std::abs(e.sigma) - 1.0);
            diag.max_sigma_deviation = std::max(diag.max_sigma_deviation, dev);
            e.violation = dev > tol;
        } else {
            ++diag.undefined_sigma;
            // sigma * m(|p|) = 0 forces f(p) = 0 here.
            e.violation = std::abs(fp) > tol;
        }
        if (e.violation && std::isfinite(fp) && std::isfinite(e.m_at_norm)) {
            ++diag.sigma_violations;
        }
        report.sigma_table.push_back(std::move(e));
    }
    return report;
}

void append_random(std::vector<Eigen::VectorXd>& points, const ProbeSet& probe, int arity)
{
    const auto sampler = box_sampler(probe.lo, probe.hi, probe.random_points, probe.seed);
    for (std::size_t i = 0; i < probe.random_points; ++i) {
        if (arity == 2) {
            points.emplace_back(sampler.tuple<2>(i));
        } else {
            points.emplace_back(sampler.tuple<4>(i));
        }
    }
}

} // namespace

StructureReport extract_structure_two(const RealFn2& f, const ProbeSet& probe, double tol)
{
    const auto values = grid_values(probe.ladder);
    std::vector<Eigen::VectorXd> points;
    for (double u : values) {
        for (double v : values) {
            points.emplace_back(Eigen::Vector2d(u, v));
        }
    }
    append_random(points, probe, 2);
    auto fx = [&f](const Eigen::VectorXd& p) { return f(RealVec2(p(0), p(1))); };
    return extract(fx, 2, points, values, tol);
}

StructureReport extract_structure_four(const RealFn4& f, const ProbeSet& probe, double tol)
{
    const auto values = grid_values(probe.ladder);
    std::set<std::vector<double>> seen;
    std::vector<Eigen::VectorXd> points;
    auto add = [&](const Eigen::Vector4d& p) {
        if (seen.insert({p(0), p(1), p(2), p(3)}).second) points.emplace_back(p);
    };
    // every point with at most two nonzero coordinates drawn from the grid,
    // plus the diagonal
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (double s : values) {
                for (double t : values) {
                    Eigen::Vector4d p = Eigen::Vector4d::Zero();
                    p(i) = s;
                    p(j) = t;
                    add(p);
                }
            }
        }
    }
    for (double t : values) {
        add(Eigen::Vector4d::Constant(t));
    }
    append_random(points, probe, 4);
    auto fx = [&f](const Eigen::VectorXd& p) { return f(RealVec4(p(0), p(1), p(2), p(3))); };
    return extract(fx, 4, points, values, tol);
}

} // namespace sosq
