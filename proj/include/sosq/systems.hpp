#ifndef SOSQ_SYSTEMS_HPP
#define SOSQ_SYSTEMS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "sosq/errors.hpp"
#include "sosq/identities.hpp"

/// Closed-form solvers for
///
///   2xy = u,  x^2 - y^2 = v                                   (two variables)
///
///   (x+z)(y+w) = a,  2xz - y^2 - w^2 = b,
///   (x+z)(w-y) = c,  x^2 - z^2 = d                             (four variables)
///
/// Both systems are onto: every right-hand side has a real solution. The
/// solvers return one canonical solution (every +/- resolved to +) and check it
/// by substitution before returning.
namespace sosq {

enum class TwoCase { U0_VPOS, U0_VNEG, UNZ };
enum class FourCase { A, B, C, D };

inline std::string_view to_string(TwoCase c)
{
    switch (c) {
    case TwoCase::U0_VPOS: return "U0_VPOS";
    case TwoCase::U0_VNEG: return "U0_VNEG";
    case TwoCase::UNZ: return "UNZ";
    }
    return "?";
}

inline std::string_view to_string(FourCase c)
{
    switch (c) {
    case FourCase::A: return "A";
    case FourCase::B: return "B";
    case FourCase::C: return "C";
    case FourCase::D: return "D";
    }
    return "?";
}

template <typename Scalar>
struct SolveOptions {
    Scalar tol;
    /// Inputs with |value| <= zero_eps take the "= 0" branch of the case split.
    Scalar zero_eps = 0;
};

template <typename Scalar>
SolveOptions<Scalar> default_two_options()
{
    return {Scalar(1e-9), Scalar(0)};
}

template <typename Scalar>
SolveOptions<Scalar> default_four_options()
{
    return {Scalar(1e-6), Scalar(0)};
}

template <typename Scalar>
struct SolveReport2 {
    Pair<Scalar> solution;
    TwoCase case_label;
    /// max_i |lhs_i - rhs_i| / (1 + |u| + |v|)
    Scalar residual;
    /// |x^2 + y^2 - sqrt(u^2 + v^2)| / (1 + |u| + |v|)
    Scalar norm_residual;
    Scalar tol;
};

template <typename Scalar>
struct SolveReport4 {
    Quad<Scalar> solution;
    FourCase case_label;
    Scalar residual;
    Scalar norm_residual;
    Scalar tol;
    /// Construction parameter: x = z = alpha in cases B/C, alpha = z^2 in case D.
    /// NaN in case A.
    Scalar alpha = std::numeric_limits<Scalar>::quiet_NaN();
    /// Case D only: z = -sqrt(alpha) was needed (see solve_four).
    bool negative_z = false;
};

namespace detail {

template <typename Scalar>
void require_finite(std::initializer_list<Scalar> values, const char* what)
{
    for (const Scalar& v : values) {
        if (!std::isfinite(v)) {
            throw NonFiniteInput(std::string(what) + ": input must be finite");
        }
    }
}

template <typename Scalar>
bool is_zero(Scalar v, Scalar eps)
{
    return std::abs(v) <= eps;
}

} // namespace detail

template <typename Scalar>
Scalar system_two_residual(const Pair<Scalar>& s, Scalar u, Scalar v)
{
    const Scalar x = s(0);
    const Scalar y = s(1);
    const Scalar scale = 1 + std::abs(u) + std::abs(v);
    return std::max(std::abs(2 * x * y - u), std::abs(x * x - y * y - v)) / scale;
}

template <typename Scalar>
Scalar system_two_norm_residual(const Pair<Scalar>& s, Scalar u, Scalar v)
{
    const Scalar scale = 1 + std::abs(u) + std::abs(v);
    return std::abs(s(0) * s(0) + s(1) * s(1) - std::hypot(u, v)) / scale;
}

template <typename Scalar>
Scalar system_four_residual(const Quad<Scalar>& s, const Quad<Scalar>& rhs)
{
    const Scalar x = s(0), y = s(1), z = s(2), w = s(3);
    const Scalar scale = 1 + rhs.cwiseAbs().sum();
    const Scalar r0 = std::abs((x + z) * (y + w) - rhs(0));
    const Scalar r1 = std::abs(2 * x * z - y * y - w * w - rhs(1));
    const Scalar r2 = std::abs((x + z) * (w - y) - rhs(2));
    const Scalar r3 = std::abs(x * x - z * z - rhs(3));
    return std::max({r0, r1, r2, r3}) / scale;
}

template <typename Scalar>
Scalar system_four_norm_residual(const Quad<Scalar>& s, const Quad<Scalar>& rhs)
{
    const Scalar scale = 1 + rhs.cwiseAbs().sum();
    const Scalar rhs_norm = std::hypot(std::hypot(rhs(0), rhs(1)), std::hypot(rhs(2), rhs(3)));
    return std::abs(s.squaredNorm() - rhs_norm) / scale;
}

/// Solves 2xy = u, x^2 - y^2 = v.
///
/// u = 0: (sqrt(v), 0) for v >= 0, (0, sqrt(-v)) for v < 0.
/// u != 0: x = sqrt((v + s) / 2), y = u / (2x), s = sqrt(u^2 + v^2). For v < 0
/// the sum v + s cancels, so x is taken from the equal form |u| / sqrt(2(s - v)).
template <typename Scalar>
SolveReport2<Scalar> solve_two(Scalar u, Scalar v,
                               const SolveOptions<Scalar>& opts = default_two_options<Scalar>())
{
    detail::require_finite({u, v}, "solve_two");

    Pair<Scalar> sol;
    TwoCase label;
    if (detail::is_zero(u, opts.zero_eps)) {
        if (v >= 0) {
            sol << std::sqrt(v), Scalar(0);
            label = TwoCase::U0_VPOS;
        } else {
            sol << Scalar(0), std::sqrt(-v);
            label = TwoCase::U0_VNEG;
        }
    } else {
        const Scalar s = std::hypot(u, v);
        const Scalar x = v >= 0 ? std::sqrt((v + s) / 2) : std::abs(u) / std::sqrt(2 * (s - v));
        sol << x, u / (2 * x);
        label = TwoCase::UNZ;
    }

    SolveReport2<Scalar> report{sol, label, system_two_residual(sol, u, v),
                                system_two_norm_residual(sol, u, v), opts.tol};
    const Scalar worst = std::max(report.residual, report.norm_residual);
    if (!(worst <= opts.tol)) {
        throw ResidualExceeded("solve_two: residual " + std::to_string(double(worst)) +
                                   " exceeds tolerance",
                               double(worst));
    }
    return report;
}

namespace detail {

/// Larger root of A t^2 + B t + C with A > 0 and a nonnegative discriminant,
/// without subtracting nearly equal quantities.
template <typename Scalar>
Scalar larger_quadratic_root(Scalar A, Scalar B, Scalar C)
{
    const Scalar disc = std::sqrt(std::max(Scalar(0), B * B - 4 * A * C));
    if (B < 0) {
        return (-B + disc) / (2 * A);
    }
    const Scalar denom = -B - disc;
    return denom == 0 ? Scalar(0) : 2 * C / denom;
}

template <typename Scalar>
Quad<Scalar> equal_xz_solution(Scalar a, Scalar c, Scalar alpha)
{
    const Scalar four_alpha = 4 * alpha;
    return quad_of<Scalar>(alpha, (a - c) / four_alpha, alpha, (a + c) / four_alpha);
}

} // namespace detail

/// q(alpha) for case D: 16 S alpha^2 + 8 (2 d S - b T) alpha - (T + 2 b d)^2
/// with T = a^2 + c^2 and S = T + d^2.
template <typename Scalar>
Scalar case_d_quadratic(Scalar a, Scalar b, Scalar c, Scalar d, Scalar alpha)
{
    const Scalar T = a * a + c * c;
    const Scalar S = T + d * d;
    const Scalar k = T + 2 * b * d;
    return 16 * S * alpha * alpha + 8 * (2 * d * S - b * T) * alpha - k * k;
}

/// Solves the four-variable system by the case split
///
///   A  a = c = d = 0, b <= 0:     (0, sqrt(-b/2), 0, sqrt(-b/2))
///   B  d = 0, b > 0:              x = z = alpha, alpha = sqrt(b + sqrt(a^2+b^2+c^2)) / 2
///   C  d = 0, b <= 0, (a,c) != 0: same construction as B
///   D  d != 0:                    x = sqrt(d + alpha), z = sqrt(alpha), alpha the larger
///                                 root of case_d_quadratic
///
/// with y = (a - c) / (2(x + z)), w = (a + c) / (2(x + z)) in B, C and D.
///
/// The quadratic in D is obtained after squaring, so its larger root may belong
/// to the branch z = -sqrt(alpha). Both branches are evaluated and the one that
/// satisfies the system is kept; alpha itself is unchanged.
template <typename Scalar>
SolveReport4<Scalar> solve_four(Scalar a, Scalar b, Scalar c, Scalar d,
                                const SolveOptions<Scalar>& opts = default_four_options<Scalar>())
{
    detail::require_finite({a, b, c, d}, "solve_four");
    const Quad<Scalar> rhs = quad_of(a, b, c, d);
    const Scalar eps = opts.zero_eps;

    SolveReport4<Scalar> report{};
    report.tol = opts.tol;

    if (detail::is_zero(d, eps)) {
        const bool ac_zero = detail::is_zero(a, eps) && detail::is_zero(c, eps);
        if (ac_zero && b <= 0) {
            const Scalar t = std::sqrt(-b / 2);
            report.solution = quad_of<Scalar>(0, t, 0, t);
            report.case_label = FourCase::A;
        } else {
            const Scalar r = std::hypot(a, b, c);
            Scalar alpha;
            if (b > 0) {
                alpha = std::sqrt(b + r) / 2;
                report.case_label = FourCase::B;
            } else {
                // b + r = (a^2 + c^2) / (r - b) with r - b > 0
                alpha = std::sqrt((a * a + c * c) / (r - b)) / 2;
                report.case_label = FourCase::C;
            }
            report.alpha = alpha;
            report.solution = detail::equal_xz_solution(a, c, alpha);
        }
    } else {
        const Scalar T = a * a + c * c;
        const Scalar S = T + d * d;
        const Scalar k = T + 2 * b * d;
        Scalar alpha = detail::larger_quadratic_root<Scalar>(16 * S, 8 * (2 * d * S - b * T), -k * k);
        // q(0) <= 0 and q(-d) <= 0, so the larger root is admissible up to rounding.
        alpha = std::max({alpha, Scalar(0), -d});
        report.alpha = alpha;
        report.case_label = FourCase::D;

        const Scalar x = std::sqrt(d + alpha);
        const Scalar root_alpha = std::sqrt(alpha);

        auto build = [&](bool negative_z) {
            const Scalar z = negative_z ? -root_alpha : root_alpha;
            // x - sqrt(alpha) = d / (x + sqrt(alpha)); nonzero since d != 0.
            const Scalar sum = negative_z ? d / (x + root_alpha) : x + root_alpha;
            return quad_of<Scalar>(x, (a - c) / (2 * sum), z, (a + c) / (2 * sum));
        };
        const Quad<Scalar> plus = build(false);
        const Quad<Scalar> minus = build(true);
        if (system_four_residual(minus, rhs) < system_four_residual(plus, rhs)) {
            report.solution = minus;
            report.negative_z = true;
        } else {
            report.solution = plus;
        }
    }

    report.residual = system_four_residual(report.solution, rhs);
    report.norm_residual = system_four_norm_residual(report.solution, rhs);
    const Scalar worst = std::max(report.residual, report.norm_residual);
    if (!(worst <= opts.tol)) {
        throw ResidualExceeded("solve_four: case " + std::string(to_string(report.case_label)) +
                                   " residual " + std::to_string(double(worst)) +
                                   " exceeds tolerance",
                               double(worst));
    }
    return report;
}

/// All sign flips of the canonical solution that still satisfy the two-variable
/// system within tolerance. The canonical solution comes first.
template <typename Scalar>
std::vector<Pair<Scalar>> sign_variants_two(Scalar u, Scalar v,
                                            const SolveOptions<Scalar>& opts = default_two_options<Scalar>())
{
    const Pair<Scalar> base = solve_two(u, v, opts).solution;
    std::vector<Pair<Scalar>> out;
    for (int mask = 0; mask < 4; ++mask) {
        Pair<Scalar> cand = base;
        for (int i = 0; i < 2; ++i) {
            if (mask & (1 << i)) cand(i) = -cand(i);
        }
        if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
        if (system_two_residual(cand, u, v) <= opts.tol) out.push_back(cand);
    }
    return out;
}

/// Four-variable analog of sign_variants_two over the 16 sign patterns.
template <typename Scalar>
std::vector<Quad<Scalar>> sign_variants_four(Scalar a, Scalar b, Scalar c, Scalar d,
                                             const SolveOptions<Scalar>& opts = default_four_options<Scalar>())
{
    const Quad<Scalar> base = solve_four(a, b, c, d, opts).solution;
    const Quad<Scalar> rhs = quad_of(a, b, c, d);
    std::vector<Quad<Scalar>> out;
    for (int mask = 0; mask < 16; ++mask) {
        Quad<Scalar> cand = base;
        for (int i = 0; i < 4; ++i) {
            if (mask & (1 << i)) cand(i) = -cand(i);
        }
        if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
        if (system_four_residual(cand, rhs) <= opts.tol) out.push_back(cand);
    }
    return out;
}

} // namespace sosq

#endif // SOSQ_SYSTEMS_HPP
