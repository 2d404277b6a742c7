#ifndef SOSQ_IDENTITIES_HPP
#define SOSQ_IDENTITIES_HPP

#include <Eigen/Core>

#include "sosq/bigint.hpp"

/// Composition laws for sums of two and four squares.
///
/// The laws are written once as templates over the scalar and are used both
/// with exact integers (number theory) and with doubles (functional-equation
/// sweeps). All of them are pure.
namespace sosq {

template <typename Scalar>
using Pair = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Quad = Eigen::Matrix<Scalar, 4, 1>;

using IntPair = Pair<BigInt>;
using IntQuad = Quad<BigInt>;
using RealVec2 = Eigen::Vector2d;
using RealVec4 = Eigen::Vector4d;

template <typename Scalar>
Pair<Scalar> pair_of(Scalar x, Scalar y)
{
    Pair<Scalar> p;
    p << std::move(x), std::move(y);
    return p;
}

template <typename Scalar>
Quad<Scalar> quad_of(Scalar x, Scalar y, Scalar z, Scalar w)
{
    Quad<Scalar> q;
    q << std::move(x), std::move(y), std::move(z), std::move(w);
    return q;
}

template <typename Scalar>
Scalar norm2(const Pair<Scalar>& p)
{
    return p(0) * p(0) + p(1) * p(1);
}

template <typename Scalar>
Scalar norm4(const Quad<Scalar>& q)
{
    return q(0) * q(0) + q(1) * q(1) + q(2) * q(2) + q(3) * q(3);
}

/// (x1 x2 + y1 y2, x1 y2 - y1 x2); norm2 of the result is norm2(p1) * norm2(p2).
/// (1, 0) is a left identity only: compose_two((x, y), (1, 0)) = (x, -y).
template <typename Scalar>
Pair<Scalar> compose_two(const Pair<Scalar>& p1, const Pair<Scalar>& p2)
{
    const Scalar& x1 = p1(0);
    const Scalar& y1 = p1(1);
    const Scalar& x2 = p2(0);
    const Scalar& y2 = p2(1);
    return pair_of<Scalar>(x1 * x2 + y1 * y2, x1 * y2 - y1 * x2);
}

/// Four-square law, components in the order
///   x1x2 + y1y2 + z1z2 + w1w2,
///   x1y2 - y1x2 + z1w2 - w1z2,
///   x1z2 - y1w2 - z1x2 + w1y2,
///   x1w2 + y1z2 - z1y2 - w1x2.
/// The antisymmetric terms are grouped in cancelling pairs so that composing a
/// floating-point point with itself yields exact zeros in the last three slots.
template <typename Scalar>
Quad<Scalar> compose_four(const Quad<Scalar>& q1, const Quad<Scalar>& q2)
{
    const Scalar& x1 = q1(0);
    const Scalar& y1 = q1(1);
    const Scalar& z1 = q1(2);
    const Scalar& w1 = q1(3);
    const Scalar& x2 = q2(0);
    const Scalar& y2 = q2(1);
    const Scalar& z2 = q2(2);
    const Scalar& w2 = q2(3);
    return quad_of<Scalar>(x1 * x2 + y1 * y2 + z1 * z2 + w1 * w2,
                             (x1 * y2 - y1 * x2) + (z1 * w2 - w1 * z2),
                             (x1 * z2 - z1 * x2) + (w1 * y2 - y1 * w2),
                             (x1 * w2 - w1 * x2) + (y1 * z2 - z1 * y2));
}

} // namespace sosq

#endif // SOSQ_IDENTITIES_HPP
