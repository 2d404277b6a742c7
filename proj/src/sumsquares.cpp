#include "sosq/sumsquares.hpp"

#include <algorithm>
#include <stdexcept>

namespace sosq {

namespace {

void require_positive(const BigInt& n, const char* what)
{
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": n must be >= 1, got " + n.str());
    }
}

template <int N>
Eigen::Matrix<BigInt, N, 1> abs_sorted_descending(Eigen::Matrix<BigInt, N, 1> v)
{
    for (int k = 0; k < N; ++k) {
        v(k) = boost::multiprecision::abs(v(k));
    }
    std::sort(v.data(), v.data() + N, std::greater<BigInt>());
    return v;
}

BigInt pow_int(const BigInt& base, unsigned exp)
{
    return boost::multiprecision::pow(base, exp);
}

} // namespace

BigInt isqrt(const BigInt& n)
{
    if (n < 0) throw std::invalid_argument("isqrt of a negative number");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n)
{
    if (n < 0) return false;
    const BigInt r = isqrt(n);
    return r * r == n;
}

Factorization factorize(const BigInt& n)
{
    require_positive(n, "factorize");
    Factorization out{n, {}};
    BigInt rest = n;

    auto strip = [&](const BigInt& p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(p, e);
    };

    strip(2);
    for (BigInt p = 3; p * p <= rest; p += 2) {
        strip(p);
    }
    if (rest > 1) out.factors.emplace_back(rest, 1);
    return out;
}

bool is_sum_of_two_squares(const BigInt& n)
{
    require_positive(n, "is_sum_of_two_squares");
    for (const auto& [p, e] : factorize(n).factors) {
        if (p % 4 == 3 && e % 2 == 1) return false;
    }
    return true;
}

std::optional<IntPair> two_square_search(const BigInt& p)
{
    const BigInt limit = isqrt(p);
    for (BigInt a = 0; a <= limit; ++a) {
        const BigInt rest = p - a * a;
        const BigInt b = isqrt(rest);
        if (b * b == rest) return pair_of<BigInt>(std::max(a, b), std::min(a, b));
    }
    return std::nullopt;
}

IntQuad four_square_search(const BigInt& p)
{
    if (p < 0) throw std::invalid_argument("four_square_search of a negative number");
    for (BigInt a = isqrt(p); a >= 0; --a) {
        const BigInt r1 = p - a * a;
        for (BigInt b = std::min(a, isqrt(r1)); b >= 0; --b) {
            const BigInt r2 = r1 - b * b;
            // c >= d means c^2 >= r2 / 2
            for (BigInt c = std::min(b, isqrt(r2)); 2 * c * c >= r2; --c) {
                const BigInt r3 = r2 - c * c;
                const BigInt d = isqrt(r3);
                if (d * d == r3) return quad_of<BigInt>(a, b, c, d);
                if (c == 0) break;
            }
        }
    }
    throw std::logic_error("four_square_search: no representation found for " + p.str());
}

std::optional<TwoSquareRep> two_square_decompose(const BigInt& n, DecomposeTrace* trace)
{
    require_positive(n, "two_square_decompose");
    DecomposeTrace local;
    DecomposeTrace& t = trace ? *trace : local;

    // n = m^2 * s: each prime contributes p^(e/2) to m and, for odd e, p to s.
    BigInt scale = 1;
    IntPair acc = pair_of<BigInt>(1, 0);
    for (const auto& [p, e] : factorize(n).factors) {
        scale *= pow_int(p, e / 2);
        if (e % 2 == 0) continue;
        if (p % 4 == 3) return std::nullopt;
        ++t.prime_searches;
        const auto rep = two_square_search(p);
        if (!rep) throw std::logic_error("no two-square representation for prime " + p.str());
        acc = compose_two(acc, *rep);
        ++t.compositions;
    }
    acc *= scale;
    return TwoSquareRep{abs_sorted_descending<2>(acc)};
}

FourSquareRep four_square_decompose(const BigInt& n, DecomposeTrace* trace)
{
    if (n < 0) throw std::invalid_argument("four_square_decompose: n must be >= 0");
    if (n == 0) return FourSquareRep{quad_of<BigInt>(0, 0, 0, 0)};
    DecomposeTrace local;
    DecomposeTrace& t = trace ? *trace : local;

    BigInt scale = 1;
    IntQuad acc = quad_of<BigInt>(1, 0, 0, 0);
    for (const auto& [p, e] : factorize(n).factors) {
        scale *= pow_int(p, e / 2);
        if (e % 2 == 0) continue;
        ++t.prime_searches;
        acc = compose_four(acc, four_square_search(p));
        ++t.compositions;
    }
    acc *= scale;
    return FourSquareRep{abs_sorted_descending<4>(acc)};
}

} // namespace sosq
