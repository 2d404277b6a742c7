#ifndef SOSQ_SUMSQUARES_HPP
#define SOSQ_SUMSQUARES_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sosq/bigint.hpp"
#include "sosq/identities.hpp"

/// Sums of two and four squares.
///
/// n = m^2 s with s squarefree is a sum of two squares iff no prime factor of
/// s is 3 mod 4. Decompositions are assembled from per-prime representations
/// with compose_two / compose_four, the square part m scaling every component.
namespace sosq {

struct Factorization {
    BigInt n;
    /// (prime, exponent), primes ascending
    std::vector<std::pair<BigInt, unsigned>> factors;
};

/// Trial division up to sqrt(n). Throws std::invalid_argument for n < 1.
Factorization factorize(const BigInt& n);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// True iff every prime 3 mod 4 divides n to an even power. n >= 1.
bool is_sum_of_two_squares(const BigInt& n);

/// Components are nonnegative and sorted descending.
struct TwoSquareRep {
    IntPair components;
};

struct FourSquareRep {
    IntQuad components;
};

/// Counters filled in by the decomposers.
struct DecomposeTrace {
    std::size_t prime_searches = 0;
    /// compose_two / compose_four calls made while folding prime parts
    std::size_t compositions = 0;
};

/// a^2 + b^2 = p by search over a <= sqrt(p); nullopt when none exists.
std::optional<IntPair> two_square_search(const BigInt& p);

/// a^2 + b^2 + c^2 + d^2 = p by nested descent a >= b >= c >= d. Always succeeds.
IntQuad four_square_search(const BigInt& p);

std::optional<TwoSquareRep> two_square_decompose(const BigInt& n, DecomposeTrace* trace = nullptr);

FourSquareRep four_square_decompose(const BigInt& n, DecomposeTrace* trace = nullptr);

} // namespace sosq

#endif // SOSQ_SUMSQUARES_HPP
