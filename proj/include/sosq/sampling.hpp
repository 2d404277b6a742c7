#ifndef SOSQ_SAMPLING_HPP
#define SOSQ_SAMPLING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <thread>
#include <vector>

#include <Eigen/Core>

/// Seeded sampling where draw i depends only on (seed, i), so a sweep can be
/// split across threads and still produce the same report as a serial run.
namespace sosq {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t index)
{
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

/// Draws field elements coordinate-wise. `draw` is called N times on the
/// generator belonging to sample i to build an N-tuple.
template <typename Field>
struct Sampler {
    std::function<Field(std::mt19937_64&)> draw;
    std::size_t count = 10000;
    std::uint64_t seed = 42;

    template <int N>
    Eigen::Matrix<Field, N, 1> tuple(std::size_t index) const
    {
        auto rng = rng_for(seed, index);
        Eigen::Matrix<Field, N, 1> out;
        for (int k = 0; k < N; ++k) {
            out(k) = draw(rng);
        }
        return out;
    }
};

/// Uniform doubles on [lo, hi).
inline Sampler<double> box_sampler(double lo, double hi, std::size_t count, std::uint64_t seed)
{
    return {[lo, hi](std::mt19937_64& rng) { return std::uniform_real_distribution<double>(lo, hi)(rng); },
            count, seed};
}

/// Uniform integers on [lo, hi], as any scalar constructible from long long.
template <typename Int>
Sampler<Int> integer_sampler(long long lo, long long hi, std::size_t count, std::uint64_t seed)
{
    return {[lo, hi](std::mt19937_64& rng) { return Int(std::uniform_int_distribution<long long>(lo, hi)(rng)); },
            count, seed};
}

/// Maps indices [0, count) through `map` and folds the results in index order.
/// `init` must be the identity of `fold`. Work is split into contiguous chunks
/// whose results are folded in chunk order, so the outcome does not depend on
/// `threads` as long as `fold` is associative.
template <typename Acc, typename Map, typename Fold>
Acc indexed_reduce(std::size_t count, unsigned threads, const Acc& init, Map map, Fold fold)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2 * threads) {
        Acc acc = init;
        for (std::size_t i = 0; i < count; ++i) {
            acc = fold(std::move(acc), map(i));
        }
        return acc;
    }

    std::vector<Acc> partial(threads, init);
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(count, t * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back([&partial, &map, &fold, t, begin, end] {
            for (std::size_t i = begin; i < end; ++i) {
                partial[t] = fold(std::move(partial[t]), map(i));
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    Acc acc = init;
    for (auto& p : partial) {
        acc = fold(std::move(acc), std::move(p));
    }
    return acc;
}

} // namespace sosq

#endif // SOSQ_SAMPLING_HPP
