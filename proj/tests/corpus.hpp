#pragma once

// Deterministic random corpora shared by the unit and acceptance suites.
// Everything is seeded explicitly so failures reproduce bit-for-bit.

#include "grcone/bundle.hpp"
#include "grcone/certificate.hpp"

#include <random>
#include <vector>

namespace grcone::testing {

inline SplitBundle random_split(std::mt19937_64& rng, int min_rank = 2, int max_rank = 8,
                                int lo = -10, int hi = 10) {
    std::uniform_int_distribution<int> rank_dist(min_rank, max_rank);
    std::uniform_int_distribution<int> exp_dist(lo, hi);
    const int n = rank_dist(rng);
    std::vector<Int> exponents;
    exponents.reserve(n);
    for (int i = 0; i < n; ++i)
        exponents.emplace_back(exp_dist(rng));
    return SplitBundle(std::move(exponents));
}

// Strong HN data with strictly decreasing slopes: integer parts descend by
// at least one, so the fractional remainders can never reorder them.
inline StrongHNData random_strong(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> p_dist(0, 2);
    std::uniform_int_distribution<int> delta_dist(0, 3);
    std::uniform_int_distribution<int> count_dist(1, 4);
    std::uniform_int_distribution<int> rank_dist(1, 3);
    std::uniform_int_distribution<int> gap_dist(1, 4);
    std::uniform_int_distribution<int> start_dist(-6, 6);

    const int primes[] = {2, 3, 5};
    const Int p = primes[p_dist(rng)];
    const int delta = delta_dist(rng);
    const int count = count_dist(rng);

    std::vector<HNBlock> blocks;
    blocks.reserve(count);
    int whole = start_dist(rng);
    for (int i = 0; i < count; ++i) {
        const int rank = rank_dist(rng);
        std::uniform_int_distribution<int> frac_dist(0, rank - 1);
        blocks.push_back(HNBlock{rank, Int(whole) * rank + frac_dist(rng)});
        whole -= gap_dist(rng);
    }
    HNType hn(std::move(blocks));
    if (hn.total_rank() < 2)
        return random_strong(rng);
    return StrongHNData(p, delta, std::move(hn));
}

// A consistent (bundle, cover) pair: integer slopes c_i, cover exponents
// a_i = k * c_i, l degree e and cover degree e * k, so that
// l_degree * a_i == cover_degree * slope_i holds exactly per block.
struct CoverPair {
    StrongHNData data;
    CoverModel cover;
};

inline CoverPair random_cover_pair(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> p_dist(0, 2);
    std::uniform_int_distribution<int> delta_dist(0, 2);
    std::uniform_int_distribution<int> count_dist(1, 4);
    std::uniform_int_distribution<int> rank_dist(1, 3);
    std::uniform_int_distribution<int> gap_dist(1, 3);
    std::uniform_int_distribution<int> start_dist(-5, 5);
    std::uniform_int_distribution<int> scale_dist(1, 3);

    const int primes[] = {2, 3, 5};
    const Int p = primes[p_dist(rng)];
    const int delta = delta_dist(rng);
    const int count = count_dist(rng);
    const int e = scale_dist(rng);
    const int k = scale_dist(rng);

    std::vector<HNBlock> blocks;
    std::vector<Int> exponents;
    int slope = start_dist(rng);
    for (int i = 0; i < count; ++i) {
        const int rank = rank_dist(rng);
        blocks.push_back(HNBlock{rank, Int(slope) * rank});
        for (int m = 0; m < rank; ++m)
            exponents.emplace_back(Int(k) * slope);
        slope -= gap_dist(rng);
    }
    HNType hn(std::move(blocks));
    if (hn.total_rank() < 2)
        return random_cover_pair(rng);
    return CoverPair{StrongHNData(p, delta, std::move(hn)),
                     CoverModel(Int(e) * k, e, SplitBundle(std::move(exponents)))};
}

} // namespace grcone::testing
