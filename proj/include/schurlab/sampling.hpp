#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "schurlab/rational.hpp"

namespace schurlab {

// Deterministic stream of rational sample coordinates. Magnitudes stay in
// (0,1) so that every product of two coordinates, or of a parameter and a
// coordinate, stays away from 1; together with distinctness this keeps all
// identity denominators nonzero.
class PointSampler {
public:
    explicit PointSampler(uint64_t seed) : rng_(seed) {}

    // One value with |v| in (0,1), nonzero; sign only when allowed.
    Rational draw(bool allow_negative) {
        std::uniform_int_distribution<int> num(1, 9), den(10, 19), coin(0, 1);
        Rational v = rat(num(rng_), den(rng_));
        if (allow_negative && coin(rng_) == 1) v = -v;
        return v;
    }

    // n pairwise-distinct values avoiding the given list.
    std::vector<Rational> draw_distinct(int n, bool allow_negative,
                                        const std::vector<Rational>& avoid) {
        std::vector<Rational> out;
        int guard = 0;
        while (static_cast<int>(out.size()) < n) {
            if (++guard > 10000) throw SamplingError("cannot find distinct sample values");
            Rational v = draw(allow_negative);
            bool clash = false;
            for (const auto& w : avoid) clash = clash || w == v;
            for (const auto& w : out) clash = clash || w == v;
            if (!clash) out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

// Stable per-check substream: mixes the base seed with the check id so suite
// concurrency cannot reorder draws.
inline uint64_t derive_seed(uint64_t base_seed, const std::string& tag) {
    uint64_t h = 14695981039346656037ull ^ base_seed;
    for (unsigned char ch : tag) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    h ^= base_seed >> 32;
    h *= 1099511628211ull;
    return h;
}

}  // namespace schurlab
