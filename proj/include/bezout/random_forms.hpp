#pragma once

#include <cstdint>
#include <random>

#include "bezout/bezoutiant.hpp"
#include "bezout/binary_form.hpp"
#include "bezout/rational.hpp"

namespace bezout {

// Deterministic, platform-independent sampler of small-coefficient forms:
// mt19937_64 with explicit rejection mapping, coefficients uniform in [-9,9].
class FormSampler {
public:
    explicit FormSampler(std::uint64_t seed) : seed_(seed), rng_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Uniform integer in [lo, hi].
    long long integer(long long lo, long long hi);

    Rational coeff() { return rat(integer(-9, 9)); }

    BinaryForm form(int order, bool ensure_nonzero = true);

    // Independent pair, i.e. (A,B)_1 != 0.
    Pencil pencil(int d);

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;

    std::uint64_t below(std::uint64_t n);
};

} // namespace bezout
