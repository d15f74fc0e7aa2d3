#include "bezout/random_forms.hpp"

#include <limits>

#include "bezout/errors.hpp"
#include "bezout/transvectant.hpp"

namespace bezout {

std::uint64_t FormSampler::below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t r;
    do {
        r = rng_();
    } while (r >= limit);
    return r % n;
}

long long FormSampler::integer(long long lo, long long hi) {
    if (hi < lo) throw DomainError("FormSampler::integer: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(below(span));
}

BinaryForm FormSampler::form(int order, bool ensure_nonzero) {
    if (order < 0) throw DomainError("FormSampler::form: negative order");
    for (;;) {
        std::vector<Rational> c(order + 1);
        for (auto& x : c) x = coeff();
        BinaryForm f(order, std::move(c));
        if (!ensure_nonzero || !f.is_zero()) return f;
    }
}

Pencil FormSampler::pencil(int d) {
    for (;;) {
        BinaryForm a = form(d), b = form(d);
        if (!transvectant(a, b, 1).is_zero()) return Pencil(std::move(a), std::move(b));
    }
}

} // namespace bezout
