#include "simtap/bounds.hpp"

#include <algorithm>

#include "simtap/scan.hpp"

namespace simtap {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
    if (a != b) {
        throw ArityError("support sequences differ in length (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
    }
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

// a - ubsts(a, c) and a - lbsts(a, c), per slot.
std::pair<double, double> subtract_bounds(double a, double c) {
    double minus_ub = a - std::min(a, c);
    double minus_lb = a - std::max(a + c - 1.0, 0.0);
    return {clamp_unit(minus_ub), clamp_unit(minus_lb)};
}

}  // namespace

SupportSequence ubsts(const SupportSequence& a, const SupportSequence& b) {
    require_same_length(a.size(), b.size());
    std::vector<double> values(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        values[i] = std::min(a[i], b[i]);
    }
    return SupportSequence(std::move(values));
}

SupportSequence lbsts(const SupportSequence& a, const SupportSequence& b) {
    require_same_length(a.size(), b.size());
    std::vector<double> values(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        values[i] = std::max(a[i] + b[i] - 1.0, 0.0);
    }
    return SupportSequence(std::move(values));
}

BoundedSupport pair_bounds(const SupportSequence& prefix, const SupportSequence& extension) {
    require_same_length(prefix.size(), extension.size());
    const SupportSequence c = negative_sequence(extension);
    std::vector<double> lower(prefix.size());
    std::vector<double> upper(prefix.size());
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        auto [lo, hi] = subtract_bounds(prefix[i], c[i]);
        // lo <= hi mathematically; rounding can invert by an ulp at the
        // s_i + c_i = 1 boundary, so restore the envelope ordering.
        lower[i] = std::min(lo, hi);
        upper[i] = std::max(lo, hi);
    }
    return BoundedSupport(SupportSequence(std::move(lower)), SupportSequence(std::move(upper)));
}

BoundedSupport extend_bounds(const BoundedSupport& prefix, const SupportSequence& extension) {
    require_same_length(prefix.lower().size(), extension.size());
    const SupportSequence c = negative_sequence(extension);
    std::vector<double> lower(extension.size());
    std::vector<double> upper(extension.size());
    for (std::size_t i = 0; i < extension.size(); ++i) {
        auto [q_lo_ub, q_lo_lb] = subtract_bounds(prefix.lower()[i], c[i]);
        auto [q_hi_ub, q_hi_lb] = subtract_bounds(prefix.upper()[i], c[i]);
        lower[i] = std::min({q_lo_ub, q_lo_lb, q_hi_ub, q_hi_lb});
        upper[i] = std::max({q_lo_ub, q_lo_lb, q_hi_ub, q_hi_lb});
    }
    return BoundedSupport(SupportSequence(std::move(lower)), SupportSequence(std::move(upper)));
}

}  // namespace simtap
