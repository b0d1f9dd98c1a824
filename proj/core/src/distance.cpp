#include "simtap/distance.hpp"

#include <cassert>
#include <cmath>

namespace simtap {

const char* to_string(Combiner combiner) {
    switch (combiner) {
        case Combiner::Sum: return "sum";
        case Combiner::Quadrature: return "quad";
    }
    return "unknown";
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ArityError("euclidean: sequences differ in length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double ulb_distance(const ReferenceSequence& ref, const SupportSequence& upper) {
    if (ref.size() != upper.size()) {
        throw ArityError("ulb_distance: sequences differ in length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        if (ref[i] > upper[i]) {
            const double d = ref[i] - upper[i];
            sum += d * d;
        }
    }
    return std::sqrt(sum);
}

double llb_distance(const ReferenceSequence& ref, const SupportSequence& lower) {
    if (ref.size() != lower.size()) {
        throw ArityError("llb_distance: sequences differ in length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        if (ref[i] < lower[i]) {
            const double d = lower[i] - ref[i];
            sum += d * d;
        }
    }
    return std::sqrt(sum);
}

double lb_distance(double ulb, double llb, Combiner combiner) {
    assert(ulb >= 0.0 && llb >= 0.0);
    switch (combiner) {
        case Combiner::Sum: return ulb + llb;
        case Combiner::Quadrature: return std::hypot(ulb, llb);
    }
    return ulb + llb;
}

}  // namespace simtap
