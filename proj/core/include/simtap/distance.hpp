#pragma once

#include <span>

#include "simtap/types.hpp"

namespace simtap {

// How ULB and LLB combine into the level >= 2 decision value. Sum is the
// default; Quadrature (sqrt(ulb^2 + llb^2)) is the variant for which the
// lower-bound property is provable.
enum class Combiner {
    Sum,
    Quadrature,
};

const char* to_string(Combiner combiner);

double euclidean(std::span<const double> a, std::span<const double> b);

inline double euclidean(const SupportSequence& a, const ReferenceSequence& b) {
    return euclidean(std::span<const double>(a.values()), std::span<const double>(b.values()));
}
inline double euclidean(const SupportSequence& a, const SupportSequence& b) {
    return euclidean(std::span<const double>(a.values()), std::span<const double>(b.values()));
}

// Euclidean distance restricted to slots where ref_i > upper_i (strict);
// 0 when no slot qualifies. A floor on the distance achievable from above.
double ulb_distance(const ReferenceSequence& ref, const SupportSequence& upper);

// Euclidean distance restricted to slots where ref_i < lower_i (strict);
// the symmetric floor from below.
double llb_distance(const ReferenceSequence& ref, const SupportSequence& lower);

// Combines the two floors into the decision value; inputs must be >= 0.
double lb_distance(double ulb, double llb, Combiner combiner);

}  // namespace simtap
