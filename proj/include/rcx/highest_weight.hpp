#pragma once

#include <cstdint>
#include <optional>

#include "rcx/rigged.hpp"

namespace rcx {

// Every rigging of (ν, J) is bounded by its vacancy number shifted by λ:
// x <= p_i^(a) + ⟨h_a, λ⟩ for all rows.  Membership in the highest-weight
// model is closure of the empty configuration under f'_a inside this set.
inline bool respects_lambda_bound(const RiggedConfiguration& rc, const DominantWeight& lambda) {
    for (std::size_t a = 0; a < rc.rank(); ++a)
        for (const auto& row : rc.part(a).rows())
            if (row.rigging > rc.vacancy(a, row.length) + lambda.pairing(a)) return false;
    return true;
}

// The cutoff operator f'_a of the highest-weight model: acts as f_a unless
// the result would violate the λ-shifted rigging bound, or a is imaginary
// with λ-shifted φ equal to zero (⟨h_a, λ + wt⟩ = 0), in which case it
// returns null.
inline std::optional<RiggedConfiguration> f_lambda(const RiggedConfiguration& rc, std::size_t a,
                                                   const DominantWeight& lambda) {
    rc.datum().check_index(a);
    if (lambda.rank() != rc.rank()) fail(errc::precondition_violated, "lambda rank mismatch");
    if (!respects_lambda_bound(rc, lambda))
        fail(errc::precondition_violated,
             "input rigged configuration violates the lambda rigging bound");
    if (rc.datum().is_imaginary(a) && lambda.pairing(a) + rc.vacancy_infinity(a) == 0)
        return std::nullopt;
    RiggedConfiguration out = rc.f(a);
    if (!respects_lambda_bound(out, lambda)) return std::nullopt;
    return out;
}

// Star-involution characterization of the highest-weight members inside
// RC(∞): ε*_a <= ⟨h_a, λ⟩ for real a, and e*_a vanishes whenever ⟨h_a, λ⟩ = 0
// for imaginary a.
inline bool star_membership(const RiggedConfiguration& rc, const DominantWeight& lambda) {
    if (lambda.rank() != rc.rank()) fail(errc::precondition_violated, "lambda rank mismatch");
    for (std::size_t a = 0; a < rc.rank(); ++a) {
        if (rc.datum().is_real(a)) {
            if (rc.epsilon_star(a) > lambda.pairing(a)) return false;
        } else if (lambda.pairing(a) == 0 && rc.e_star(a).has_value()) {
            return false;
        }
    }
    return true;
}

} // namespace rcx
