#pragma once

// Independent oracles: direct Eisenstein lattice sums for p and zeta, and an
// exhaustive commensurability search. Each kernel has a serial reference and
// an OpenMP version that must agree with it.

#include <optional>

#include "lng/lattice.hpp"

namespace lng {

struct LatticeSum {
    cplx wp, zeta;
};

// symmetric square sums over |m|, |n| <= N on the reduced basis; error O(1/N^2)
LatticeSum eisenstein_sum_serial(const Lattice& L, cplx u, int N);
LatticeSum eisenstein_sum(const Lattice& L, cplx u, int N);

// Exhaustive search over |a|,|b|,|c|,|d| <= bound, ad - bc != 0, for
// omega2 (c omega1 + d) = a omega1 + b. The first hit in the order
// (max |entry|, then c, d, a, b ranked 0, 1, -1, 2, -2, ...) is returned.
std::optional<Witness> brute_force_commensurable_serial(const ExactScalar& omega1, const ExactScalar& omega2,
                                                        int bound);
std::optional<Witness> brute_force_commensurable(const ExactScalar& omega1, const ExactScalar& omega2, int bound);

int kernel_threads();

}  // namespace lng
