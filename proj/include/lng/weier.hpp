#pragma once

// Weierstrass p, p', zeta, sigma and sigma-tilde over a lattice, evaluated
// from theta q-series on the reduced basis.

#include "lng/lattice.hpp"

namespace lng {

struct NumComplex {
    cplx value;
    double err = 0.0;
};

class EvalContext {
public:
    explicit EvalContext(Lattice L, double target_tol = 1e-12);

    const Lattice& lattice() const { return L_; }
    double target_tol() const { return tol_; }
    cplx nome() const { return q2_; }
    cplx g2() const { return g2_; }
    cplx g3() const { return g3_; }
    // 2 zeta(w/2) for the lattice's own generators w1, w2
    cplx eta1() const { return eta1_; }
    cplx eta2() const { return eta2_; }
    // sign s with eta1 w2 - eta2 w1 = 2 pi i s
    int legendre_sign() const;

    NumComplex eta(long long m, long long n) const;
    // quasi-period of an arbitrary lattice element given numerically
    cplx eta_of(cplx lambda) const;

    NumComplex wp(cplx u) const;
    NumComplex wp_prime(cplx u) const;
    NumComplex zeta(cplx u) const;
    NumComplex sigma(cplx u) const;
    NumComplex sigma_tilde(cplx xi, cplx u) const;

    double pole_guard() const { return 1e-9 * std::abs(L_.w1()); }
    // distance from u to the nearest lattice point
    double lattice_distance(cplx u) const;

private:
    struct Reduced {
        cplx r;        // u - lambda, centered in the reduced cell
        long long m, n;  // lambda = m A + n B
    };
    Reduced reduce(cplx u) const;
    // log-derivative of theta_1 at v and its truncation error
    NumComplex theta_logderiv(cplx v) const;
    // theta_1(v) / theta_1'(0)
    NumComplex theta_ratio(cplx v) const;
    // log sigma(u) = log(sign * A/pi * ratio) + expo, kept apart to avoid overflow
    void sigma_parts(cplx u, cplx& mant, cplx& expo, double& rel_err) const;
    void check_pole(cplx u) const;

    Lattice L_;
    double tol_;
    cplx A_, B_, tau_, q2_, qh_;
    cplx eta_a_, eta_b_, eta1_, eta2_;
    cplx g2_, g3_;
};

}  // namespace lng
