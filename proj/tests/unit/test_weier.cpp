#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lng/kernels.hpp"
#include "lng/weier.hpp"
#include "test_util.hpp"

using namespace lng;
using lng::testing::dist;
using lng::testing::error_code;

namespace {

const double PI = std::acos(-1.0);

double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// reference values from tests/oracles/weier_oracle.py (mpmath, 50 digits)
struct Frozen {
    cplx u, wp, wpp, zeta, sigma;
};

}  // namespace

TEST_CASE("square lattice against the mpmath oracle") {
    EvalContext ctx(Lattice::numeric(1.0, cplx(0, 1)));
    CHECK(rel(ctx.g2(), cplx(189.07272012923385, 0)) < 1e-12);
    CHECK(std::abs(ctx.g3()) < 1e-10);
    CHECK(rel(ctx.eta1(), cplx(PI, 0)) < 1e-12);
    CHECK(rel(ctx.eta2(), cplx(0, -PI)) < 1e-12);
    const Frozen f{cplx(0.3, 0.2), cplx(3.3721036737358201, -5.9914186004556424),
                   cplx(12.822790453615708, 45.83888817832227), cplx(2.3378955219576281, -1.6806382500007898),
                   cplx(0.3046906853087618, 0.19905799361147395)};
    CHECK(rel(ctx.wp(f.u).value, f.wp) < 1e-12);
    CHECK(rel(ctx.wp_prime(f.u).value, f.wpp) < 1e-12);
    CHECK(rel(ctx.zeta(f.u).value, f.zeta) < 1e-12);
    CHECK(rel(ctx.sigma(f.u).value, f.sigma) < 1e-12);
    CHECK(rel(ctx.sigma(cplx(0.2, -0.2)).value, cplx(0.20100657155338352, -0.20100657155338352)) < 1e-12);
}

TEST_CASE("skew lattice against the mpmath oracle") {
    EvalContext ctx(Lattice::numeric(1.0, cplx(0.31, 1.13)));
    CHECK(rel(ctx.g2(), cplx(120.27210524004732, 23.782238026447295)) < 1e-12);
    CHECK(rel(ctx.g3(), cplx(330.7968946176496, -107.92345362136643)) < 1e-12);
    const cplx u(0.17, -0.41);
    CHECK(rel(ctx.wp(u).value, cplx(-4.0476630581574187, 3.0164362619199587)) < 1e-12);
    CHECK(rel(ctx.zeta(u).value, cplx(0.99574812598443286, 2.047667977133344)) < 1e-12);
    CHECK(rel(ctx.sigma(u).value, cplx(0.16364035597760855, -0.41386627564361655)) < 1e-12);
}

TEST_CASE("hexagonal lattice invariants") {
    EvalContext ctx(Lattice::numeric(1.0, cplx(0.5, std::sqrt(3.0) / 2)));
    CHECK(std::abs(ctx.g2()) < 1e-9);
    CHECK(rel(ctx.g3(), cplx(820.82443707955622, 0)) < 1e-12);
}

TEST_CASE("half period of <2, 2i>") {
    EvalContext ctx(Lattice::numeric(2.0, cplx(0, 2)));
    CHECK(std::abs(ctx.wp(cplx(1, 1)).value) < 1e-10);
}

TEST_CASE("homogeneity") {
    const cplx a(2, 1), u(0.23, 0.41);
    EvalContext c1(Lattice::numeric(1.0, cplx(0, 1))), c2(Lattice::numeric(a, a * cplx(0, 1)));
    CHECK(rel(a * a * c2.wp(a * u).value, c1.wp(u).value) < 1e-10);
    CHECK(rel(a * c2.zeta(a * u).value, c1.zeta(u).value) < 1e-10);
    CHECK(rel(c2.sigma(a * u).value / a, c1.sigma(u).value) < 1e-10);
    const cplx xi(0.37, 0.12);
    CHECK(rel(c2.sigma_tilde(a * xi, a * u).value, c1.sigma_tilde(xi, u).value) < 1e-10);
    EvalContext h(Lattice::numeric(2.0, cplx(0, 2)));
    CHECK(rel(h.wp(2.0 * u).value, 0.25 * c1.wp(u).value) < 1e-10);
}

TEST_CASE("poles") {
    EvalContext ctx(Lattice::numeric(1.0, cplx(0, 1)));
    CHECK(error_code([&] { ctx.wp(cplx(1, 1)); }) == "PoleAt");
    CHECK(error_code([&] { ctx.zeta(0.0); }) == "PoleAt");
    CHECK(std::abs(ctx.sigma(cplx(2, -1)).value) < 1e-12);
    CHECK(error_code([&] { ctx.sigma_tilde(0.3, 0.0); }) != "");
}

TEST_CASE("sigma is odd and sigma-tilde at zero is one") {
    EvalContext ctx(Lattice::numeric(1.0, cplx(0.31, 1.13)));
    for (cplx u : {cplx(0.2, 0.1), cplx(-0.7, 0.45), cplx(1.3, -2.2)}) {
        NumComplex p = ctx.sigma(u), m = ctx.sigma(-u);
        CHECK(std::abs(p.value + m.value) <= 10 * (p.err + m.err) + 1e-14 * std::abs(p.value));
        CHECK(dist(ctx.sigma_tilde(0.0, u).value, 1.0) < 1e-13);
    }
}

TEST_CASE("quasi-periods") {
    EvalContext ctx(Lattice::numeric(1.0, cplx(0, 1)));
    CHECK(std::abs(ctx.eta(0, 0).value) == 0.0);
    for (cplx u : {cplx(0.1, 0.2), cplx(0.4, -0.3), cplx(-0.25, 0.15), cplx(0.33, 0.44), cplx(-0.1, -0.45)}) {
        CHECK(rel(ctx.zeta(u + 1.0).value - ctx.zeta(u).value, ctx.eta1()) < 1e-10);
        CHECK(rel(ctx.zeta(u + cplx(1, 1)).value - ctx.zeta(u).value, ctx.eta(1, 1).value) < 1e-10);
    }
    CHECK(rel(ctx.eta(3, -2).value + ctx.eta(-1, 5).value, ctx.eta(2, 3).value) < 1e-14);
    CHECK(rel(ctx.eta_of(cplx(2, -1)), ctx.eta(2, -1).value) < 1e-12);
}

TEST_CASE("Legendre relation") {
    for (cplx w2 : {cplx(0, 1), cplx(0.31, 1.13), cplx(-0.4, 0.3), cplx(5.2, 0.7)}) {
        EvalContext ctx(Lattice::numeric(1.0, w2));
        cplx lhs = ctx.eta1() * w2 - ctx.eta2() * 1.0;
        CHECK(rel(lhs, cplx(0, 2 * PI * ctx.legendre_sign())) < 1e-9);
    }
}

TEST_CASE("finite differences") {
    EvalContext ctx(Lattice::numeric(cplx(0.9, 0.2), cplx(0.3, 1.4)));
    const double h = 1e-5 * std::abs(ctx.lattice().w1());
    for (cplx u : {cplx(0.31, 0.27), cplx(-0.2, 0.5)}) {
        cplx dz = (ctx.zeta(u + h).value - ctx.zeta(u - h).value) / (2 * h);
        CHECK(rel(dz, -ctx.wp(u).value) < 1e-6);
        cplx dl = (std::log(ctx.sigma(u + h).value) - std::log(ctx.sigma(u - h).value)) / (2 * h);
        CHECK(rel(dl, ctx.zeta(u).value) < 1e-6);
        cplx dw = (ctx.wp(u + h).value - ctx.wp(u - h).value) / (2 * h);
        CHECK(rel(dw, ctx.wp_prime(u).value) < 1e-6);
    }
}

TEST_CASE("differential equation") {
    EvalContext ctx(Lattice::numeric(1.0, cplx(0.31, 1.13)));
    const cplx u(0.21, 0.37);
    cplx p = ctx.wp(u).value, pp = ctx.wp_prime(u).value;
    CHECK(rel(pp * pp, 4.0 * p * p * p - ctx.g2() * p - ctx.g3()) < 1e-11);
}

TEST_CASE("Eisenstein sums agree with the q-series") {
    Lattice L = Lattice::numeric(1.0, cplx(0.31, 1.13));
    EvalContext ctx(L);
    const cplx u(0.17, -0.41);
    LatticeSum s = eisenstein_sum(L, u, 400), r = eisenstein_sum_serial(L, u, 400);
    CHECK(dist(s.wp, r.wp) < 1e-12);
    CHECK(dist(s.zeta, r.zeta) < 1e-12);
    CHECK(rel(s.wp, ctx.wp(u).value) < 1e-4);
    CHECK(rel(s.zeta, ctx.zeta(u).value) < 1e-4);
}

TEST_CASE("error bounds are reported") {
    EvalContext ctx(Lattice::numeric(1.0, cplx(0, 1)));
    NumComplex w = ctx.wp(cplx(0.3, 0.2));
    CHECK(w.err >= 0);
    CHECK(w.err < 1e-9);
    CHECK(error_code([] { EvalContext(Lattice::numeric(1.0, cplx(0, 1)), -1.0); }) == "BadTolerance");
}
