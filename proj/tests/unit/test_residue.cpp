#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lng/kernels.hpp"
#include "lng/residue.hpp"
#include "test_util.hpp"

using namespace lng;
using lng::testing::dist;
using lng::testing::error_code;
using lng::testing::quad;
using lng::testing::rat;

namespace {

Lattice gauss(const char* a, const char* b) { return Lattice::from_exact(rat(a), quad(-1, "0", b)); }

}  // namespace

TEST_CASE("residue of equal lattices vanishes") {
    CosetConstants k = residue_c(gauss("1", "1"), gauss("1", "1"));
    CHECK(std::abs(k.c.value) == 0.0);
    CHECK(k.rep_system.index == 1);
}

TEST_CASE("residue values against the mpmath oracle") {
    CHECK(std::abs(residue_value(gauss("1", "1"), gauss("2", "2")).value) < 1e-10);
    CHECK(std::abs(residue_value(gauss("1", "1"), gauss("3", "3")).value) < 1e-9);
    NumComplex c = residue_value(gauss("1", "1"), gauss("1", "2"));
    CHECK(dist(c.value, -3.4375929090101864) < 1e-11);
    CHECK(c.err < 1e-9);
}

TEST_CASE("the square-lattice residue equals p at the half period") {
    EvalContext sub(gauss("1", "2"));
    CHECK(dist(residue_value(gauss("1", "1"), gauss("1", "2")).value, sub.wp(cplx(0, 1)).value) < 1e-12);
}

TEST_CASE("coset identity for p at sample points") {
    Lattice sup = gauss("1", "1"), sub = gauss("1", "2");
    CosetConstants k = residue_c(sup, sub);
    EvalContext e2(sup), e1(sub);
    for (cplx u : {cplx(0.13, 0.31), cplx(-0.27, 0.44), cplx(0.61, -0.18)}) {
        cplx sum = 0;
        for (cplx a : k.rep_system.reps) sum += e1.wp(u + a).value;
        cplx want = e2.wp(u).value;
        CHECK(std::abs(sum - k.c.value - want) / std::abs(want) < 1e-9);
        cplx zs = 0;
        for (cplx a : k.rep_system.reps) zs += e1.zeta(u + a).value;
        CHECK(std::abs(zs + k.c.value * u + k.C.value - e2.zeta(u).value) / std::abs(e2.zeta(u).value) < 1e-9);
    }
}

TEST_CASE("residue does not depend on the representatives") {
    Lattice sup = Lattice::numeric(1.0, cplx(0.31, 1.13));
    Lattice sub = sup.transformed(Mat2Q{Q(2), Q(1), Q(0), Q(2)});
    CosetConstants k = residue_c(sup, sub);
    EvalContext e1(sub);
    cplx shifted = 0;
    const cplx shift = sub.point(Q(3), Q(-2));
    for (std::size_t i = 1; i < k.rep_system.reps.size(); ++i) shifted += e1.wp(k.rep_system.reps[i] + shift).value;
    CHECK(std::abs(shifted - k.c.value) < 10 * k.c.err + 1e-10);
}

TEST_CASE("generalized index") {
    Lattice L = gauss("1", "1");
    CHECK(gen_index(L, L.scaled(Q(3, 2))) == Q(9, 4));
    CHECK(gen_index(L.scaled(Q(3, 2)), L) == Q(4, 9));
    GenResidue g = gen_residue(L, L);
    CHECK(g.index == 1);
    CHECK(std::abs(g.qc.value) < 1e-15);
}

TEST_CASE("generalized residue against the mpmath oracle") {
    GenResidue g = gen_residue(gauss("1", "1"), gauss("1", "2/3"));
    CHECK(dist(g.qc.value, 1.7836495650430117) < 1e-10);
}

TEST_CASE("telescoping for scaled lattices") {
    Lattice L = gauss("1", "1");
    cplx lhs = gen_residue(L, L.scaled(Q(2, 3))).qc.value;
    cplx rhs = residue_value(L, L.scaled(Q(2))).value - residue_value(L, L.scaled(Q(3))).value;
    CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("generalized residue does not depend on the common sublattice") {
    Lattice L2 = gauss("1", "1"), L1 = gauss("1", "2/3");
    GenResidue a = gen_residue(L2, L1);
    GenResidue b = gen_residue_via(L2, L1, a.common_sub.scaled(Q(2)));
    CHECK(a.index == b.index);
    CHECK(dist(a.qc.value, b.qc.value) < 1e-8);
}

TEST_CASE("generalized residue is real on invariant lattices") {
    Lattice L = Lattice::from_exact(rat("1"), quad(-1, "1", "1"));
    GenResidue g = gen_residue(L, L.scaled(Q(3, 2)));
    CHECK(std::abs(g.qc.value.imag()) < 1e-9);
}

TEST_CASE("scaling exponent") {
    Lattice sup = gauss("1", "1"), sub = gauss("1", "2");
    const cplx a(0.7, 1.3);
    cplx c = residue_value(sup, sub).value;
    cplx ca = residue_value(sup.rescaled(a), sub.rescaled(a)).value;
    CHECK(std::abs(a * a * ca - c) < 1e-9 * std::abs(c));
}

TEST_CASE("residue errors") {
    CHECK(error_code([] { residue_c(gauss("2", "2"), gauss("1", "1")); }) == "NotContained");
    CHECK(error_code([] { gen_residue(gauss("1", "1"), Lattice::unit(quad(-3, "0", "1"))); }) == "NotCommensurable");
}
