#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lng/harness.hpp"
#include "lng/kernels.hpp"
#include "test_util.hpp"

using namespace lng;
using lng::testing::error_code;
using lng::testing::quad;
using lng::testing::rat;

namespace {

std::string failures(const Report& r) {
    std::string s;
    for (const auto& c : r.checks)
        if (!c.pass) s += c.name + " ";
    return s;
}

}  // namespace

TEST_CASE("every suite passes with its defaults") {
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        Report r = verify(name);
        CAPTURE(failures(r));
        CHECK(r.pass());
        CHECK(r.suite == name);
        CHECK(r.seed == 1);
        CHECK(r.tol == default_tol(name));
        CHECK_FALSE(r.checks.empty());
    }
}

TEST_CASE("coset suite on an explicit pair") {
    SuiteParams p;
    p.lattice = Lattice::from_exact(rat("1"), quad(-1, "0", "1"));
    p.sub = Lattice::from_exact(rat("2"), quad(-1, "0", "2"));
    p.tol = 1e-8;
    Report r = verify("cosets1", p);
    CHECK(r.pass());
    CHECK(r.samples == 10);
}

TEST_CASE("homogeneity with a given scale") {
    SuiteParams p;
    p.lattice = Lattice::numeric(1.0, cplx(0, 1));
    p.scale = cplx(2, 1);
    CHECK(verify("homogeneity", p).pass());
}

TEST_CASE("period suite and a halved generator") {
    SuiteParams p;
    p.lattice = Lattice::numeric(1.0, cplx(0, 1));
    p.xi = 1.0;
    Report r = verify("period_g4", p);
    CHECK(r.pass());
    bool has_control = false;
    for (const auto& c : r.checks) has_control = has_control || c.above;
    CHECK(has_control);

    FamilyDescriptor d;
    d.family = Family::G4;
    d.lattice = p.lattice;
    d.xi = 1.0;
    PlaneMap f = PlaneMap::family(d);
    const Pair g = f.periods().generators[0];
    const Pair pt{cplx(0.21, 0.13), cplx(0.3, 0.4)};
    CHECK(period_residual(f, pt, g) < 1e-8);
    CHECK(period_residual(f, pt, Pair{g[0] / 2.0, g[1] / 2.0}) > 1e-3);
}

TEST_CASE("suites are deterministic and seeded") {
    SuiteParams a;
    a.seed = 7;
    Report r1 = verify("legendre", a), r2 = verify("legendre", a);
    REQUIRE(r1.checks.size() == r2.checks.size());
    for (std::size_t i = 0; i < r1.checks.size(); ++i) CHECK(r1.checks[i].residual == r2.checks[i].residual);
    CHECK(r1.seed == 7);
}

TEST_CASE("a tolerance below the achievable residual fails") {
    SuiteParams p;
    p.tol = 1e-30;
    CHECK_FALSE(verify("sigma_addition", p).pass());
}

TEST_CASE("parallel and serial runs agree") {
    const std::vector<std::string> names{"legendre", "homogeneity", "conjugation", "xi_axioms", "qc_real"};
    auto s = verify_all_serial(names), p = verify_all(names);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].suite == p[i].suite);
        CHECK(s[i].max_residual() == p[i].max_residual());
        CHECK(s[i].pass() == p[i].pass());
    }
}

TEST_CASE("unknown suites are rejected") {
    CHECK(error_code([] { verify("nope"); }) == "UnknownSuite");
    CHECK(error_code([] { verify_all({"legendre", "nope"}); }) == "UnknownSuite");
}

TEST_CASE("quadratic pair generator") {
    int related = 0;
    for (const auto& q : quadratic_pairs(3, 40)) {
        auto w = commensurable(q.w1, q.w2);
        if (q.related) {
            ++related;
            REQUIRE(w);
            CHECK(verify_witness(q.w1, q.w2, *w));
        }
        CHECK(bool(w) == bool(brute_force_commensurable(q.w1, q.w2, 10)));
    }
    CHECK(related == 20);
}

TEST_CASE("mobius and unrebase helpers invert each other") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        XiInstance x = random_xi_instance(rng);
        Witness w{Z(2), Z(1), Z(-1), Z(1)};
        ExactScalar w2 = mobius(x.omega, w);
        CHECK(verify_witness(x.omega, w2, w));
        auto mp1 = minpoly_of(x.omega);
        QVector t = unrebase_xi(x.xi, w, minpoly_of(w2));
        CHECK(rebase_xi(t, w, mp1) == x.xi);
    }
}

TEST_CASE("coset pairs cover the required indices") {
    std::set<long> idx;
    for (const auto& [sup, sub] : coset_pairs()) idx.insert(sublattice_test(sup, sub).get_si());
    CHECK(idx == std::set<long>{2, 3, 4, 9});
    CHECK(coset_pairs().size() == 6);
}
