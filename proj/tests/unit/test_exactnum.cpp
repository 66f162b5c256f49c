#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lng/qvector.hpp"
#include "test_util.hpp"

using namespace lng;
using lng::testing::error_code;

TEST_CASE("rationals parse to canonical form") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2/2")) == "-1");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(error_code([] { parse_rational("x"); }) == "BadRational");
    CHECK(error_code([] { parse_rational("1/0"); }) == "DivisionByZero");
    CHECK(error_code([] { parse_rational(""); }) == "BadRational");
}

TEST_CASE("squarefree") {
    CHECK(is_squarefree(-1));
    CHECK(is_squarefree(-3));
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(-4));
    CHECK_FALSE(is_squarefree(18));
    CHECK_FALSE(is_squarefree(0));
}

TEST_CASE("quadratic arithmetic examples") {
    QuadElem a(-1, Q(1), Q(1)), b(-1, Q(1), Q(-1));
    CHECK(a * b == QuadElem(-1, Q(2), Q(0)));
    CHECK(QuadElem(-1, Q(1), Q(0)) / QuadElem(-1, Q(0), Q(1)) == QuadElem(-1, Q(0), Q(-1)));
    QuadElem c(-5, Q(1, 2), Q(3));
    CHECK(conj(c) == QuadElem(-5, Q(1, 2), Q(-3)));
    CHECK(quad_arith(QuadOp::conj, c, c) == conj(c));
}

TEST_CASE("quadratic arithmetic invariants") {
    QuadElem a(-7, Q(2, 3), Q(-5, 4)), b(-7, Q(-1, 6), Q(7, 2));
    CHECK((a + b) - b == a);
    CHECK(conj(conj(a)) == a);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK((a / b) * b == a);
    CHECK(a.norm() == (a * conj(a)).x);
    QuadElem r(3, Q(1), Q(1));
    CHECK(r.is_real());
    CHECK_FALSE(a.is_real());
    CHECK(std::abs(r.value() - cplx(1 + std::sqrt(3.0), 0)) < 1e-15);
    CHECK(std::abs(a.value() - cplx(2.0 / 3, -1.25 * std::sqrt(7.0))) < 1e-14);
}

TEST_CASE("quadratic arithmetic errors") {
    CHECK(error_code([] { QuadElem(-1, Q(1), Q(0)) + QuadElem(-3, Q(1), Q(0)); }) == "MismatchedField");
    CHECK(error_code([] { QuadElem(-1, Q(1), Q(0)) / QuadElem(-1, Q(0), Q(0)); }) == "DivisionByZero");
    CHECK(error_code([] { QuadElem(-4, Q(1), Q(1)); }) == "BadField");
    CHECK(error_code([] { QuadElem(1, Q(1), Q(1)); }) == "BadField");
}

TEST_CASE("canonical storage") {
    QuadElem a(-1, Q(2, 4), Q(-3, -6));
    CHECK(to_string(a.x) == "1/2");
    CHECK(to_string(a.y) == "1/2");
}

TEST_CASE("mobius composition") {
    Mat2Q M{Q(1), Q(1), Q(1), Q(2)}, D{Q(2), Q(0), Q(0), Q(1)}, I{};
    CHECK(mobius_compose(M, I) == M);
    CHECK(mobius_compose(M, D) == (Mat2Q{Q(2), Q(1), Q(2), Q(2)}));
    Mat2Q P = mobius_compose(M, M.adj());
    CHECK(P == (Mat2Q{M.det(), Q(0), Q(0), M.det()}));
    Mat2Q N{Q(3), Q(-1), Q(1, 2), Q(5)};
    CHECK(mobius_compose(mobius_compose(M, D), N) == mobius_compose(M, mobius_compose(D, N)));
    CHECK(error_code([&] { mobius_compose(M, Mat2Q{Q(1), Q(2), Q(2), Q(4)}); }) == "SingularMatrix");
    cplx t(0.3, 1.1);
    CHECK(std::abs(mobius_compose(M, N).apply(t) - M.apply(N.apply(t))) < 1e-14);
}

TEST_CASE("field of omega") {
    CHECK(FieldSpec::of(ExactScalar(QuadElem(-1, Q(0), Q(1)))).name() == "Q(sqrt(-1))");
    CHECK(FieldSpec::of(ExactScalar(SymbolicOmega("t", Mat2Q{}, cplx(0.2, 1.3)))).name() == "Q");
    CHECK(FieldSpec::of(ExactScalar(QuadElem(-3, Q(1, 2), Q(1, 2)))).kind == FieldSpec::Kind::Quadratic);
}

TEST_CASE("symbolic omega") {
    SymbolicOmega s("t", Mat2Q{Q(2), Q(1), Q(0), Q(1)}, cplx(0.5, 1.0));
    CHECK(std::abs(s.value() - cplx(2.0, 2.0)) < 1e-15);
    CHECK(error_code([] { SymbolicOmega("t", Mat2Q{Q(1), Q(1), Q(1), Q(1)}, cplx(0.5, 1.0)); }) != "");
}

TEST_CASE("rank over Q") {
    CHECK(rank_q({{Q(1), Q(2)}, {Q(2), Q(4)}}) == 1);
    CHECK(rank_q({{Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(1)}}) == 2);
    CHECK(rank_q({{Q(0), Q(0)}}) == 0);
}

TEST_CASE("linear independence examples") {
    const ExactScalar one(Q(1)), two(Q(2)), i(QuadElem(-1, Q(0), Q(1)));
    CHECK(linear_independent(FieldSpec::rationals(), {one, i}));
    CHECK_FALSE(linear_independent(FieldSpec::quadratic(-1), {one, i}));
    CHECK_FALSE(linear_independent(FieldSpec::rationals(), {one, two}));
}

TEST_CASE("linear independence is stable under permutation and rescaling") {
    const ExactScalar one(Q(1)), i(QuadElem(-1, Q(0), Q(1))), w(QuadElem(-1, Q(3), Q(2)));
    const ExactScalar i3(QuadElem(-1, Q(0), Q(-3, 7)));
    CHECK(linear_independent(FieldSpec::rationals(), {i, one}) == linear_independent(FieldSpec::rationals(), {one, i}));
    CHECK(linear_independent(FieldSpec::rationals(), {one, i3}));
    CHECK_FALSE(linear_independent(FieldSpec::rationals(), {one, i, w}));
    CHECK_FALSE(linear_independent(FieldSpec::rationals(), {w, one, i}));
}

TEST_CASE("mixed representations are rejected") {
    const ExactScalar a(QuadElem(-1, Q(0), Q(1))), b(QuadElem(-3, Q(0), Q(1)));
    CHECK(error_code([&] { linear_independent(FieldSpec::rationals(), {a, b}); }) == "IncompatibleRepresentations");
    const ExactScalar s(SymbolicOmega("t", Mat2Q{}, cplx(0.1, 1))), r(SymbolicOmega("r", Mat2Q{}, cplx(0.1, 2)));
    CHECK(error_code([&] { linear_independent(FieldSpec::rationals(), {s, r}); }) == "IncompatibleRepresentations");
}

TEST_CASE("qvector arithmetic") {
    MinPoly mp{Q(0), Q(-1)};  // omega^2 = -1
    QVector xi = QVector::symbol("s", mp);
    QVector v = xi.times(Q(1), Q(1)) + QVector::rational(Q(1, 2), mp);
    CHECK(v.coord("s") == Q(1));
    CHECK(v.coord("omega*s") == Q(1));
    CHECK(v.coord("1") == Q(1, 2));
    CHECK(v.times(Q(0), Q(1)).times(Q(0), Q(1)) == v.scaled(Q(-1)));
    CHECK((v - v).is_zero());
    std::map<std::string, cplx> anchors{{"s", cplx(0.7, 0.2)}};
    cplx om(0, 1);
    CHECK(std::abs(v.value(om, anchors) - ((1.0 + om) * cplx(0.7, 0.2) + 0.5)) < 1e-15);
}

TEST_CASE("rational solver") {
    auto x = solve_q({{Q(1), Q(1)}, {Q(1), Q(-1)}}, {Q(3), Q(1)});
    REQUIRE(x);
    CHECK((*x)[0] == Q(2));
    CHECK((*x)[1] == Q(1));
    CHECK_FALSE(solve_q({{Q(1), Q(1)}, {Q(2), Q(2)}}, {Q(1), Q(3)}));
}
