#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lng/classify.hpp"
#include "lng/harness.hpp"
#include "test_util.hpp"

using namespace lng;
using lng::testing::error_code;
using lng::testing::quad;
using lng::testing::rat;

namespace {

const ExactScalar I = quad(-1, "0", "1");
const std::map<std::string, cplx> CANCH{{"s", cplx(0.2718, 0.3141)}, {"r", cplx(-0.3, 0.11)}};
const std::map<std::string, cplx> RANCH{{"s", cplx(0.7315, 0.0)}};

GroupDescriptor desc(Kind k, std::optional<ExactScalar> w = std::nullopt) {
    GroupDescriptor g;
    g.kind = k;
    g.omega = std::move(w);
    return g;
}

GroupDescriptor with_xi(Kind k, ExactScalar w, QVector xi, const std::map<std::string, cplx>& anchors) {
    GroupDescriptor g = desc(k, w);
    xi.set_minpoly(is_real_kind(k) ? std::nullopt : minpoly_of(w));
    g.xi = std::move(xi);
    g.anchors = anchors;
    return g;
}

GroupDescriptor product(Kind k, GroupDescriptor a, GroupDescriptor b) {
    GroupDescriptor g = desc(k);
    g.factors = {std::move(a), std::move(b)};
    return g;
}

// p + q * s over the basis 1, omega, s, omega*s
QVector xi_of(const char* p, const char* q, const char* sym = "s") {
    return QVector(canonical_basis({sym}), {parse_rational(p), Q(0), parse_rational(q), Q(0)});
}

double max_entry_diff(const Mat2C& a, const Mat2C& b) {
    double d = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    return d;
}

Mat2C mul(const Mat2C& a, const Mat2C& b) {
    Mat2C r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

}  // namespace

TEST_CASE("kind names round trip") {
    for (Kind k : {Kind::C1_Id, Kind::C2_S, Kind::R1_Sin, Kind::R2_T, Kind::R2_Abelian})
        CHECK(parse_kind(kind_name(k)) == k);
    CHECK(error_code([] { parse_kind("C3_Foo"); }) == "UnknownKind");
}

TEST_CASE("classification types") {
    CHECK(classify_type(desc(Kind::C1_Id)) == 1);
    CHECK(classify_type(desc(Kind::C1_Exp)) == 2);
    CHECK(classify_type(desc(Kind::C1_Wp, I)) == 3);
    CHECK(classify_type(desc(Kind::R1_Id)) == 1);
    CHECK(classify_type(desc(Kind::R1_Sin)) == 3);
    CHECK(classify_type(desc(Kind::C2_Z, I)) == 2);
    CHECK(classify_type(with_xi(Kind::C2_S, I, xi_of("0", "1"), CANCH)) == 3);
    CHECK(classify_type(with_xi(Kind::R2_T, rat("1"), xi_of("0", "1"), RANCH)) == 4);
    CHECK(classify_type(desc(Kind::R2_Abelian)) == 5);
}

TEST_CASE("descriptor validation") {
    CHECK(error_code([] { validate(desc(Kind::C1_Wp)); }) == "InvalidDescriptor");
    CHECK(error_code([] { validate(desc(Kind::C2_S, I)); }) == "InvalidDescriptor");
    CHECK(error_code([] { validate(desc(Kind::R2_Z, I)); }) == "InvalidDescriptor");
}

TEST_CASE("xi membership examples") {
    auto a = xi_membership(I, xi_of("0", "1"), xi_of("1/2", "2"));
    REQUIRE(a);
    CHECK(a->kp == 2);
    CHECK(a->kq == 0);
    CHECK(a->lam.coord("1") == Q(1, 2));
    CHECK(a->lam.coord("omega") == 0);

    QVector other(canonical_basis({"r"}), {Q(0), Q(0), Q(1), Q(0)});
    CHECK_FALSE(xi_membership(I, xi_of("0", "1"), other));

    auto mp = minpoly_of(I);
    QVector x1 = xi_of("0", "1");
    x1.set_minpoly(mp);
    QVector x2 = x1.times(Q(1), Q(1)) + QVector({"1", "omega"}, {Q(0), Q(1)}, mp);
    auto b = xi_membership(I, x1, x2);
    REQUIRE(b);
    CHECK(b->kp == 1);
    CHECK(b->kq == 1);
    CHECK(b->lam.coord("omega") == 1);
    CHECK(b->lam.coord("1") == 0);
    CHECK(b->lam + x1.times(b->kp, b->kq) == x2);
}

TEST_CASE("xi membership is stable under a refined basis") {
    ExactScalar w = quad(-3, "1/2", "1/2");
    auto mp = minpoly_of(w);
    QVector x1(canonical_basis({"s"}), {Q(1, 3), Q(0), Q(1), Q(2)}, mp);
    QVector x2 = x1.times(Q(2), Q(-1)) + QVector({"1", "omega"}, {Q(5), Q(-1, 2)}, mp);
    const bool before = bool(xi_membership(w, x1, x2));
    ExactScalar w2 = shifted_omega(w, Q(2), Q(1));
    auto mp2 = minpoly_of(w2);
    const bool after = bool(xi_membership(w2, reexpress(x1, Q(2), Q(1), mp2), reexpress(x2, Q(2), Q(1), mp2)));
    CHECK(before);
    CHECK(before == after);
}

TEST_CASE("one-dimensional isomorphism") {
    auto a = iso_c1(desc(Kind::C1_Wp, I), desc(Kind::C1_Wp, quad(-1, "0", "2")));
    REQUIRE(a);
    REQUIRE(a->abcd);
    CHECK((a->abcd->a == 2 && a->abcd->b == 0 && a->abcd->c == 0 && a->abcd->d == 1));
    CHECK(std::abs(a->matrix[0][0].value - 1.0) < 1e-15);
    CHECK_FALSE(iso_c1(desc(Kind::C1_Exp), desc(Kind::C1_Id)));
    CHECK_FALSE(iso_c1(desc(Kind::C1_Wp, I), desc(Kind::C1_Wp, quad(-3, "0", "1"))));
    CHECK(iso_r1(desc(Kind::R1_Wp, rat("1")), desc(Kind::R1_Wp, rat("3/2"))));
    CHECK_FALSE(iso_r1(desc(Kind::R1_Wp, rat("1")), desc(Kind::R1_Wp, quad(2, "0", "1"))));
}

TEST_CASE("two-dimensional complex isomorphism") {
    GroupDescriptor z1 = desc(Kind::C2_Z, I), z2 = desc(Kind::C2_Z, quad(-1, "0", "2"));
    auto w = iso_c2(z1, z2);
    REQUIRE(w);
    CHECK(std::abs(w->matrix[0][0].value - 1.0) < 1e-15);
    CHECK(witness_periodicity(z1, z2, *w) < 1e-7);
    CHECK_FALSE(w->trace.empty());

    GroupDescriptor s1 = with_xi(Kind::C2_S, I, xi_of("0", "1"), CANCH);
    QVector x2(canonical_basis({"r", "s"}), {Q(0), Q(0), Q(1), Q(0), Q(1), Q(0)});
    GroupDescriptor s2 = with_xi(Kind::C2_S, I, x2, CANCH);
    CHECK_FALSE(iso_c2(s1, s2));
    CHECK_FALSE(iso_c2(z1, s1));
    CHECK(error_code([] { iso_c2(desc(Kind::C2_Abelian), desc(Kind::C2_Abelian)); }) == "UnsupportedKind");
}

TEST_CASE("two-dimensional real isomorphism") {
    GroupDescriptor a = with_xi(Kind::R2_S, rat("1"), xi_of("0", "1"), RANCH);
    GroupDescriptor b = with_xi(Kind::R2_S, rat("2"), xi_of("1", "3"), RANCH);
    auto w = iso_r2(a, b);
    REQUIRE(w);
    CHECK(witness_periodicity(a, b, *w) < 1e-7);
    for (const auto& row : w->matrix)
        for (const auto& e : row) CHECK(std::abs(e.value.imag()) < 1e-12);
    CHECK_FALSE(iso_r2(a, with_xi(Kind::R2_T, rat("1"), xi_of("0", "1"), RANCH)));

    ExactScalar pi_sym(SymbolicOmega("t", Mat2Q{}, cplx(3.141592653589793, 0)));
    CHECK(error_code([&] { validate(desc(Kind::R2_Z, pi_sym)); }) == "");
    CHECK_FALSE(iso_r2(desc(Kind::R2_Z, rat("1")), desc(Kind::R2_Z, pi_sym)));
}

TEST_CASE("isomorphism is an equivalence relation on samples") {
    int checked = 0;
    for (const auto& p : descriptor_pairs(5, 16)) {
        if (!p.expect_iso) continue;
        CAPTURE(p.label);
        auto refl = isomorphic(p.g1, p.g1);
        REQUIRE(refl);
        CHECK(witness_periodicity(p.g1, p.g1, *refl) < 1e-7);
        auto back = isomorphic(p.g2, p.g1);
        REQUIRE(back);
        CHECK(witness_periodicity(p.g2, p.g1, *back) < 1e-7);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("automorphism groups") {
    CHECK(aut(desc(Kind::C1_Id)).group == "C*");
    CHECK(aut(desc(Kind::C1_Exp)).group == "Q*");
    CHECK(aut(desc(Kind::C1_Wp, ExactScalar(SymbolicOmega("t", Mat2Q{}, cplx(0.2, 1.4))))).group == "Q*");
    CHECK(aut(desc(Kind::C1_Wp, I)).group == "Q(sqrt(-1))*");
    CHECK(aut(desc(Kind::R1_Sin)).group == "Q*");
    CHECK(aut(desc(Kind::R1_Id)).group == "R*");
    CHECK(aut(product(Kind::C2_Product, desc(Kind::C1_Exp), desc(Kind::C1_Id))).group == "Diag(Q*,C*)");
    CHECK(aut(product(Kind::R2_Product, desc(Kind::R1_Id), desc(Kind::R1_Id))).group == "GL2(R)");
    CHECK(aut(product(Kind::R2_Product, desc(Kind::R1_Exp), desc(Kind::R1_Sin))).group == "Diag(Q*,Q*)");
    AutDescriptor d = aut(product(Kind::C2_Product, desc(Kind::C1_Wp, I), desc(Kind::C1_Wp, quad(-3, "0", "1"))));
    CHECK(d.case_id == "6.2");
    CHECK(d.group == "Diag(Q(sqrt(-1))*,Q(sqrt(-3))*)");
    CHECK(aut(product(Kind::C2_Product, desc(Kind::C1_Wp, I), desc(Kind::C1_Wp, quad(-1, "1", "2")))).case_id ==
          "6.1");
    CHECK(error_code([] { aut(desc(Kind::C2_Abelian)); }) == "UnsupportedKind");
}

TEST_CASE("one-parameter automorphism families") {
    const std::vector<GroupDescriptor> ds{desc(Kind::C2_Z, I), with_xi(Kind::C2_S, I, xi_of("0", "1"), CANCH),
                                          with_xi(Kind::R2_S, rat("1"), xi_of("0", "1"), RANCH),
                                          with_xi(Kind::R2_T, quad(2, "0", "1"), xi_of("1/3", "1"), RANCH)};
    const Mat2C id{{{1.0, 0.0}, {0.0, 1.0}}};
    for (const auto& g : ds) {
        CAPTURE(kind_name(g.kind));
        AutDescriptor a = aut(g);
        REQUIRE(a.one_parameter);
        CHECK(max_entry_diff(a.numeric_instance(rat("1")), id) == 0.0);
        Mat2C prod = mul(a.numeric_instance(rat("2")), a.numeric_instance(rat("3")));
        CHECK(max_entry_diff(prod, a.numeric_instance(rat("6"))) < 1e-8);
    }
    CHECK(aut(ds[0]).case_id == "7");
    CHECK(aut(ds[1]).case_id == "8");
    CHECK(aut(ds[2]).case_id == "7");
    CHECK(aut(ds[3]).case_id == "8");
}

TEST_CASE("abelian kinds are opaque to the deciders") {
    CHECK(error_code([] { isomorphic(desc(Kind::R2_Abelian), desc(Kind::R2_Abelian)); }) == "UnsupportedKind");
}
