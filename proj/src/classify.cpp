#include "lng/classify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace lng {

namespace {

const cplx kI{0.0, 1.0};

struct KindName {
    Kind k;
    const char* name;
};

constexpr KindName kKinds[] = {
    {Kind::C1_Id, "C1_Id"},         {Kind::C1_Exp, "C1_Exp"},   {Kind::C1_Wp, "C1_Wp"},
    {Kind::C2_Product, "C2_Product"}, {Kind::C2_Z, "C2_Z"},     {Kind::C2_S, "C2_S"},
    {Kind::C2_Abelian, "C2_Abelian"}, {Kind::R1_Id, "R1_Id"},   {Kind::R1_Exp, "R1_Exp"},
    {Kind::R1_Sin, "R1_Sin"},       {Kind::R1_Wp, "R1_Wp"},     {Kind::R2_Product, "R2_Product"},
    {Kind::R2_Z, "R2_Z"},           {Kind::R2_S, "R2_S"},       {Kind::R2_T, "R2_T"},
    {Kind::R2_Abelian, "R2_Abelian"},
};

[[noreturn]] void invalid(const std::string& what) { throw Error("InvalidDescriptor", what); }

bool is_abelian(Kind k) { return k == Kind::C2_Abelian || k == Kind::R2_Abelian; }

Z lcm(const Z& a, const Z& b) {
    Z r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

NumComplex num(cplx v, double err = 0.0) { return {v, err}; }

// For a rational a, "omega" and a are the same number; fold such coordinates
// into "1" and s so that rationality tests stay exact.
QVector fold_rational_a(const QVector& xi, const ExactScalar& a) {
    if (a.kind() != ExactScalar::Kind::rat) return xi;
    QVector r = xi;
    const Q& av = a.rat();
    r.set("1", r.coord("1") + av * r.coord("omega"));
    r.set("omega", Q(0));
    for (const auto& s : xi.symbols()) {
        std::string p = "omega*" + s;
        r.set(s, r.coord(s) + av * r.coord(p));
        r.set(p, Q(0));
    }
    return r;
}

bool only_in(const QVector& v, std::initializer_list<const char*> allowed) {
    for (std::size_t i = 0; i < v.basis().size(); ++i) {
        if (sgn(v.coords()[i]) == 0) continue;
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* n) { return v.basis()[i] == n; }))
            return false;
    }
    return true;
}

std::map<std::string, cplx> merged_anchors(const GroupDescriptor& g1, const GroupDescriptor& g2) {
    std::map<std::string, cplx> m = g1.anchors;
    for (const auto& [k, v] : g2.anchors) {
        auto it = m.find(k);
        if (it != m.end() && std::abs(it->second - v) > 1e-12 * std::max(1.0, std::abs(v)))
            throw Error("AnchorMismatch", "symbol " + k + " anchored to two different values");
        m[k] = v;
    }
    return m;
}

// Coefficients of (p t + q)(r' t + s') as a polynomial in t.
std::array<Q, 3> poly_mul(const Q& p, const Q& q, const Q& r, const Q& s) { return {p * r, p * s + q * r, q * s}; }

std::string witness_text(const Witness& w) {
    return "(" + w.a.get_str() + "," + w.b.get_str() + "," + w.c.get_str() + "," + w.d.get_str() + ")";
}

struct SParams {
    Q kp, kq;  // k = kp + kq omega1
    Q lr, ls;  // lam0 = lr + ls omega1
    cplx xi2;
};

// Witness alpha(u, v) = (rho u, beta u + gamma v) for the Z (no s) and S kinds.
// L1 must be <1, omega1> with w1 = 1, w2 = omega1.
IsoWitness zs_witness(const Lattice& L1, const Witness& w, const std::optional<SParams>& s,
                      const std::optional<MinPoly>& mp) {
    IsoWitness out;
    out.abcd = w;
    out.trace.push_back("commensurability witness (a,b,c,d) = " + witness_text(w));
    out.trace.push_back("n = 1, rho = 1/(c omega1 + d)");

    Lattice inner = L1.transformed(Mat2Q{Q(w.d), Q(w.c), Q(w.b), Q(w.a)});  // (c omega1 + d) Omega2
    cplx rinv = double(w.c.get_d()) * L1.w2() + w.d.get_d();

    Q knorm(1), bar_p(1), bar_q(0);
    if (s) {
        bar_p = s->kp;
        bar_q = 0;
        if (sgn(s->kq) != 0) {
            if (!mp) throw Error("NotQuadratic", "k outside Q needs quadratic omega");
            const QuadElem w2(L1.frame().exact->quad().D, L1.basis().c, L1.basis().d);
            QuadElem k(w2.D, s->kp + s->kq * w2.x, s->kq * w2.y);
            QuadElem kb = conj(k);
            inner = inner.times(kb);
            rinv *= kb.value();
            knorm = k.norm();
            // conj(kp + kq omega) = (kp + kq B) - kq omega
            bar_p = s->kp + s->kq * mp->B;
            bar_q = -s->kq;
            out.trace.push_back("k in K_omega1 outside Q: rho scaled by 1/conj(k)");
        } else {
            inner = inner.scaled(s->kp);
            rinv *= to_double(s->kp);
            knorm = s->kp * s->kp;
            out.trace.push_back("k = " + to_string(s->kp) + ": rho scaled by 1/k");
        }
    }

    GenResidue gr = gen_residue(inner, L1);
    Z sub_index = sublattice_test(L1, gr.common_sub);
    out.trace.push_back("residue entry qc(rho^-1 Omega2, Omega1) via common sublattice of index " +
                        sub_index.get_str());
    const double N = to_double(gr.index);

    NumComplex rho = num(1.0 / rinv, 4e-16 / std::abs(rinv));
    NumComplex beta, gamma;
    Z M = sub_index;
    if (!s) {
        beta = num(rinv * gr.qc.value, std::abs(rinv) * gr.qc.err);
        gamma = num(rinv * N, 4e-16 * std::abs(rinv * N));
    } else {
        Q g = gr.index * knorm;
        QVector lam0({"1", "omega"}, {s->lr, s->ls}, mp);
        QVector lam = lam0.times(bar_p, bar_q).scaled(gr.index);
        Q r = lam.coord("1"), t = lam.coord("omega");
        EvalContext ctx(L1);
        cplx shift = to_double(r) * ctx.eta1() + to_double(t) * ctx.eta2();
        cplx b = shift + s->xi2 * rinv * gr.qc.value;
        double err = std::abs(s->xi2 * rinv) * gr.qc.err + 1e-15 * (std::abs(shift) + 1.0);
        beta = num(b, err);
        gamma = num(to_double(g), 0.0);
        out.trace.push_back("xi-membership shift lam = " + to_string(r) + " + " + to_string(t) + " omega1");
        out.trace.push_back("quasi-period term eta1(lam) added to beta; gamma = " + to_string(g));
        for (const Q* q : {&g, &r, &t}) M = lcm(M, q->get_den());
    }
    out.matrix = {{{rho, num(0.0)}, {beta, gamma}}};
    out.period_multiplier = M.get_si();
    return out;
}

void make_real(IsoWitness& w) {
    for (auto& row : w.matrix)
        for (auto& e : row) {
            e.err += std::fabs(e.value.imag());
            e.value = e.value.real();
        }
}

IsoWitness scalar_witness(cplx s, long long M = 1) {
    IsoWitness w;
    w.dim = 1;
    w.matrix[0][0] = num(s);
    w.matrix[1][1] = num(1.0);
    w.period_multiplier = M;
    return w;
}

// Exact solve xi2 = p + q xi1 with p on the allowed coordinates, q in Q^*.
std::optional<std::pair<Q, Q>> real_xi_solve(const QVector& xi1, const QVector& xi2, const char* allowed) {
    std::vector<std::string> names = xi1.basis();
    for (const auto& n : xi2.basis())
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    std::vector<std::vector<Q>> A;
    std::vector<Q> b;
    for (const auto& n : names) {
        if (n == allowed) continue;
        A.push_back({xi1.coord(n)});
        b.push_back(xi2.coord(n));
    }
    auto x = solve_q(A, b);
    if (!x || sgn((*x)[0]) == 0) return std::nullopt;
    Q q = (*x)[0];
    return std::make_pair(xi2.coord(allowed) - q * xi1.coord(allowed), q);
}

}  // namespace

std::string kind_name(Kind k) {
    for (const auto& e : kKinds)
        if (e.k == k) return e.name;
    return "?";
}

Kind parse_kind(const std::string& s) {
    for (const auto& e : kKinds)
        if (s == e.name) return e.k;
    throw Error("UnknownKind", s);
}

bool is_real_kind(Kind k) { return k >= Kind::R1_Id; }

int kind_dimension(Kind k) {
    switch (k) {
        case Kind::C1_Id: case Kind::C1_Exp: case Kind::C1_Wp:
        case Kind::R1_Id: case Kind::R1_Exp: case Kind::R1_Sin: case Kind::R1_Wp:
            return 1;
        default:
            return 2;
    }
}

void validate(const GroupDescriptor& g) {
    const Kind k = g.kind;
    const bool needs_omega = k == Kind::C1_Wp || k == Kind::C2_Z || k == Kind::C2_S || k == Kind::R1_Wp ||
                             k == Kind::R2_Z || k == Kind::R2_S || k == Kind::R2_T;
    const bool needs_xi = k == Kind::C2_S || k == Kind::R2_S || k == Kind::R2_T;
    const bool product = k == Kind::C2_Product || k == Kind::R2_Product;
    if (needs_omega != g.omega.has_value()) invalid(kind_name(k) + (needs_omega ? " needs" : " takes no") + " omega");
    if (needs_xi != g.xi.has_value()) invalid(kind_name(k) + (needs_xi ? " needs" : " takes no") + " xi");
    if (product != !g.factors.empty()) invalid(kind_name(k) + (product ? " needs" : " takes no") + " factors");

    if (product) {
        if (g.factors.size() != 2) invalid("products have exactly two factors");
        for (const auto& f : g.factors) {
            if (kind_dimension(f.kind) != 1 || is_real_kind(f.kind) != is_real_kind(k))
                invalid("product factors must be one-dimensional of the same base field");
            validate(f);
        }
    }
    if (!needs_omega) return;

    cplx w = g.omega->value();
    if (is_real_kind(k)) {
        if (w.imag() != 0.0 || w.real() == 0.0) invalid("a must be a nonzero real");
        if (g.omega->kind() == ExactScalar::Kind::quad && !g.omega->quad().is_real()) invalid("a must be real");
    } else {
        if (std::fabs(w.imag()) < 1e-14 * std::abs(w)) invalid("omega must not be real");
        if (g.omega->kind() == ExactScalar::Kind::rat) invalid("omega must not be real");
    }
    if (!needs_xi) return;

    const QVector& xi = *g.xi;
    for (const auto& s : xi.symbols())
        if (!g.anchors.count(s)) invalid("no anchor for symbol " + s);
    if (k == Kind::C2_S) {
        if (xi.in_omega_plane()) invalid("xi must lie outside <1,omega>_Q");
    } else {
        QVector f = fold_rational_a(xi, *g.omega);
        if (k == Kind::R2_S && only_in(f, {"1"})) invalid("xi must be irrational");
        if (k == Kind::R2_T && (only_in(f, {"omega"}) || (g.omega->kind() == ExactScalar::Kind::rat && only_in(f, {"1"}))))
            invalid("xi must lie outside a Q");
        if (std::fabs(descriptor_xi(g).imag()) > 0.0) invalid("xi must be real");
    }
}

Lattice descriptor_lattice(const GroupDescriptor& g) {
    if (!g.omega) invalid(kind_name(g.kind) + " has no lattice");
    return is_real_kind(g.kind) ? Lattice::real_type(*g.omega) : Lattice::unit(*g.omega);
}

cplx descriptor_xi(const GroupDescriptor& g) {
    if (!g.xi) invalid(kind_name(g.kind) + " has no xi");
    return g.xi->value(g.omega->value(), g.anchors);
}

int classify_type(const GroupDescriptor& g) {
    validate(g);
    switch (g.kind) {
        case Kind::C1_Id: case Kind::R1_Id: case Kind::C2_Product: case Kind::R2_Product: return 1;
        case Kind::C1_Exp: case Kind::R1_Exp: case Kind::C2_Z: case Kind::R2_Z: return 2;
        case Kind::C1_Wp: case Kind::R1_Sin: case Kind::C2_S: case Kind::R2_S: return 3;
        case Kind::R1_Wp: case Kind::C2_Abelian: case Kind::R2_T: return 4;
        case Kind::R2_Abelian: return 5;
    }
    return 0;
}

Chart1D chart_of(const GroupDescriptor& g) {
    switch (g.kind) {
        case Kind::C1_Id: case Kind::R1_Id: return {Chart::Id, std::nullopt};
        case Kind::C1_Exp: case Kind::R1_Exp: return {Chart::Exp, std::nullopt};
        case Kind::R1_Sin: return {Chart::Sin, std::nullopt};
        case Kind::C1_Wp: case Kind::R1_Wp: return {Chart::Wp, descriptor_lattice(g)};
        default: invalid(kind_name(g.kind) + " is not one-dimensional");
    }
}

PlaneMap representative_map(const GroupDescriptor& g) {
    validate(g);
    switch (g.kind) {
        case Kind::C2_Product:
        case Kind::R2_Product: return PlaneMap::product(chart_of(g.factors[0]), chart_of(g.factors[1]));
        case Kind::C2_Z:
        case Kind::R2_Z: return PlaneMap::family({Family::G4, descriptor_lattice(g), cplx(1.0)});
        case Kind::C2_S:
        case Kind::R2_S: return PlaneMap::family({Family::G5, descriptor_lattice(g), descriptor_xi(g)});
        case Kind::R2_T: return PlaneMap::family({Family::G6, descriptor_lattice(g), descriptor_xi(g)});
        case Kind::C2_Abelian:
        case Kind::R2_Abelian: throw Error("UnsupportedKind", "abelian surfaces are opaque");
        default: return PlaneMap::product(chart_of(g), {Chart::Id, std::nullopt});
    }
}

std::optional<XiSolution> xi_membership(const ExactScalar& omega, const QVector& xi1, const QVector& xi2) {
    std::optional<MinPoly> mp = minpoly_of(omega);
    for (const QVector* v : {&xi1, &xi2}) {
        if (!v->minpoly()) continue;
        if (!mp || v->minpoly()->A != mp->A || v->minpoly()->B != mp->B)
            throw Error("BasisMismatch", "minimal polynomial does not match omega");
    }
    QVector a = xi1, b = xi2;
    a.set_minpoly(mp);
    b.set_minpoly(mp);
    QVector w = a.times(Q(0), Q(mp ? 1 : 0));

    std::vector<std::string> names = a.basis();
    for (const auto* v : {&b, &w})
        for (const auto& n : v->basis())
            if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    std::vector<std::vector<Q>> A;
    std::vector<Q> rhs;
    for (const auto& n : names) {
        if (n == "1" || n == "omega") continue;
        if (mp)
            A.push_back({a.coord(n), w.coord(n)});
        else
            A.push_back({a.coord(n)});
        rhs.push_back(b.coord(n));
    }
    if (A.empty()) return std::nullopt;
    auto x = solve_q(A, rhs);
    if (!x) return std::nullopt;
    XiSolution s{(*x)[0], mp ? (*x)[1] : Q(0), QVector()};
    if (sgn(s.kp) == 0 && sgn(s.kq) == 0) return std::nullopt;
    QVector lam = b - a.times(s.kp, s.kq);
    if (!lam.in_omega_plane()) return std::nullopt;
    s.lam = QVector({"1", "omega"}, {lam.coord("1"), lam.coord("omega")}, mp);
    return s;
}

QVector rebase_xi(const QVector& xi2, const Witness& w, std::optional<MinPoly> mp1) {
    const Q a(w.a), b(w.b), c(w.c), d(w.d);
    QVector r(canonical_basis(xi2.symbols()), std::vector<Q>(2 + 2 * xi2.symbols().size(), Q(0)), mp1);
    auto add = [&](const std::string& n, const Q& v) { r.set(n, r.coord(n) + v); };
    for (std::size_t i = 0; i < xi2.basis().size(); ++i) {
        const Q& x = xi2.coords()[i];
        const std::string& n = xi2.basis()[i];
        if (n == "1") {
            add("1", d * x);
            add("omega", c * x);
        } else if (n == "omega") {
            add("1", b * x);
            add("omega", a * x);
        } else if (n.rfind("omega*", 0) == 0) {
            std::string s = n.substr(6);
            add(s, b * x);
            add(n, a * x);
        } else {
            add(n, d * x);
            add("omega*" + n, c * x);
        }
    }
    return r;
}

std::optional<Q> rational_ratio(const ExactScalar& b, const ExactScalar& a) {
    using K = ExactScalar::Kind;
    auto as_quad = [](const ExactScalar& e, long D) -> std::optional<QuadElem> {
        if (e.kind() == K::rat) return QuadElem(D, e.rat(), Q(0));
        if (e.kind() == K::quad && (e.quad().D == D || sgn(e.quad().y) == 0))
            return QuadElem(D, e.quad().x, e.quad().y);
        return std::nullopt;
    };
    if (a.kind() != K::sym && b.kind() != K::sym) {
        long D = 2;
        for (const auto* e : {&a, &b})
            if (e->kind() == K::quad && sgn(e->quad().y) != 0) D = e->quad().D;
        auto qa = as_quad(a, D), qb = as_quad(b, D);
        if (!qa || !qb || qa->is_zero()) return std::nullopt;
        if (qa->x * qb->y != qa->y * qb->x) return std::nullopt;
        return sgn(qa->x) != 0 ? Q(qb->x / qa->x) : Q(qb->y / qa->y);
    }
    if (a.kind() != K::sym || b.kind() != K::sym || a.sym().symbol != b.sym().symbol) return std::nullopt;
    const Mat2Q& A = a.sym().M;
    const Mat2Q& B = b.sym().M;
    // b = r a as rational functions of t
    auto lhs = poly_mul(B.a, B.b, A.c, A.d);
    auto rhs = poly_mul(A.a, A.b, B.c, B.d);
    std::optional<Q> r;
    for (int i = 0; i < 3; ++i) {
        if (sgn(rhs[i]) == 0) {
            if (sgn(lhs[i]) != 0) return std::nullopt;
            continue;
        }
        Q ri = lhs[i] / rhs[i];
        if (r && *r != ri) return std::nullopt;
        r = ri;
    }
    if (!r || sgn(*r) == 0) return std::nullopt;
    return r;
}

std::optional<IsoWitness> iso_c1(const GroupDescriptor& g1, const GroupDescriptor& g2) {
    validate(g1);
    validate(g2);
    if (kind_dimension(g1.kind) != 1 || is_real_kind(g1.kind) || kind_dimension(g2.kind) != 1 ||
        is_real_kind(g2.kind))
        invalid("iso_c1 takes complex one-dimensional descriptors");
    if (g1.kind != g2.kind) return std::nullopt;
    if (g1.kind != Kind::C1_Wp) {
        IsoWitness w = scalar_witness(1.0);
        w.trace.push_back("same chart: identity");
        return w;
    }
    auto cw = commensurable(*g1.omega, *g2.omega);
    if (!cw) return std::nullopt;
    cplx s = 1.0 / (double(cw->c.get_d()) * g1.omega->value() + cw->d.get_d());
    Z det(abs(cw->det()));
    IsoWitness w = scalar_witness(s, det.get_si());
    w.abcd = *cw;
    w.trace.push_back("commensurability witness (a,b,c,d) = " + witness_text(*cw));
    w.trace.push_back("n = 1, scale = 1/(c omega1 + d)");
    return w;
}

std::optional<IsoWitness> iso_r1(const GroupDescriptor& g1, const GroupDescriptor& g2) {
    validate(g1);
    validate(g2);
    if (kind_dimension(g1.kind) != 1 || !is_real_kind(g1.kind) || kind_dimension(g2.kind) != 1 ||
        !is_real_kind(g2.kind))
        invalid("iso_r1 takes real one-dimensional descriptors");
    if (g1.kind != g2.kind) return std::nullopt;
    if (g1.kind != Kind::R1_Wp) {
        IsoWitness w = scalar_witness(1.0);
        w.trace.push_back("same chart: identity");
        return w;
    }
    auto r = rational_ratio(*g2.omega, *g1.omega);
    if (!r) return std::nullopt;
    // b/a = q/p: omega2 = (q omega1 + 0)/(0 omega1 + p)
    Witness cw{r->get_num(), 0, 0, r->get_den()};
    IsoWitness w = scalar_witness(1.0 / r->get_den().get_d(), Z(abs(cw.det())).get_si());
    w.abcd = cw;
    w.trace.push_back("b/a = " + to_string(*r) + " rational");
    return w;
}

namespace {

std::optional<IsoWitness> product_iso(const GroupDescriptor& g1, const GroupDescriptor& g2, bool real) {
    auto one = [&](const GroupDescriptor& a, const GroupDescriptor& b) { return real ? iso_r1(a, b) : iso_c1(a, b); };
    const auto& f = g1.factors;
    const auto& h = g2.factors;
    if (auto x = one(f[0], h[0]))
        if (auto y = one(f[1], h[1])) {
            IsoWitness w;
            w.matrix = {{{x->matrix[0][0], num(0.0)}, {num(0.0), y->matrix[0][0]}}};
            w.period_multiplier = std::lcm(x->period_multiplier, y->period_multiplier);
            w.trace = {"factorwise, diagonal pairing"};
            for (const auto* p : {&*x, &*y})
                for (const auto& t : p->trace) w.trace.push_back(t);
            return w;
        }
    if (auto x = one(f[0], h[1]))
        if (auto y = one(f[1], h[0])) {
            IsoWitness w;
            // u feeds the second target chart, v the first
            w.matrix = {{{num(0.0), y->matrix[0][0]}, {x->matrix[0][0], num(0.0)}}};
            w.period_multiplier = std::lcm(x->period_multiplier, y->period_multiplier);
            w.trace = {"factorwise, antidiagonal pairing"};
            for (const auto* p : {&*x, &*y})
                for (const auto& t : p->trace) w.trace.push_back(t);
            return w;
        }
    return std::nullopt;
}

void check_pair(const GroupDescriptor& g1, const GroupDescriptor& g2, bool real) {
    validate(g1);
    validate(g2);
    for (const auto* g : {&g1, &g2}) {
        if (kind_dimension(g->kind) != 2 || is_real_kind(g->kind) != real)
            invalid(std::string(real ? "iso_r2" : "iso_c2") + " takes two-dimensional descriptors of one base field");
        if (is_abelian(g->kind)) throw Error("UnsupportedKind", "abelian surfaces are opaque");
    }
}

}  // namespace

std::optional<IsoWitness> iso_c2(const GroupDescriptor& g1, const GroupDescriptor& g2) {
    check_pair(g1, g2, false);
    if (g1.kind != g2.kind) return std::nullopt;
    if (g1.kind == Kind::C2_Product) return product_iso(g1, g2, false);

    auto cw = commensurable(*g1.omega, *g2.omega);
    if (!cw) return std::nullopt;
    const Lattice L1 = descriptor_lattice(g1);
    std::optional<MinPoly> mp = minpoly_of(*g1.omega);
    if (g1.kind == Kind::C2_Z) return zs_witness(L1, *cw, std::nullopt, mp);

    QVector x1 = *g1.xi;
    x1.set_minpoly(mp);
    QVector moved = rebase_xi(*g2.xi, *cw, mp);
    auto sol = xi_membership(*g1.omega, x1, moved);
    if (!sol) return std::nullopt;
    auto anchors = merged_anchors(g1, g2);
    cplx xi2 = g2.xi->value(g2.omega->value(), anchors);
    SParams sp{sol->kp, sol->kq, sol->lam.coord("1"), sol->lam.coord("omega"), xi2};
    IsoWitness w = zs_witness(L1, *cw, sp, mp);
    w.trace.insert(w.trace.begin() + 1, "xi-membership: (c omega1 + d) xi2 = lam0 + k xi1, k = " + to_string(sol->kp) +
                                            " + " + to_string(sol->kq) + " omega1");
    return w;
}

std::optional<IsoWitness> iso_r2(const GroupDescriptor& g1, const GroupDescriptor& g2) {
    check_pair(g1, g2, true);
    if (g1.kind != g2.kind) return std::nullopt;
    if (g1.kind == Kind::R2_Product) return product_iso(g1, g2, true);

    auto r = rational_ratio(*g2.omega, *g1.omega);
    if (!r) return std::nullopt;
    Witness cw{r->get_num(), 0, 0, r->get_den()};
    const Lattice L1 = descriptor_lattice(g1);
    if (g1.kind == Kind::R2_Z) {
        IsoWitness w = zs_witness(L1, cw, std::nullopt, std::nullopt);
        make_real(w);
        return w;
    }

    // xi2 over the basis of a: "omega" = b = (b/a) a
    const ExactScalar& a = *g1.omega;
    QVector x2 = fold_rational_a(*g2.xi, *g2.omega);
    for (std::size_t i = 0; i < x2.basis().size(); ++i) {
        const std::string& n = x2.basis()[i];
        if (n == "omega" || n.rfind("omega*", 0) == 0) x2.set(n, x2.coords()[i] * *r);
    }
    QVector x1 = fold_rational_a(*g1.xi, a);
    const bool t_kind = g1.kind == Kind::R2_T;
    const bool a_rat = a.kind() == ExactScalar::Kind::rat;
    auto pq = real_xi_solve(x1, x2, t_kind && !a_rat ? "omega" : "1");
    if (!pq) return std::nullopt;
    auto [p, q] = *pq;
    auto anchors = merged_anchors(g1, g2);
    const Q d(cw.d);
    SParams sp;
    sp.kp = d * q;
    sp.kq = 0;
    if (!t_kind) {
        sp.lr = d * p;
        sp.ls = 0;
        sp.xi2 = g2.xi->value(g2.omega->value(), anchors);
    } else {
        // the T kind runs through the chart (u, v) -> (u, i v) with xi i in place of xi
        sp.lr = 0;
        sp.ls = a_rat ? Q(d * p / a.rat()) : Q(d * p);
        sp.xi2 = kI * g2.xi->value(g2.omega->value(), anchors);
    }
    IsoWitness w = zs_witness(L1, cw, sp, std::nullopt);
    w.trace.insert(w.trace.begin() + 1, "real xi solve: xi2 = " + to_string(p) + (t_kind ? " a" : "") + " + " +
                                            to_string(q) + " xi1");
    if (t_kind) {
        w.matrix[1][0].value *= -kI;
        w.trace.push_back("conjugated through (u, v) -> (u, i v)");
    }
    make_real(w);
    return w;
}

std::optional<IsoWitness> isomorphic(const GroupDescriptor& g1, const GroupDescriptor& g2) {
    validate(g1);
    validate(g2);
    if (is_real_kind(g1.kind) != is_real_kind(g2.kind) || kind_dimension(g1.kind) != kind_dimension(g2.kind))
        return std::nullopt;
    const bool real = is_real_kind(g1.kind);
    if (kind_dimension(g1.kind) == 1) return real ? iso_r1(g1, g2) : iso_c1(g1, g2);
    return real ? iso_r2(g1, g2) : iso_c2(g1, g2);
}

namespace {

std::string kstar(const GroupDescriptor& g) {
    if (is_real_kind(g.kind)) return "Q*";
    return FieldSpec::of(*g.omega).name() + "*";
}

AutDescriptor fixed(std::string id, std::string group) {
    AutDescriptor a;
    a.case_id = std::move(id);
    a.group = std::move(group);
    return a;
}

Lattice scaled_by(const Lattice& L, const ExactScalar& q) {
    switch (q.kind()) {
        case ExactScalar::Kind::rat:
            if (sgn(q.rat()) == 0) throw Error("InvalidParameter", "q must be nonzero");
            return L.scaled(q.rat());
        case ExactScalar::Kind::quad:
            if (q.quad().is_zero()) throw Error("InvalidParameter", "q must be nonzero");
            return L.times(q.quad());
        case ExactScalar::Kind::sym: break;
    }
    throw Error("InvalidParameter", "q must lie in K_omega");
}

// q [[1, 0], [qc(Omega, q Omega), [Omega : q Omega] q^-2]]
AutDescriptor z_family(std::string id, const GroupDescriptor& g, bool real) {
    AutDescriptor a;
    a.case_id = std::move(id);
    a.domain = real ? "Q*" : kstar(g);
    a.family = "q[[1,0],[qc(Omega,q Omega),[Omega:q Omega]q^-2]]";
    a.group = "{" + a.family + " : q in " + a.domain + "}";
    a.one_parameter = true;
    Lattice L = descriptor_lattice(g);
    const bool quad_ok = !real && FieldSpec::of(*g.omega).kind == FieldSpec::Kind::Quadratic;
    a.numeric_instance = [L, quad_ok](const ExactScalar& q) {
        if (q.kind() == ExactScalar::Kind::quad && sgn(q.quad().y) != 0 && !quad_ok)
            throw Error("InvalidParameter", "q must lie in K_omega");
        Lattice qL = scaled_by(L, q);
        GenResidue gr = gen_residue(L, qL);
        cplx qv = q.value();
        return Mat2C{{{qv, 0.0}, {qv * gr.qc.value, to_double(gr.index) / qv}}};
    };
    return a;
}

// q [[1, 0], [xi qc(Omega, q Omega), 1]]
AutDescriptor s_family(std::string id, const GroupDescriptor& g) {
    AutDescriptor a;
    a.case_id = std::move(id);
    a.domain = "Q*";
    a.family = "q[[1,0],[xi qc(Omega,q Omega),1]]";
    a.group = "{" + a.family + " : q in Q*}";
    a.one_parameter = true;
    Lattice L = descriptor_lattice(g);
    cplx xi = descriptor_xi(g);
    a.numeric_instance = [L, xi](const ExactScalar& q) {
        if (q.kind() != ExactScalar::Kind::rat) throw Error("InvalidParameter", "q must be rational");
        GenResidue gr = gen_residue(L, scaled_by(L, q));
        cplx qv = q.value();
        return Mat2C{{{qv, 0.0}, {qv * xi * gr.qc.value, qv}}};
    };
    return a;
}

std::string one_dim_group(const GroupDescriptor& f) {
    switch (f.kind) {
        case Kind::C1_Id: return "C*";
        case Kind::R1_Id: return "R*";
        case Kind::C1_Wp: return kstar(f);
        default: return "Q*";
    }
}

}  // namespace

AutDescriptor aut_c1(const GroupDescriptor& g) {
    validate(g);
    if (kind_dimension(g.kind) != 1 || is_real_kind(g.kind)) invalid("aut_c1 takes complex one-dimensional descriptors");
    AutDescriptor a = fixed(std::to_string(classify_type(g)), one_dim_group(g));
    a.domain = a.group;
    a.one_parameter = true;
    a.family = "q";
    a.numeric_instance = [](const ExactScalar& q) { return Mat2C{{{q.value(), 0.0}, {0.0, 1.0}}}; };
    return a;
}

AutDescriptor aut_r1(const GroupDescriptor& g) {
    validate(g);
    if (kind_dimension(g.kind) != 1 || !is_real_kind(g.kind)) invalid("aut_r1 takes real one-dimensional descriptors");
    AutDescriptor a = fixed(std::to_string(classify_type(g)), one_dim_group(g));
    a.domain = a.group;
    a.one_parameter = true;
    a.family = "q";
    a.numeric_instance = [](const ExactScalar& q) { return Mat2C{{{q.value(), 0.0}, {0.0, 1.0}}}; };
    return a;
}

AutDescriptor aut_c2(const GroupDescriptor& g) {
    validate(g);
    if (kind_dimension(g.kind) != 2 || is_real_kind(g.kind)) invalid("aut_c2 takes complex two-dimensional descriptors");
    switch (g.kind) {
        case Kind::C2_Z: return z_family("7", g, false);
        case Kind::C2_S: return s_family("8", g);
        case Kind::C2_Abelian: throw Error("UnsupportedKind", "abelian surfaces are opaque");
        default: break;
    }
    const GroupDescriptor& f = g.factors[0];
    const GroupDescriptor& h = g.factors[1];
    auto count = [&](Kind k) { return int(f.kind == k) + int(h.kind == k); };
    const std::string diag = "Diag(" + one_dim_group(f) + "," + one_dim_group(h) + ")";
    if (count(Kind::C1_Id) == 2) return fixed("1", "GL2(C)");
    if (count(Kind::C1_Exp) == 2) return fixed("4", "GL2(Q)");
    if (count(Kind::C1_Id) == 1) return fixed(count(Kind::C1_Exp) ? "2" : "3", diag);
    if (count(Kind::C1_Exp) == 1) return fixed("5", diag);
    if (iso_c1(f, h)) return fixed("6.1", "diag(1,tau^-1)GL2(" + FieldSpec::of(*f.omega).name() + ")diag(1,tau)");
    return fixed("6.2", diag);
}

AutDescriptor aut_r2(const GroupDescriptor& g) {
    validate(g);
    if (kind_dimension(g.kind) != 2 || !is_real_kind(g.kind)) invalid("aut_r2 takes real two-dimensional descriptors");
    switch (g.kind) {
        case Kind::R2_Z: return z_family("6", g, true);
        case Kind::R2_S: return s_family("7", g);
        case Kind::R2_T: return s_family("8", g);
        case Kind::R2_Abelian: throw Error("UnsupportedKind", "abelian surfaces are opaque");
        default: break;
    }
    const GroupDescriptor& f = g.factors[0];
    const GroupDescriptor& h = g.factors[1];
    auto count = [&](Kind k) { return int(f.kind == k) + int(h.kind == k); };
    const std::string diag = "Diag(" + one_dim_group(f) + "," + one_dim_group(h) + ")";
    if (count(Kind::R1_Id) == 2) return fixed("1", "GL2(R)");
    if (count(Kind::R1_Id) == 1) return fixed("2", diag);
    if (f.kind == h.kind && f.kind != Kind::R1_Wp) return fixed("3", "GL2(Q)");
    if (count(Kind::R1_Wp) < 2) return fixed("4", diag);
    if (iso_r1(f, h)) return fixed("5.1", "GL2(Q)");
    return fixed("5.2", diag);
}

AutDescriptor aut(const GroupDescriptor& g) {
    validate(g);
    const bool real = is_real_kind(g.kind);
    if (kind_dimension(g.kind) == 1) return real ? aut_r1(g) : aut_c1(g);
    return real ? aut_r2(g) : aut_c2(g);
}

double witness_periodicity(const GroupDescriptor& g1, const GroupDescriptor& g2, const IsoWitness& w, int samples,
                           unsigned seed) {
    const PlaneMap f1 = representative_map(g1);
    const PlaneMap f2 = representative_map(g2);
    const auto& m = w.matrix;
    auto alpha = [&](const Pair& p) -> Pair {
        if (w.dim == 1) return {m[0][0].value * p[0], p[1]};
        return {m[0][0].value * p[0] + m[0][1].value * p[1], m[1][0].value * p[0] + m[1][1].value * p[1]};
    };
    const double M = double(w.period_multiplier);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-0.9, 0.9);
    double worst = 0.0;
    for (const Pair& lam : f1.periods().generators) {
        Pair step = alpha(lam);
        step = {M * step[0], M * step[1]};
        for (int i = 0, tries = 0; i < samples; ++tries) {
            if (tries > 50 * samples) throw Error("SamplingFailed", "no admissible sample points");
            Pair p = alpha({cplx(U(rng), U(rng)), cplx(U(rng), U(rng))});
            try {
                worst = std::max(worst, period_residual(f2, p, step));
                ++i;
            } catch (const Error& e) {
                if (e.code() != "PoleAt" && e.code() != "ZeroAt") throw;
            }
        }
    }
    return worst;
}

}  // namespace lng
