#include "lng/algmodel.hpp"

#include <algorithm>
#include <cmath>

namespace lng {

namespace {

const char* factor_name(Kind k) {
    switch (k) {
        case Kind::C1_Id: case Kind::R1_Id: return "Ga";
        case Kind::C1_Exp: case Kind::R1_Exp: return "Gm";
        case Kind::R1_Sin: return "SO2";
        default: return "EllipticCurve";
    }
}

NumComplex prod(NumComplex a, NumComplex b) {
    return {a.value * b.value, std::abs(a.value) * b.err + std::abs(b.value) * a.err};
}

NumComplex sum(NumComplex a, NumComplex b, double s = 1.0) { return {a.value + s * b.value, a.err + b.err}; }

bool at_lattice_point(const EvalContext& ctx, cplx u) { return ctx.lattice_distance(u) <= ctx.pole_guard(); }

// integer coordinates of the lattice point nearest u
std::pair<long long, long long> lattice_coords(const Lattice& L, cplx u) {
    cplx a = L.w1(), b = L.w2();
    double det = a.real() * b.imag() - a.imag() * b.real();
    double x = (u.real() * b.imag() - u.imag() * b.real()) / det;
    double y = (a.real() * u.imag() - a.imag() * u.real()) / det;
    return {std::llround(x), std::llround(y)};
}

// sigma'(lambda) = psi(lambda) exp(eta(lambda) lambda / 2) at a lattice point
cplx sigma_prime_at(const EvalContext& ctx, cplx u) {
    auto [m, n] = lattice_coords(ctx.lattice(), u);
    cplx lam = ctx.lattice().point(double(m), double(n));
    double psi = ((m + n + m * n) % 2 == 0) ? 1.0 : -1.0;
    return psi * std::exp(ctx.eta(m, n).value * lam / 2.0);
}

}  // namespace

std::string AlgGroupLabel::text() const {
    if (shape == "Product") return "Product(" + factors.at(0) + "," + factors.at(1) + ")";
    if (shape.rfind("ExtensionBy", 0) == 0) return shape + "(EllipticCurve)";
    return shape;
}

AlgGroupLabel label(const GroupDescriptor& g) {
    validate(g);
    AlgGroupLabel l;
    const bool real = is_real_kind(g.kind);
    l.base_field = real ? "R" : "C";
    l.type = classify_type(g);
    if (g.omega) l.curve = g.omega;
    switch (g.kind) {
        case Kind::C2_Product:
        case Kind::R2_Product:
            l.shape = "Product";
            for (const auto& f : g.factors) l.factors.push_back(factor_name(f.kind));
            break;
        case Kind::C2_Z: case Kind::R2_Z: l.shape = "ExtensionByGa"; break;
        case Kind::C2_S: case Kind::R2_S: l.shape = "ExtensionByGm"; break;
        case Kind::R2_T: l.shape = "ExtensionBySO2"; break;
        case Kind::C2_Abelian: l.shape = "AbelianSurface"; break;
        case Kind::R2_Abelian: l.shape = "SimpleAbelianSurfaceOverR"; break;
        default:
            l.shape = factor_name(g.kind);
            break;
    }
    return l;
}

ProjPoint normalize(std::vector<NumComplex> coords, bool pole_branch) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < coords.size(); ++i)
        if (std::abs(coords[i].value) > std::abs(coords[k].value)) k = i;
    cplx s = coords[k].value;
    double mag = std::abs(s);
    if (!(mag > 0.0) || !std::isfinite(mag)) throw Error("DegeneratePoint", "all coordinates vanish");
    for (auto& c : coords) {
        c.value /= s;
        c.err /= mag;
    }
    return {std::move(coords), pole_branch};
}

double proj_distance(const ProjPoint& a, const ProjPoint& b) {
    if (a.coords.size() != b.coords.size()) throw Error("DimensionMismatch", "points of different spaces");
    std::size_t k = 0;
    for (std::size_t i = 1; i < a.coords.size(); ++i)
        if (std::abs(a.coords[i].value) > std::abs(a.coords[k].value)) k = i;
    cplx s = b.coords[k].value;
    if (std::abs(s) == 0.0) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        d = std::max(d, std::abs(a.coords[i].value - b.coords[i].value / s));
    return d;
}

ProjPoint embed_p5(const EvalContext& ctx, cplx u, cplx v) {
    if (at_lattice_point(ctx, u)) {
        cplx eta = ctx.eta_of(u);
        return normalize({{0.0}, {0.0}, {1.0}, {0.0}, {0.0}, {v - eta, 1e-15 * std::abs(eta)}}, true);
    }
    NumComplex p = ctx.wp(u), pp = ctx.wp_prime(u), z = ctx.zeta(u);
    NumComplex w{v - z.value, z.err};
    NumComplex c4 = sum(prod(p, w), {0.5 * pp.value, 0.5 * pp.err}, -1.0);
    NumComplex c5 = sum(prod(pp, w), {2.0 * p.value * p.value, 4.0 * std::abs(p.value) * p.err}, -1.0);
    return normalize({{1.0}, p, pp, w, c4, c5});
}

NumComplex embed_phi(const EvalContext& ctx, cplx xi, cplx u, cplx v) {
    NumComplex st = ctx.sigma_tilde(xi, u);
    NumComplex sx = ctx.sigma(xi);
    NumComplex zx = ctx.zeta(xi);
    cplx e = std::exp(v + u * zx.value);
    cplx val = st.value * e / sx.value;
    double rel = st.err / std::abs(st.value) + sx.err / std::abs(sx.value) + std::abs(u) * zx.err + 1e-15;
    return {val, std::abs(val) * rel};
}

ProjPoint embed_p8(const EvalContext& ctx, cplx xi, cplx u, cplx v) {
    if (at_lattice_point(ctx, xi)) throw Error("PoleAt", "xi lies in the lattice");
    NumComplex zx = ctx.zeta(xi);
    if (at_lattice_point(ctx, u)) {
        // limit of the generic branch after dividing by p'(u)
        NumComplex sx = ctx.sigma(xi);
        cplx sp = sigma_prime_at(ctx, u);
        NumComplex a = ctx.sigma(u - xi), b = ctx.sigma(-u - xi);
        cplx e = std::exp(v + u * zx.value);
        cplx c5 = -a.value * e / (2.0 * sx.value * sp);
        cplx c6 = b.value / e / (2.0 * sx.value * sp);
        double rel = sx.err / std::abs(sx.value) + 1e-14;
        return normalize({{0.0}, {0.0}, {1.0}, {0.0}, {0.0}, {c5, std::abs(c5) * rel}, {c6, std::abs(c6) * rel},
                          {0.0}, {0.0}},
                         true);
    }
    NumComplex p = ctx.wp(u), pp = ctx.wp_prime(u);
    NumComplex pm = ctx.wp_prime(-u);
    NumComplex px = ctx.wp(xi), ppx = ctx.wp_prime(xi);
    NumComplex f1 = embed_phi(ctx, xi, u, v), f2 = embed_phi(ctx, xi, -u, -v);
    auto F = [&](NumComplex d) -> NumComplex {
        cplx den = p.value - px.value;
        if (std::abs(den) == 0.0) throw Error("PoleAt", "p(u) = p(xi)");
        cplx val = (d.value + ppx.value) / den;
        return {val, (d.err + ppx.err) / std::abs(den) + std::abs(val) * (p.err + px.err) / std::abs(den)};
    };
    return normalize({{1.0}, p, pp, f1, f2, prod(p, f1), prod(p, f2), prod(f1, F(pp)), prod(f2, F(pm))});
}

}  // namespace lng
