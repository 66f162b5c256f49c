#include "lng/painleve.hpp"

#include <algorithm>
#include <numbers>

namespace lng {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};
const cplx k2PiI{0.0, 2.0 * kPi};

const EvalContext& need(const std::shared_ptr<const EvalContext>& c) {
    if (!c) throw Error("MissingLattice", "family requires a lattice");
    return *c;
}

NumComplex exact(cplx z) { return {z, 0.0}; }

NumComplex mul(NumComplex a, NumComplex b) {
    return {a.value * b.value, std::abs(a.value) * b.err + std::abs(b.value) * a.err};
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::G1: return "G1";
        case Family::G2: return "G2";
        case Family::G3: return "G3";
        case Family::G4: return "G4";
        case Family::G5: return "G5";
        case Family::G6: return "G6";
        case Family::P6: return "P6";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    std::string u = s;
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
    for (Family f : {Family::G1, Family::G2, Family::G3, Family::G4, Family::G5, Family::G6, Family::P6})
        if (family_name(f) == u) return f;
    throw Error("UnknownFamily", s);
}

PlaneMap PlaneMap::family(const FamilyDescriptor& d) {
    PlaneMap m;
    m.kind_ = Kind::Family;
    m.desc_ = d;
    switch (d.family) {
        case Family::P6: throw Error("UnsupportedFamily", "P6 is accepted for labeling only");
        case Family::G4:
            if (d.xi != cplx(0.0) && d.xi != cplx(1.0)) throw Error("InvalidDescriptor", "G4 needs xi in {0,1}");
            [[fallthrough]];
        case Family::G5:
        case Family::G6:
            if (!d.lattice) throw Error("InvalidDescriptor", family_name(d.family) + " needs a lattice");
            if (d.family == Family::G6 && d.xi.imag() != 0.0)
                throw Error("InvalidDescriptor", "G6 needs a real xi");
            m.ctx_ = std::make_shared<const EvalContext>(*d.lattice);
            break;
        default:
            if (d.lattice) throw Error("InvalidDescriptor", family_name(d.family) + " takes no lattice");
    }
    return m;
}

PlaneMap PlaneMap::product(const Chart1D& a, const Chart1D& b) {
    PlaneMap m;
    m.kind_ = Kind::Product;
    m.a_ = a;
    m.b_ = b;
    auto ctx = [](const Chart1D& c) -> std::shared_ptr<const EvalContext> {
        if (c.kind != Chart::Wp) return nullptr;
        if (!c.lattice) throw Error("InvalidDescriptor", "Wp chart needs a lattice");
        return std::make_shared<const EvalContext>(*c.lattice);
    };
    m.ctx_ = ctx(a);
    m.ctx_b_ = ctx(b);
    return m;
}

NumComplex PlaneMap::chart_eval(const Chart1D& c, const EvalContext* ctx, cplx z) const {
    switch (c.kind) {
        case Chart::Id: return exact(z);
        case Chart::Exp: return {std::exp(z), 4e-16 * std::abs(std::exp(z)) * (1.0 + std::abs(z))};
        case Chart::Sin: return {std::sin(z), 4e-16 * (std::abs(std::sin(z)) + std::abs(z * std::cos(z)))};
        case Chart::Wp: return ctx->wp(z);
    }
    return exact(z);
}

PairValue PlaneMap::eval(cplx u, cplx v) const {
    if (kind_ == Kind::Product) return {chart_eval(a_, ctx_.get(), u), chart_eval(b_, ctx_b_.get(), v)};

    const cplx xi = desc_.xi;
    switch (desc_.family) {
        case Family::G1: return {exact(u), exact(v)};
        case Family::G2: return {chart_eval({Chart::Exp, {}}, nullptr, u), exact(v)};
        case Family::G3:
            return {chart_eval({Chart::Exp, {}}, nullptr, u), chart_eval({Chart::Exp, {}}, nullptr, v)};
        case Family::G4: {
            const EvalContext& c = need(ctx_);
            NumComplex p = c.wp(u);
            if (xi == cplx(0.0)) return {p, exact(v)};
            NumComplex z = c.zeta(u);
            return {p, {v - xi * z.value, std::abs(xi) * z.err}};
        }
        case Family::G5: {
            const EvalContext& c = need(ctx_);
            NumComplex p = c.wp(u);
            NumComplex e = chart_eval({Chart::Exp, {}}, nullptr, v);
            if (xi == cplx(0.0)) return {p, e};
            return {p, mul(c.sigma_tilde(xi, u), e)};
        }
        case Family::G6: {
            const EvalContext& c = need(ctx_);
            NumComplex p = c.wp(u);
            NumComplex a = mul(c.sigma_tilde(xi * kI, u), chart_eval({Chart::Exp, {}}, nullptr, kI * v));
            NumComplex b = mul(c.sigma_tilde(-xi * kI, u), chart_eval({Chart::Exp, {}}, nullptr, -kI * v));
            return {p, {(a.value - b.value) / (2.0 * kI), (a.err + b.err) / 2.0}};
        }
        case Family::P6: break;
    }
    throw Error("UnsupportedFamily", "P6 is accepted for labeling only");
}

PeriodGroup PlaneMap::periods() const {
    PeriodGroup g;
    if (kind_ == Kind::Product) {
        auto add = [&](const Chart1D& c, int slot) {
            auto push = [&](cplx p) {
                Pair q{0.0, 0.0};
                q[slot] = p;
                g.generators.push_back(q);
            };
            switch (c.kind) {
                case Chart::Id: break;
                case Chart::Exp: push(k2PiI); break;
                case Chart::Sin: push(2.0 * kPi); break;
                case Chart::Wp:
                    push(c.lattice->w1());
                    push(c.lattice->w2());
                    break;
            }
        };
        add(a_, 0);
        add(b_, 1);
        g.rank = int(g.generators.size());
        return g;
    }

    const cplx xi = desc_.xi;
    switch (desc_.family) {
        case Family::G1: break;
        case Family::G2: g.generators = {{k2PiI, 0.0}}; break;
        case Family::G3: g.generators = {{k2PiI, 0.0}, {0.0, k2PiI}}; break;
        case Family::G4:
        case Family::G5:
        case Family::G6: {
            const EvalContext& c = need(ctx_);
            g.generators = {{c.lattice().w1(), xi * c.eta1()}, {c.lattice().w2(), xi * c.eta2()}};
            if (desc_.family == Family::G5) g.generators.push_back({0.0, k2PiI});
            if (desc_.family == Family::G6) {
                g.generators.push_back({0.0, 2.0 * kPi});
                g.derived = true;
            }
            break;
        }
        case Family::P6: throw Error("UnsupportedFamily", "P6 is accepted for labeling only");
    }
    g.rank = int(g.generators.size());
    return g;
}

PairValue family_eval(const FamilyDescriptor& d, cplx u, cplx v) { return PlaneMap::family(d).eval(u, v); }

PeriodGroup period_lattice(const FamilyDescriptor& d) { return PlaneMap::family(d).periods(); }

int family_rank(const FamilyDescriptor& d) {
    switch (d.family) {
        case Family::G1: return 0;
        case Family::G2: return 1;
        case Family::G3:
        case Family::G4: return 2;
        case Family::G5:
        case Family::G6: return 3;
        case Family::P6: return 4;
    }
    return 0;
}

double period_residual(const PlaneMap& f, const Pair& p, const Pair& lambda) {
    PairValue a = f.eval(p[0], p[1]);
    PairValue b = f.eval(p[0] + lambda[0], p[1] + lambda[1]);
    double r = 0.0;
    for (int k = 0; k < 2; ++k) {
        double scale = std::max({std::abs(a[k].value), std::abs(b[k].value), 1e-300});
        r = std::max(r, std::abs(b[k].value - a[k].value) / scale);
    }
    return r;
}

}  // namespace lng
