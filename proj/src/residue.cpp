#include "lng/residue.hpp"

namespace lng {

cplx anchor_point(const Lattice& sup) { return cplx(0.37, 0.11) * sup.w1(); }

NumComplex residue_value(const Lattice& sup, const Lattice& sub) {
    CosetSystem cs = coset_reps(sup, sub);
    EvalContext ctx(sub);
    NumComplex c{0.0, 0.0};
    for (std::size_t i = 1; i < cs.reps.size(); ++i) {
        NumComplex p = ctx.wp(cs.reps[i]);
        c.value += p.value;
        c.err += p.err;
    }
    return c;
}

CosetConstants residue_c(const Lattice& sup, const Lattice& sub) {
    CosetConstants k;
    k.rep_system = coset_reps(sup, sub);
    k.c = residue_value(sup, sub);
    k.anchor_u0 = anchor_point(sup);
    EvalContext big(sup), small(sub);
    const cplx u0 = k.anchor_u0;

    NumComplex zs = big.zeta(u0);
    cplx sum = 0.0;
    double err = zs.err + k.c.err * std::abs(u0);
    for (cplx a : k.rep_system.reps) {
        NumComplex z = small.zeta(u0 + a);
        sum += z.value;
        err += z.err;
    }
    k.C = {zs.value - sum - k.c.value * u0, err};

    NumComplex ss = big.sigma(u0);
    cplx prod = 1.0;
    double rel = ss.err / std::abs(ss.value);
    for (cplx a : k.rep_system.reps) {
        NumComplex s = small.sigma(u0 + a);
        prod *= s.value;
        rel += s.err / std::abs(s.value);
    }
    cplx cp = std::log(ss.value / prod) - k.c.value / 2.0 * u0 * u0 - k.C.value * u0;
    k.Cprime = {cp, rel + k.C.err * std::abs(u0) + k.c.err * std::norm(u0)};
    return k;
}

Q gen_index(const Lattice& L2, const Lattice& L1) {
    Lattice common = intersect(L1, L2);
    Q i2(sublattice_test(L2, common)), i1(sublattice_test(L1, common));
    return i2 / i1;
}

GenResidue gen_residue_via(const Lattice& L2, const Lattice& L1, const Lattice& common) {
    Q i2(sublattice_test(L2, common)), i1(sublattice_test(L1, common));
    Q idx = i2 / i1;
    NumComplex c2 = residue_value(L2, common), c1 = residue_value(L1, common);
    double r = to_double(idx);
    return {idx, {c2.value - r * c1.value, c2.err + std::abs(r) * c1.err}, common};
}

GenResidue gen_residue(const Lattice& L2, const Lattice& L1) {
    return gen_residue_via(L2, L1, intersect(L1, L2));
}

}  // namespace lng
