#pragma once

// Residue constants of a sublattice and the generalized index/residue of
// two commensurable lattices.

#include "lng/weier.hpp"

namespace lng {

struct CosetConstants {
    NumComplex c;
    NumComplex C;
    NumComplex Cprime;
    CosetSystem rep_system;
    cplx anchor_u0;
};

struct GenResidue {
    Q index;
    NumComplex qc;
    Lattice common_sub;
};

cplx anchor_point(const Lattice& sup);

// c only: sum of p_sub over the nonzero coset representatives
NumComplex residue_value(const Lattice& sup, const Lattice& sub);
CosetConstants residue_c(const Lattice& sup, const Lattice& sub);

Q gen_index(const Lattice& L2, const Lattice& L1);
GenResidue gen_residue(const Lattice& L2, const Lattice& L1);
// same quantity through a caller-chosen common sublattice
GenResidue gen_residue_via(const Lattice& L2, const Lattice& L1, const Lattice& common);

}  // namespace lng
