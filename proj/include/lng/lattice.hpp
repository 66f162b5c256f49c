#pragma once

// Rank-2 lattices in C. A lattice lives in a frame: the Q-plane
// scale * (Q + Q omega). Its generators are the rows of a rational basis
// matrix in that frame, so containment, indices and cosets are exact
// whenever two lattices share a frame.

#include <array>
#include <optional>
#include <vector>

#include "lng/exactnum.hpp"

namespace lng {

struct Frame {
    cplx omega{0.0, 1.0};
    std::optional<ExactScalar> exact;   // exact value of omega, when known
    bool conj_negates = false;          // conj(omega) = -omega, known exactly
    cplx scale{1.0, 0.0};

    bool operator==(const Frame& o) const;
};

using Mat2Z = std::array<std::array<long long, 2>, 2>;

struct Witness {
    Z a, b, c, d;
    Z det() const { return a * d - b * c; }
};

class Lattice {
public:
    Lattice(Frame frame, Mat2Q basis);

    static Lattice numeric(cplx w1, cplx w2);
    // <1, omega> in the natural frame of omega
    static Lattice unit(const ExactScalar& omega);
    // <w1, w2> from two exact generators
    static Lattice from_exact(const ExactScalar& w1, const ExactScalar& w2);
    // <1, a i> for real a
    static Lattice real_type(const ExactScalar& a);

    const Frame& frame() const { return frame_; }
    const Mat2Q& basis() const { return basis_; }
    cplx w1() const { return w_[0]; }
    cplx w2() const { return w_[1]; }
    cplx point(const Q& m, const Q& n) const;  // m w1 + n w2
    cplx point(double m, double n) const { return m * w_[0] + n * w_[1]; }

    // reduced basis: same lattice, tau = rw2 / rw1 in the standard fundamental domain
    cplx rw1() const { return rw_[0]; }
    cplx rw2() const { return rw_[1]; }
    cplx reduced_tau() const { return rw_[1] / rw_[0]; }
    // rows express (rw1, rw2) in terms of (w1, w2)
    const Mat2Z& reduction() const { return red_; }

    // generators N * basis (same frame)
    Lattice transformed(const Mat2Q& N) const;
    Lattice scaled(const Q& r) const;
    // multiply by k in Q(sqrt D); frame must be the sqrt D frame
    Lattice times(const QuadElem& k) const;
    // a * L as a numeric lattice in a rescaled frame
    Lattice rescaled(cplx a) const;
    Lattice conjugate() const;

    Q covolume_ratio(const Lattice& other) const;  // |det B_other| / |det B_this|, same frame

private:
    Frame frame_;
    Mat2Q basis_;
    std::array<cplx, 2> w_;
    std::array<cplx, 2> rw_;
    Mat2Z red_;
};

struct CosetSystem {
    Z index;
    std::vector<cplx> reps;
    std::vector<std::array<Z, 2>> rep_coords;  // in the sup basis
};

std::pair<cplx, cplx> normalize(const Lattice& L);

// change-of-basis matrix M with sub.basis = M * sup.basis, if integral
std::optional<Mat2Q> change_of_basis(const Lattice& sup, const Lattice& sub);
Z sublattice_test(const Lattice& sup, const Lattice& sub);
CosetSystem coset_reps(const Lattice& sup, const Lattice& sub);
bool contains(const Lattice& L, cplx z);

// canonical (row Hermite form) basis of L1 cap L2, same frame
Lattice intersect(const Lattice& L1, const Lattice& L2);
Lattice hermite_reduced(const Lattice& L);

std::optional<Witness> commensurable(const ExactScalar& omega1, const ExactScalar& omega2);
// omega2 = (a omega1 + b)/(c omega1 + d) checked exactly
bool verify_witness(const ExactScalar& omega1, const ExactScalar& omega2, const Witness& w);

bool is_invariant(const Lattice& L);
Lattice invariant_core(const Lattice& L);
Lattice real_imag_sublattice(const Lattice& L);

// integer row Hermite normal form of the leading `pivot_cols` columns;
// remaining columns are carried along
void hermite_rows(std::vector<std::vector<Z>>& A, std::size_t pivot_cols);

}  // namespace lng
