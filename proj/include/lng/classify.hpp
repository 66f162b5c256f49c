#pragma once

// Group descriptors over C and R, isomorphism deciders with explicit
// witnesses, Xi-membership and automorphism-group descriptors.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lng/painleve.hpp"
#include "lng/qvector.hpp"
#include "lng/residue.hpp"

namespace lng {

enum class Kind {
    C1_Id, C1_Exp, C1_Wp,
    C2_Product, C2_Z, C2_S, C2_Abelian,
    R1_Id, R1_Exp, R1_Sin, R1_Wp,
    R2_Product, R2_Z, R2_S, R2_T, R2_Abelian,
};

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);
bool is_real_kind(Kind k);
int kind_dimension(Kind k);

struct GroupDescriptor {
    Kind kind = Kind::C1_Id;
    // omega for complex kinds, the real a (lattice <1, a i>) for real kinds
    std::optional<ExactScalar> omega;
    std::optional<QVector> xi;
    std::map<std::string, cplx> anchors;     // numeric values of the xi symbols
    std::vector<GroupDescriptor> factors;    // products: two one-dimensional descriptors
};

// Throws InvalidDescriptor when parameters do not match the kind.
void validate(const GroupDescriptor& g);

// The lattice a descriptor's Weierstrass chart lives on: <1, omega> or <1, a i>.
Lattice descriptor_lattice(const GroupDescriptor& g);
// Numeric xi (for the real T kind this is the real xi, not xi i).
cplx descriptor_xi(const GroupDescriptor& g);

// Classification type: 1..3 for C1, 1..4 for C2 and R1, 1..5 for R2.
int classify_type(const GroupDescriptor& g);

// Chart of a one-dimensional descriptor and the representative map of a
// two-dimensional one.
Chart1D chart_of(const GroupDescriptor& g);
PlaneMap representative_map(const GroupDescriptor& g);

struct XiSolution {
    Q kp, kq;     // k = kp + kq omega
    QVector lam;  // in <1, omega>_Q
};

// xi2 = lam + k xi1 with k in K_omega^*, lam in <1, omega>_Q
std::optional<XiSolution> xi_membership(const ExactScalar& omega, const QVector& xi1, const QVector& xi2);

// (c omega1 + d) * xi2, where xi2 is written over omega2 = (a omega1 + b)/(c omega1 + d),
// expressed over omega1
QVector rebase_xi(const QVector& xi2, const Witness& w, std::optional<MinPoly> mp1);

struct IsoWitness {
    // alpha(u, v) = matrix * (u, v); one-dimensional witnesses use matrix[0][0]
    std::array<std::array<NumComplex, 2>, 2> matrix{};
    int dim = 2;
    std::optional<Witness> abcd;
    std::vector<std::string> trace;
    // M alpha(lambda) is a period of the target for every source period lambda
    long long period_multiplier = 1;
};

std::optional<IsoWitness> iso_c1(const GroupDescriptor& g1, const GroupDescriptor& g2);
std::optional<IsoWitness> iso_r1(const GroupDescriptor& g1, const GroupDescriptor& g2);
std::optional<IsoWitness> iso_c2(const GroupDescriptor& g1, const GroupDescriptor& g2);
std::optional<IsoWitness> iso_r2(const GroupDescriptor& g1, const GroupDescriptor& g2);
// dispatch on dimension and base field
std::optional<IsoWitness> isomorphic(const GroupDescriptor& g1, const GroupDescriptor& g2);

// b / a when it is rational, for real scalars
std::optional<Q> rational_ratio(const ExactScalar& b, const ExactScalar& a);

using Mat2C = std::array<std::array<cplx, 2>, 2>;

struct AutDescriptor {
    std::string case_id;  // "1".."8", with "5.1"/"5.2"/"6.1"/"6.2" splits
    std::string group;    // e.g. "Diag(Q*,C*)"
    std::string family;   // symbolic form of a one-parameter family, else empty
    std::string domain;   // parameter domain of the family
    bool one_parameter = false;
    std::function<Mat2C(const ExactScalar&)> numeric_instance;
};

AutDescriptor aut_c1(const GroupDescriptor& g);
AutDescriptor aut_r1(const GroupDescriptor& g);
AutDescriptor aut_c2(const GroupDescriptor& g);
AutDescriptor aut_r2(const GroupDescriptor& g);
AutDescriptor aut(const GroupDescriptor& g);

// max periodicity residual of f2 o alpha against the periods of f1 at
// `samples` seeded points per generator
double witness_periodicity(const GroupDescriptor& g1, const GroupDescriptor& g2, const IsoWitness& w,
                           int samples = 5, unsigned seed = 1);

}  // namespace lng
