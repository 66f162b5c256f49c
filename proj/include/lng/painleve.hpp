#pragma once

// Representative maps of the Painleve families, their period groups and
// ranks, plus products of one-dimensional charts.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lng/weier.hpp"

namespace lng {

enum class Family { G1, G2, G3, G4, G5, G6, P6 };

std::string family_name(Family f);
Family parse_family(const std::string& s);

struct FamilyDescriptor {
    Family family = Family::G1;
    std::optional<Lattice> lattice;  // G4, G5, G6
    cplx xi{0.0, 0.0};               // G4: 0 or 1; G6: real
};

using Pair = std::array<cplx, 2>;
using PairValue = std::array<NumComplex, 2>;

struct PeriodGroup {
    std::vector<Pair> generators;
    int rank = 0;
    bool derived = false;  // obtained through a chart change rather than a closed form
};

// One-dimensional charts used by product groups.
enum class Chart { Id, Exp, Sin, Wp };

struct Chart1D {
    Chart kind = Chart::Id;
    std::optional<Lattice> lattice;  // Wp only
};

// A map C^2 -> C^2 whose period group is known: a family representative
// or a product of two charts.
class PlaneMap {
public:
    static PlaneMap family(const FamilyDescriptor& d);
    static PlaneMap product(const Chart1D& a, const Chart1D& b);

    PairValue eval(cplx u, cplx v) const;
    PeriodGroup periods() const;

private:
    enum class Kind { Family, Product } kind_ = Kind::Family;
    FamilyDescriptor desc_;
    Chart1D a_, b_;
    std::shared_ptr<const EvalContext> ctx_, ctx_b_;

    NumComplex chart_eval(const Chart1D& c, const EvalContext* ctx, cplx z) const;
};

PairValue family_eval(const FamilyDescriptor& d, cplx u, cplx v);
PeriodGroup period_lattice(const FamilyDescriptor& d);
int family_rank(const FamilyDescriptor& d);

// max over coordinates of |f(p + lambda) - f(p)| relative to the larger of the two values
double period_residual(const PlaneMap& f, const Pair& p, const Pair& lambda);

}  // namespace lng
