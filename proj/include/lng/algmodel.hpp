#pragma once

// Algebraic-group labels of classified groups and the explicit projective
// embeddings of the Z and S extensions.

#include <optional>
#include <string>
#include <vector>

#include "lng/classify.hpp"

namespace lng {

struct AlgGroupLabel {
    std::string base_field;            // "C" or "R"
    std::string shape;                 // Product, ExtensionByGa, ..., SimpleAbelianSurfaceOverR
    std::vector<std::string> factors;  // Product only: Ga, Gm, SO2, EllipticCurve
    std::optional<ExactScalar> curve;  // omega, or the real a of <1, a i>
    int type = 0;                      // classification type of the descriptor

    std::string text() const;
};

AlgGroupLabel label(const GroupDescriptor& g);

struct ProjPoint {
    std::vector<NumComplex> coords;  // largest-magnitude coordinate scaled to 1
    bool pole_branch = false;
};

ProjPoint normalize(std::vector<NumComplex> coords, bool pole_branch = false);
// max coordinate difference after rescaling b to agree with a at a's largest coordinate
double proj_distance(const ProjPoint& a, const ProjPoint& b);

ProjPoint embed_p5(const EvalContext& ctx, cplx u, cplx v);
ProjPoint embed_p8(const EvalContext& ctx, cplx xi, cplx u, cplx v);

// Phi(u, v) of the S embedding
NumComplex embed_phi(const EvalContext& ctx, cplx xi, cplx u, cplx v);

}  // namespace lng
