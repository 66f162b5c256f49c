#pragma once

// Exact Q-linear combinations over a declared independent basis:
// "1", "omega", free symbols s and their products "omega*s".

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lng/exactnum.hpp"

namespace lng {

// omega^2 = B omega + A
struct MinPoly {
    Q B, A;
};

std::optional<MinPoly> minpoly_of(const ExactScalar& omega);

class QVector {
public:
    QVector() = default;
    QVector(std::vector<std::string> basis, std::vector<Q> coords, std::optional<MinPoly> mp = std::nullopt);

    static QVector rational(const Q& r, std::optional<MinPoly> mp = std::nullopt);
    static QVector symbol(const std::string& s, std::optional<MinPoly> mp = std::nullopt);

    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<Q>& coords() const { return coords_; }
    const std::optional<MinPoly>& minpoly() const { return mp_; }
    void set_minpoly(std::optional<MinPoly> mp) { mp_ = std::move(mp); }

    Q coord(const std::string& name) const;
    void set(const std::string& name, const Q& value);
    // free symbols s (not "1", "omega" or "omega*...")
    std::vector<std::string> symbols() const;
    bool in_omega_plane() const;  // only "1" and "omega" are nonzero
    bool is_zero() const;

    QVector operator+(const QVector& o) const;
    QVector operator-(const QVector& o) const;
    QVector scaled(const Q& r) const;
    // (p + q omega) * this; q != 0 needs the minimal polynomial
    QVector times(const Q& p, const Q& q) const;

    // numeric value given omega and anchors for the symbols
    cplx value(cplx omega, const std::map<std::string, cplx>& anchors) const;

    bool operator==(const QVector& o) const;

private:
    std::vector<std::string> basis_{"1", "omega"};
    std::vector<Q> coords_{Q(0), Q(0)};
    std::optional<MinPoly> mp_;
};

// Basis element names in canonical order: 1, omega, then s, omega*s per symbol.
std::vector<std::string> canonical_basis(const std::vector<std::string>& symbols);

// Solve A x = b over Q. Returns one solution (free variables set to 0) or
// nothing when inconsistent.
std::optional<std::vector<Q>> solve_q(std::vector<std::vector<Q>> A, std::vector<Q> b);

}  // namespace lng
