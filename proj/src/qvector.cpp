#include "lng/qvector.hpp"

#include <algorithm>
#include <set>

namespace lng {

namespace {

bool is_product(const std::string& n) { return n.rfind("omega*", 0) == 0; }

}  // namespace

std::optional<MinPoly> minpoly_of(const ExactScalar& omega) {
    if (omega.kind() != ExactScalar::Kind::quad) return std::nullopt;
    const QuadElem& w = omega.quad();
    if (sgn(w.y) == 0) return std::nullopt;
    // w^2 = 2x w - (x^2 - D y^2)
    return MinPoly{2 * w.x, -w.norm()};
}

std::vector<std::string> canonical_basis(const std::vector<std::string>& symbols) {
    std::vector<std::string> b{"1", "omega"};
    for (const auto& s : symbols) {
        b.push_back(s);
        b.push_back("omega*" + s);
    }
    return b;
}

QVector::QVector(std::vector<std::string> basis, std::vector<Q> coords, std::optional<MinPoly> mp)
    : basis_(std::move(basis)), coords_(std::move(coords)), mp_(std::move(mp)) {
    if (basis_.size() != coords_.size()) throw Error("BasisMismatch", "basis and coordinates differ in length");
    for (Q& c : coords_) c.canonicalize();
    std::set<std::string> seen;
    for (const auto& n : basis_) {
        if (n.empty()) throw Error("BasisMismatch", "empty basis name");
        if (!seen.insert(n).second) throw Error("BasisMismatch", "repeated basis name " + n);
    }
    for (const char* n : {"1", "omega"})
        if (!seen.count(n)) {
            basis_.push_back(n);
            coords_.push_back(Q(0));
        }
}

QVector QVector::rational(const Q& r, std::optional<MinPoly> mp) {
    return QVector({"1", "omega"}, {r, Q(0)}, std::move(mp));
}

QVector QVector::symbol(const std::string& s, std::optional<MinPoly> mp) {
    return QVector({"1", "omega", s}, {Q(0), Q(0), Q(1)}, std::move(mp));
}

Q QVector::coord(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == name) return coords_[i];
    return Q(0);
}

void QVector::set(const std::string& name, const Q& value) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == name) {
            coords_[i] = value;
            return;
        }
    basis_.push_back(name);
    coords_.push_back(value);
}

std::vector<std::string> QVector::symbols() const {
    std::vector<std::string> out;
    auto add = [&](const std::string& s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    for (const auto& n : basis_) {
        if (n == "1" || n == "omega") continue;
        add(is_product(n) ? n.substr(6) : n);
    }
    return out;
}

bool QVector::in_omega_plane() const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] != "1" && basis_[i] != "omega" && sgn(coords_[i]) != 0) return false;
    return true;
}

bool QVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Q& q) { return sgn(q) == 0; });
}

QVector QVector::operator+(const QVector& o) const {
    QVector r = *this;
    for (std::size_t i = 0; i < o.basis_.size(); ++i) r.set(o.basis_[i], r.coord(o.basis_[i]) + o.coords_[i]);
    if (!r.mp_) r.mp_ = o.mp_;
    return r;
}

QVector QVector::operator-(const QVector& o) const { return *this + o.scaled(Q(-1)); }

QVector QVector::scaled(const Q& r) const {
    QVector v = *this;
    for (auto& c : v.coords_) c *= r;
    return v;
}

QVector QVector::times(const Q& p, const Q& q) const {
    if (sgn(q) != 0 && !mp_) throw Error("NotQuadratic", "multiplication by omega needs a minimal polynomial");
    QVector r(canonical_basis(symbols()), std::vector<Q>(2 + 2 * symbols().size(), Q(0)), mp_);
    auto add = [&](const std::string& n, const Q& v) { r.set(n, r.coord(n) + v); };
    const Q A = mp_ ? mp_->A : Q(0), B = mp_ ? mp_->B : Q(0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Q& c = coords_[i];
        if (sgn(c) == 0) continue;
        const std::string& n = basis_[i];
        if (n == "1") {
            add("1", p * c);
            add("omega", q * c);
        } else if (n == "omega") {
            add("1", q * A * c);
            add("omega", (p + q * B) * c);
        } else if (is_product(n)) {
            std::string s = n.substr(6);
            add(s, q * A * c);
            add(n, (p + q * B) * c);
        } else {
            add(n, p * c);
            add("omega*" + n, q * c);
        }
    }
    return r;
}

cplx QVector::value(cplx omega, const std::map<std::string, cplx>& anchors) const {
    cplx s = 0.0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::string& n = basis_[i];
        cplx e;
        if (n == "1") {
            e = 1.0;
        } else if (n == "omega") {
            e = omega;
        } else {
            std::string sym = is_product(n) ? n.substr(6) : n;
            auto it = anchors.find(sym);
            if (it == anchors.end()) throw Error("MissingAnchor", "no numeric value for symbol " + sym);
            e = is_product(n) ? omega * it->second : it->second;
        }
        s += to_double(coords_[i]) * e;
    }
    return s;
}

bool QVector::operator==(const QVector& o) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (o.coord(basis_[i]) != coords_[i]) return false;
    for (std::size_t i = 0; i < o.basis_.size(); ++i)
        if (coord(o.basis_[i]) != o.coords_[i]) return false;
    return true;
}

std::optional<std::vector<Q>> solve_q(std::vector<std::vector<Q>> A, std::vector<Q> b) {
    const std::size_t m = A.size(), n = m ? A[0].size() : 0;
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && sgn(A[p][col]) == 0) ++p;
        if (p == m) continue;
        std::swap(A[p], A[row]);
        std::swap(b[p], b[row]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || sgn(A[r][col]) == 0) continue;
            Q f = A[r][col] / A[row][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[row][c];
            b[r] -= f * b[row];
        }
        pivot_col.push_back(int(col));
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (sgn(b[r]) != 0) return std::nullopt;
    std::vector<Q> x(n, Q(0));
    for (std::size_t r = 0; r < row; ++r) x[pivot_col[r]] = b[r] / A[r][pivot_col[r]];
    return x;
}

}  // namespace lng
