#include "lng/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lng {

Q parse_rational(const std::string& s) {
    Q q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw Error("BadRational", "cannot parse '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw Error("DivisionByZero", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

double to_double(const Q& q) { return q.get_d(); }

bool is_squarefree(long D) {
    if (D == 0) return false;
    unsigned long n = static_cast<unsigned long>(D < 0 ? -D : D);
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

Mat2Q Mat2Q::operator*(const Mat2Q& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

cplx Mat2Q::apply(cplx t) const {
    return (to_double(a) * t + to_double(b)) / (to_double(c) * t + to_double(d));
}

Mat2Q mobius_compose(const Mat2Q& m1, const Mat2Q& m2) {
    if (sgn(m1.det()) == 0 || sgn(m2.det()) == 0)
        throw Error("SingularMatrix", "Moebius matrix with zero determinant");
    return m1 * m2;
}

QuadElem::QuadElem(long D_, Q x_, Q y_) : D(D_), x(std::move(x_)), y(std::move(y_)) {
    if (D == 1 || !is_squarefree(D))
        throw Error("BadField", "D = " + std::to_string(D) + " is not a squarefree integer other than 0, 1");
    x.canonicalize();
    y.canonicalize();
}

cplx QuadElem::value() const {
    double r = std::sqrt(std::fabs(static_cast<double>(D)));
    if (D < 0) return {to_double(x), to_double(y) * r};
    return {to_double(x) + to_double(y) * r, 0.0};
}

QuadElem quad_arith(QuadOp op, const QuadElem& a, const QuadElem& b) {
    if (op != QuadOp::conj && a.D != b.D)
        throw Error("MismatchedField",
                    "Q(sqrt " + std::to_string(a.D) + ") vs Q(sqrt " + std::to_string(b.D) + ")");
    switch (op) {
    case QuadOp::add: return {a.D, a.x + b.x, a.y + b.y};
    case QuadOp::sub: return {a.D, a.x - b.x, a.y - b.y};
    case QuadOp::mul: return {a.D, a.x * b.x + a.D * a.y * b.y, a.x * b.y + a.y * b.x};
    case QuadOp::div: {
        Q n = b.norm();
        if (sgn(n) == 0) throw Error("DivisionByZero", "division by zero in quadratic field");
        QuadElem num = quad_arith(QuadOp::mul, a, {b.D, b.x, -b.y});
        return {a.D, num.x / n, num.y / n};
    }
    case QuadOp::conj: return {a.D, a.x, -a.y};
    }
    return a;
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) { return quad_arith(QuadOp::add, a, b); }
QuadElem operator-(const QuadElem& a, const QuadElem& b) { return quad_arith(QuadOp::sub, a, b); }
QuadElem operator*(const QuadElem& a, const QuadElem& b) { return quad_arith(QuadOp::mul, a, b); }
QuadElem operator/(const QuadElem& a, const QuadElem& b) { return quad_arith(QuadOp::div, a, b); }
QuadElem conj(const QuadElem& a) { return quad_arith(QuadOp::conj, a, a); }

SymbolicOmega::SymbolicOmega(std::string sym, Mat2Q m, cplx anc)
    : symbol(std::move(sym)), M(std::move(m)), anchor(anc) {
    if (symbol.empty()) throw Error("BadSymbol", "empty symbol name");
    if (sgn(M.det()) == 0) throw Error("SingularMatrix", "Moebius matrix with zero determinant");
}

cplx ExactScalar::value() const {
    switch (kind()) {
    case Kind::rat: return {to_double(rat()), 0.0};
    case Kind::quad: return quad().value();
    case Kind::sym: return sym().value();
    }
    return {};
}

FieldSpec FieldSpec::of(const ExactScalar& omega) {
    if (omega.kind() == ExactScalar::Kind::quad && sgn(omega.quad().y) != 0)
        return quadratic(omega.quad().D);
    return rationals();
}

std::string FieldSpec::name() const {
    if (kind == Kind::Q) return "Q";
    return "Q(sqrt(" + std::to_string(D) + "))";
}

std::size_t rank_q(std::vector<std::vector<Q>> rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size(), rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || sgn(rows[r][col]) == 0) continue;
            Q f = rows[r][col] / rows[rank][col];
            for (std::size_t k = col; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

namespace {

Q eval_mobius(const Mat2Q& M, const Q& t) { return (M.a * t + M.b) / (M.c * t + M.d); }

// Symbolic values are rational functions of degree <= 1 in one variable t.
// With r distinct poles they all live in (1/P) * Poly_{<= r}, so evaluating
// at r + 1 distinct non-poles is injective on their span.
bool independent_symbolic(const std::vector<ExactScalar>& values) {
    std::string symbol;
    std::set<Q> poles;
    for (const auto& v : values) {
        if (v.kind() != ExactScalar::Kind::sym) continue;
        if (symbol.empty()) symbol = v.sym().symbol;
        if (v.sym().symbol != symbol)
            throw Error("IncompatibleRepresentations", "values use more than one transcendental symbol");
        const Mat2Q& M = v.sym().M;
        if (sgn(M.c) != 0) poles.insert(-M.d / M.c);
    }
    std::vector<Q> points;
    for (long k = 0; points.size() < poles.size() + 1; ++k) {
        Q t(k);
        if (!poles.count(t)) points.push_back(t);
    }
    std::vector<std::vector<Q>> rows;
    for (const auto& v : values) {
        std::vector<Q> row;
        for (const auto& t : points)
            row.push_back(v.kind() == ExactScalar::Kind::rat ? v.rat() : eval_mobius(v.sym().M, t));
        rows.push_back(std::move(row));
    }
    return rank_q(rows) == values.size();
}

}  // namespace

bool linear_independent(const FieldSpec& field, const std::vector<ExactScalar>& values) {
    bool any_sym = false;
    long D = 0;
    for (const auto& v : values) {
        if (v.kind() == ExactScalar::Kind::sym) any_sym = true;
        if (v.kind() == ExactScalar::Kind::quad && sgn(v.quad().y) != 0) {
            if (D != 0 && D != v.quad().D)
                throw Error("IncompatibleRepresentations", "values from different quadratic fields");
            D = v.quad().D;
        }
    }
    if (any_sym && D != 0)
        throw Error("IncompatibleRepresentations", "quadratic and symbolic values mixed");
    if (field.kind == FieldSpec::Kind::Quadratic && D != 0 && D != field.D)
        throw Error("IncompatibleRepresentations", "values outside the declared field");

    // Q(t) and Q(sqrt D) are linearly disjoint, so the field only matters
    // when the values themselves are quadratic.
    if (any_sym) return independent_symbolic(values);

    if (field.kind == FieldSpec::Kind::Quadratic) {
        // over K every element of K is a multiple of 1
        if (values.empty()) return true;
        if (values.size() > 1) return false;
        const auto& v = values[0];
        return v.kind() == ExactScalar::Kind::rat ? sgn(v.rat()) != 0 : !v.quad().is_zero();
    }
    std::vector<std::vector<Q>> rows;
    for (const auto& v : values) {
        if (v.kind() == ExactScalar::Kind::rat)
            rows.push_back({v.rat(), Q(0)});
        else
            rows.push_back({v.quad().x, v.quad().y});
    }
    return rank_q(rows) == values.size();
}

}  // namespace lng
