#pragma once

// Exact scalars: rationals, elements of Q(sqrt D) and rational Moebius
// images of a named transcendental. Big integers come from GMP.

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "lng/error.hpp"

namespace lng {

using Z = mpz_class;
using Q = mpq_class;
using cplx = std::complex<double>;

Q parse_rational(const std::string& s);
std::string to_string(const Q& q);
double to_double(const Q& q);

bool is_squarefree(long D);

struct Mat2Q {
    Q a{1}, b{0}, c{0}, d{1};

    Q det() const { return a * d - b * c; }
    Mat2Q operator*(const Mat2Q& o) const;
    bool operator==(const Mat2Q& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    // adjugate, i.e. det * inverse
    Mat2Q adj() const { return {d, -b, -c, a}; }
    cplx apply(cplx t) const;
};

Mat2Q mobius_compose(const Mat2Q& m1, const Mat2Q& m2);

// x + y sqrt(D); sqrt(D) = i sqrt(|D|) for D < 0.
struct QuadElem {
    long D = -1;
    Q x{0}, y{0};

    QuadElem() = default;
    QuadElem(long D_, Q x_, Q y_);

    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
    bool is_real() const { return D > 0 || sgn(y) == 0; }
    cplx value() const;
    Q norm() const { return x * x - D * y * y; }
    bool operator==(const QuadElem& o) const { return D == o.D && x == o.x && y == o.y; }
};

enum class QuadOp { add, sub, mul, div, conj };

QuadElem quad_arith(QuadOp op, const QuadElem& a, const QuadElem& b);
QuadElem operator+(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a, const QuadElem& b);
QuadElem operator*(const QuadElem& a, const QuadElem& b);
QuadElem operator/(const QuadElem& a, const QuadElem& b);
QuadElem conj(const QuadElem& a);

// (M.a t + M.b) / (M.c t + M.d) for a transcendental t. The anchor is only
// used to put a number on t; no decision ever looks at it.
struct SymbolicOmega {
    std::string symbol;
    Mat2Q M;
    cplx anchor;

    SymbolicOmega() = default;
    SymbolicOmega(std::string sym, Mat2Q m, cplx anc);
    cplx value() const { return M.apply(anchor); }
};

class ExactScalar {
public:
    enum class Kind { rat, quad, sym };

    ExactScalar() : v_(Q(0)) {}
    ExactScalar(Q q) : v_(std::move(q)) {}
    ExactScalar(QuadElem q) : v_(std::move(q)) {}
    ExactScalar(SymbolicOmega s) : v_(std::move(s)) {}

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    const Q& rat() const { return std::get<Q>(v_); }
    const QuadElem& quad() const { return std::get<QuadElem>(v_); }
    const SymbolicOmega& sym() const { return std::get<SymbolicOmega>(v_); }

    cplx value() const;

private:
    std::variant<Q, QuadElem, SymbolicOmega> v_;
};

struct FieldSpec {
    enum class Kind { Q, Quadratic };
    Kind kind = Kind::Q;
    long D = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec quadratic(long D) { return {Kind::Quadratic, D}; }
    // K_omega: Q(omega) for quadratic omega, Q otherwise
    static FieldSpec of(const ExactScalar& omega);
    std::string name() const;
};

// rank of a rational matrix given as rows
std::size_t rank_q(std::vector<std::vector<Q>> rows);

bool linear_independent(const FieldSpec& field, const std::vector<ExactScalar>& values);

}  // namespace lng
