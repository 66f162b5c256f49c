#include "lng/weier.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace lng {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
const cplx kI{0.0, 1.0};

// Sum term(start), term(start+1), ... doubling the truncation length until
// two successive truncations agree relative to `ref`.
template <class F>
NumComplex series(F term, double ref, int start = 1) {
    cplx s = 0.0, prev = 0.0;
    double abs_sum = 0.0;
    int n = start;
    for (int len = 4; len <= (1 << 14); len *= 2) {
        for (; n < start + len; ++n) {
            cplx t = term(n);
            s += t;
            abs_sum += std::abs(t);
        }
        double diff = std::abs(s - prev);
        if (len > 4 && diff <= 0.1 * kEps * std::max(ref, std::abs(s))) return {s, diff + kEps * abs_sum};
        prev = s;
    }
    throw Error("NoConvergence", "q-series did not settle");
}

// modular-form style sums  sum n^k q^n / (1 - q^n)
NumComplex lambert(cplx q, int k) {
    return series([&](int n) { return std::pow(double(n), k) * std::pow(q, n) / (1.0 - std::pow(q, n)); }, 1.0);
}

}  // namespace

EvalContext::EvalContext(Lattice L, double target_tol) : L_(std::move(L)), tol_(target_tol) {
    if (!(tol_ > 0)) throw Error("BadTolerance", "target tolerance must be positive");
    A_ = L_.rw1();
    B_ = L_.rw2();
    tau_ = B_ / A_;
    q2_ = std::exp(2.0 * kPi * kI * tau_);
    qh_ = std::exp(kPi * kI * tau_);

    cplx E2 = 1.0 - 24.0 * lambert(q2_, 1).value;
    cplx E4 = 1.0 + 240.0 * lambert(q2_, 3).value;
    cplx E6 = 1.0 - 504.0 * lambert(q2_, 5).value;
    cplx pa = kPi / A_;
    g2_ = 4.0 / 3.0 * std::pow(pa, 4) * E4;
    g3_ = 8.0 / 27.0 * std::pow(pa, 6) * E6;
    eta_a_ = kPi * kPi * E2 / (3.0 * A_);
    // eta_b from the series at B/2, independently of the Legendre relation
    eta_b_ = eta_a_ * tau_ + 2.0 * pa * theta_logderiv(kPi * tau_ / 2.0).value;

    // back to the user's generators: (w1, w2) = R^{-1} (A, B)
    const Mat2Z& R = L_.reduction();
    long long det = R[0][0] * R[1][1] - R[0][1] * R[1][0];
    double i00 = double(R[1][1] * det), i01 = double(-R[0][1] * det);
    double i10 = double(-R[1][0] * det), i11 = double(R[0][0] * det);
    eta1_ = i00 * eta_a_ + i01 * eta_b_;
    eta2_ = i10 * eta_a_ + i11 * eta_b_;
}

int EvalContext::legendre_sign() const {
    cplx l = eta1_ * L_.w2() - eta2_ * L_.w1();
    return l.imag() >= 0 ? 1 : -1;
}

NumComplex EvalContext::eta(long long m, long long n) const {
    cplx v = double(m) * eta1_ + double(n) * eta2_;
    return {v, 8 * kEps * (std::abs(double(m) * eta1_) + std::abs(double(n) * eta2_))};
}

cplx EvalContext::eta_of(cplx lambda) const {
    Reduced r = reduce(lambda);
    return double(r.m) * eta_a_ + double(r.n) * eta_b_;
}

EvalContext::Reduced EvalContext::reduce(cplx u) const {
    cplx x = u / A_;
    double y = x.imag() / tau_.imag();
    double xr = x.real() - y * tau_.real();
    long long m = std::llround(xr), n = std::llround(y);
    return {u - double(m) * A_ - double(n) * B_, m, n};
}

double EvalContext::lattice_distance(cplx u) const {
    Reduced r = reduce(u);
    double best = std::numeric_limits<double>::infinity();
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) best = std::min(best, std::abs(r.r - double(i) * A_ - double(j) * B_));
    return best;
}

void EvalContext::check_pole(cplx u) const {
    if (lattice_distance(u) <= pole_guard())
        throw Error("PoleAt", "argument within the pole guard of a lattice point");
}

NumComplex EvalContext::theta_logderiv(cplx v) const {
    cplx cot = std::cos(v) / std::sin(v);
    NumComplex s = series([&](int n) { return std::pow(q2_, n) / (1.0 - std::pow(q2_, n)) * std::sin(2.0 * n * v); },
                          std::abs(cot));
    return {cot + 4.0 * s.value, 4.0 * s.err + kEps * std::abs(cot)};
}

NumComplex EvalContext::theta_ratio(cplx v) const {
    auto w = [&](int n) { return (n % 2 ? -1.0 : 1.0) * std::exp(kPi * kI * tau_ * double(n) * double(n + 1)); };
    NumComplex num = series([&](int n) { return w(n) * std::sin((2.0 * n + 1.0) * v); }, 0.0, 0);
    NumComplex den = series([&](int n) { return w(n) * (2.0 * n + 1.0); }, 0.0, 0);
    cplx r = num.value / den.value;
    return {r, std::abs(r) * (num.err / std::abs(num.value) + den.err / std::abs(den.value))};
}

NumComplex EvalContext::wp(cplx u) const {
    check_pole(u);
    Reduced r = reduce(u);
    cplx v = kPi * r.r / A_;
    cplx s = std::sin(v);
    cplx csc2 = 1.0 / (s * s);
    NumComplex t = series(
        [&](int n) { return double(n) * std::pow(q2_, n) / (1.0 - std::pow(q2_, n)) * std::cos(2.0 * n * v); },
        std::abs(csc2));
    cplx pa2 = (kPi / A_) * (kPi / A_);
    cplx val = -eta_a_ / A_ + pa2 * (csc2 - 8.0 * t.value);
    double err = std::abs(pa2) * (8.0 * t.err + 4 * kEps * std::abs(csc2)) + 4 * kEps * std::abs(eta_a_ / A_);
    return {val, err};
}

NumComplex EvalContext::wp_prime(cplx u) const {
    check_pole(u);
    Reduced r = reduce(u);
    cplx v = kPi * r.r / A_;
    cplx s = std::sin(v), c = std::cos(v);
    cplx lead = -2.0 * c / (s * s * s);
    NumComplex t = series(
        [&](int n) {
            return double(n) * double(n) * std::pow(q2_, n) / (1.0 - std::pow(q2_, n)) * std::sin(2.0 * n * v);
        },
        std::abs(lead));
    cplx pa3 = std::pow(kPi / A_, 3);
    cplx val = pa3 * (lead + 16.0 * t.value);
    return {val, std::abs(pa3) * (16.0 * t.err + 4 * kEps * std::abs(lead))};
}

NumComplex EvalContext::zeta(cplx u) const {
    check_pole(u);
    Reduced r = reduce(u);
    cplx v = kPi * r.r / A_;
    NumComplex ld = theta_logderiv(v);
    cplx lam_eta = double(r.m) * eta_a_ + double(r.n) * eta_b_;
    cplx val = eta_a_ * r.r / A_ + (kPi / A_) * ld.value + lam_eta;
    double err = std::abs(kPi / A_) * ld.err + 4 * kEps * (std::abs(eta_a_ * r.r / A_) + std::abs(lam_eta));
    return {val, err};
}

void EvalContext::sigma_parts(cplx u, cplx& mant, cplx& expo, double& rel_err) const {
    Reduced r = reduce(u);
    cplx v = kPi * r.r / A_;
    NumComplex tr = theta_ratio(v);
    cplx lam = double(r.m) * A_ + double(r.n) * B_;
    cplx lam_eta = double(r.m) * eta_a_ + double(r.n) * eta_b_;
    long long parity = (r.m + r.n + r.m * r.n) % 2;
    double sign = parity == 0 ? 1.0 : -1.0;
    mant = sign * (A_ / kPi) * tr.value;
    expo = eta_a_ * r.r * r.r / (2.0 * A_) + lam_eta * (r.r + lam / 2.0);
    rel_err = (tr.value == 0.0 ? 0.0 : tr.err / std::abs(tr.value)) + 8 * kEps * (1.0 + std::abs(expo));
}

NumComplex EvalContext::sigma(cplx u) const {
    cplx mant, expo;
    double rel;
    sigma_parts(u, mant, expo, rel);
    cplx val = mant * std::exp(expo);
    return {val, std::abs(val) * rel};
}

NumComplex EvalContext::sigma_tilde(cplx xi, cplx u) const {
    check_pole(u);
    if (lattice_distance(u - xi) <= pole_guard())
        throw Error("ZeroAt", "u - xi within the guard of a lattice point");
    cplx m1, e1, m2, e2;
    double r1, r2;
    sigma_parts(u - xi, m1, e1, r1);
    sigma_parts(u, m2, e2, r2);
    cplx val = (m1 / m2) * std::exp(e1 - e2);
    return {val, std::abs(val) * (r1 + r2)};
}

}  // namespace lng
