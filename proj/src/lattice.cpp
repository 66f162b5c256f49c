#include "lng/lattice.hpp"

#include <cmath>
#include <numeric>

namespace lng {

bool Frame::operator==(const Frame& o) const {
    return omega == o.omega && scale == o.scale && conj_negates == o.conj_negates;
}

namespace {

Mat2Q inverse(const Mat2Q& m) {
    Q det = m.det();
    if (sgn(det) == 0) throw Error("DegenerateLattice", "singular basis matrix");
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

bool is_integral(const Q& q) { return q.get_den() == 1; }

Z num_of(const Q& q) { return q.get_num(); }

Z lcm_den(const Mat2Q& m) {
    Z l = 1;
    for (const Q* q : {&m.a, &m.b, &m.c, &m.d}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den_mpz_t());
    return l;
}

Z floor_div(const Z& a, const Z& b) {
    Z q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Lattice from_rows(const Frame& f, const std::vector<Z>& r0, const std::vector<Z>& r1, const Z& den) {
    return Lattice(f, Mat2Q{Q(r0[0], den), Q(r0[1], den), Q(r1[0], den), Q(r1[1], den)});
}

}  // namespace

Lattice::Lattice(Frame frame, Mat2Q basis) : frame_(std::move(frame)), basis_(std::move(basis)) {
    for (Q* q : {&basis_.a, &basis_.b, &basis_.c, &basis_.d}) q->canonicalize();
    w_[0] = frame_.scale * (to_double(basis_.a) + to_double(basis_.b) * frame_.omega);
    w_[1] = frame_.scale * (to_double(basis_.c) + to_double(basis_.d) * frame_.omega);
    if (sgn(basis_.det()) == 0 || std::abs(w_[0]) == 0.0)
        throw Error("DegenerateLattice", "generators are dependent over R");
    cplx t = w_[1] / w_[0];
    if (std::fabs(t.imag()) <= 1e-14 * std::abs(t))
        throw Error("DegenerateLattice", "generators are dependent over R");

    // Gauss reduction of tau with the integer change of basis tracked.
    red_ = {{{1, 0}, {0, 1}}};
    if (t.imag() < 0) red_ = {{{0, 1}, {1, 0}}};
    auto gen = [&](int k) { return double(red_[k][0]) * w_[0] + double(red_[k][1]) * w_[1]; };
    for (int it = 0; it < 10000; ++it) {
        cplx tau = gen(1) / gen(0);
        long long n = std::llround(tau.real());
        red_[1][0] -= n * red_[0][0];
        red_[1][1] -= n * red_[0][1];
        tau = gen(1) / gen(0);
        if (std::norm(tau) < 1.0 - 1e-14) {
            auto r0 = red_[0];
            red_[0] = red_[1];
            red_[1] = {-r0[0], -r0[1]};
        } else {
            break;
        }
    }
    rw_ = {gen(0), gen(1)};
}

Lattice Lattice::numeric(cplx w1, cplx w2) {
    Frame f;
    if (std::abs(w1) == 0.0) throw Error("DegenerateLattice", "zero generator");
    f.omega = w2 / w1;
    f.scale = w1;
    return Lattice(f, Mat2Q{});
}

Lattice Lattice::unit(const ExactScalar& omega) {
    Frame f;
    switch (omega.kind()) {
    case ExactScalar::Kind::rat:
        throw Error("DegenerateLattice", "real omega");
    case ExactScalar::Kind::quad: {
        const QuadElem& q = omega.quad();
        if (q.is_real()) throw Error("DegenerateLattice", "real omega");
        f.exact = ExactScalar(QuadElem(q.D, Q(0), Q(1)));
        f.omega = f.exact->value();
        f.conj_negates = true;
        return Lattice(f, Mat2Q{Q(1), Q(0), q.x, q.y});
    }
    case ExactScalar::Kind::sym:
        f.exact = omega;
        f.omega = omega.value();
        return Lattice(f, Mat2Q{});
    }
    return Lattice(f, Mat2Q{});
}

Lattice Lattice::from_exact(const ExactScalar& w1, const ExactScalar& w2) {
    using K = ExactScalar::Kind;
    auto quad_coords = [](const ExactScalar& e) -> std::pair<Q, Q> {
        if (e.kind() == K::rat) return {e.rat(), Q(0)};
        return {e.quad().x, e.quad().y};
    };
    if (w1.kind() != K::sym && w2.kind() != K::sym) {
        long D = 0;
        for (const auto* e : {&w1, &w2})
            if (e->kind() == K::quad && sgn(e->quad().y) != 0) {
                if (D != 0 && D != e->quad().D) throw Error("IncompatibleRepresentations", "different quadratic fields");
                D = e->quad().D;
            }
        if (D == 0 || D > 0) throw Error("DegenerateLattice", "generators are dependent over R");
        Frame f;
        f.exact = ExactScalar(QuadElem(D, Q(0), Q(1)));
        f.omega = f.exact->value();
        f.conj_negates = true;
        auto [x1, y1] = quad_coords(w1);
        auto [x2, y2] = quad_coords(w2);
        return Lattice(f, Mat2Q{x1, y1, x2, y2});
    }
    // symbolic: the frame is the Q-plane Q + Q s for one symbolic s; a
    // second symbolic generator must be affine in the first
    const ExactScalar& s = w1.kind() == K::sym ? w1 : w2;
    if ((w1.kind() == K::quad && sgn(w1.quad().y) != 0) || (w2.kind() == K::quad && sgn(w2.quad().y) != 0))
        throw Error("IncompatibleRepresentations", "quadratic and symbolic generators mixed");
    Frame f;
    f.exact = s;
    f.omega = s.value();
    auto coords = [&](const ExactScalar& e) -> std::pair<Q, Q> {
        if (e.kind() != K::sym) return quad_coords(e);
        if (e.sym().symbol != s.sym().symbol)
            throw Error("IncompatibleRepresentations", "generators use different symbols");
        Mat2Q N = e.sym().M * s.sym().M.adj();
        if (sgn(N.c) != 0)
            throw Error("IncompatibleRepresentations", "generator is not affine in the frame symbol");
        return {N.b / N.d, N.a / N.d};
    };
    auto [x1, y1] = coords(w1);
    auto [x2, y2] = coords(w2);
    return Lattice(f, Mat2Q{x1, y1, x2, y2});
}

Lattice Lattice::real_type(const ExactScalar& a) {
    cplx av = a.value();
    if (std::fabs(av.imag()) > 1e-15 * std::abs(av) || av.real() == 0.0)
        throw Error("DegenerateLattice", "a must be a nonzero real");
    Frame f;
    f.conj_negates = true;
    if (a.kind() == ExactScalar::Kind::rat) {
        f.exact = ExactScalar(QuadElem(-1, Q(0), Q(1)));
        f.omega = {0.0, 1.0};
        return Lattice(f, Mat2Q{Q(1), Q(0), Q(0), a.rat()});
    }
    f.omega = {0.0, av.real()};
    return Lattice(f, Mat2Q{});
}

cplx Lattice::point(const Q& m, const Q& n) const {
    Q x = m * basis_.a + n * basis_.c;
    Q y = m * basis_.b + n * basis_.d;
    return frame_.scale * (to_double(x) + to_double(y) * frame_.omega);
}

Lattice Lattice::transformed(const Mat2Q& N) const { return Lattice(frame_, N * basis_); }

Lattice Lattice::scaled(const Q& r) const { return transformed(Mat2Q{r, Q(0), Q(0), r}); }

Lattice Lattice::times(const QuadElem& k) const {
    if (!frame_.exact || frame_.exact->kind() != ExactScalar::Kind::quad || frame_.exact->quad().D != k.D)
        throw Error("IncompatibleRepresentations", "multiplier outside the frame field");
    auto mul = [&](const Q& x, const Q& y) { return QuadElem(k.D, x, y) * k; };
    QuadElem r0 = mul(basis_.a, basis_.b), r1 = mul(basis_.c, basis_.d);
    return Lattice(frame_, Mat2Q{r0.x, r0.y, r1.x, r1.y});
}

Lattice Lattice::rescaled(cplx a) const {
    Frame f = frame_;
    f.scale *= a;
    return Lattice(f, basis_);
}

Lattice Lattice::conjugate() const {
    if (!frame_.conj_negates || frame_.scale.imag() != 0.0)
        throw Error("ConjugateUnknown", "conjugation does not act on this frame exactly");
    return Lattice(frame_, Mat2Q{basis_.a, -basis_.b, basis_.c, -basis_.d});
}

Q Lattice::covolume_ratio(const Lattice& other) const {
    if (!(frame_ == other.frame_)) throw Error("NotCommensurable", "lattices live in different frames");
    return abs(other.basis_.det()) / abs(basis_.det());
}

std::pair<cplx, cplx> normalize(const Lattice& L) {
    cplx t = L.w2() / L.w1();
    if (t.imag() > 0) return {L.w1(), t};
    return {L.w2(), L.w1() / L.w2()};
}

std::optional<Mat2Q> change_of_basis(const Lattice& sup, const Lattice& sub) {
    if (sup.frame() == sub.frame()) return sub.basis() * inverse(sup.basis());
    // different frames: numeric solve, accepted only when integral
    cplx a = sup.w1(), b = sup.w2();
    double det = a.real() * b.imag() - a.imag() * b.real();
    Mat2Q M;
    Q* out[2][2] = {{&M.a, &M.b}, {&M.c, &M.d}};
    for (int k = 0; k < 2; ++k) {
        cplx z = k == 0 ? sub.w1() : sub.w2();
        double m = (z.real() * b.imag() - z.imag() * b.real()) / det;
        double n = (a.real() * z.imag() - a.imag() * z.real()) / det;
        double rm = std::round(m), rn = std::round(n);
        double tol = 1e-9 * (1.0 + std::fabs(m) + std::fabs(n));
        if (std::fabs(m - rm) > tol || std::fabs(n - rn) > tol) return std::nullopt;
        *out[k][0] = Q(static_cast<long>(rm));
        *out[k][1] = Q(static_cast<long>(rn));
    }
    return M;
}

Z sublattice_test(const Lattice& sup, const Lattice& sub) {
    auto M = change_of_basis(sup, sub);
    if (!M || !is_integral(M->a) || !is_integral(M->b) || !is_integral(M->c) || !is_integral(M->d))
        throw Error("NotContained", "change of basis is not integral");
    Q det = abs(M->det());
    return det.get_num();
}

void hermite_rows(std::vector<std::vector<Z>>& A, std::size_t pivot_cols) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < A.size(); ++col) {
        for (std::size_t r = row + 1; r < A.size(); ++r) {
            if (sgn(A[r][col]) == 0) continue;
            if (sgn(A[row][col]) == 0) {
                std::swap(A[row], A[r]);
                continue;
            }
            Z g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), A[row][col].get_mpz_t(), A[r][col].get_mpz_t());
            Z u = A[row][col] / g, v = A[r][col] / g;
            for (std::size_t k = 0; k < A[row].size(); ++k) {
                Z top = s * A[row][k] + t * A[r][k];
                Z bot = -v * A[row][k] + u * A[r][k];
                A[row][k] = top;
                A[r][k] = bot;
            }
        }
        if (sgn(A[row][col]) == 0) continue;
        if (sgn(A[row][col]) < 0)
            for (auto& x : A[row]) x = -x;
        for (std::size_t r = 0; r < row; ++r) {
            Z q = floor_div(A[r][col], A[row][col]);
            if (sgn(q) == 0) continue;
            for (std::size_t k = 0; k < A[r].size(); ++k) A[r][k] -= q * A[row][k];
        }
        ++row;
    }
}

CosetSystem coset_reps(const Lattice& sup, const Lattice& sub) {
    Z n = sublattice_test(sup, sub);
    Mat2Q M = *change_of_basis(sup, sub);
    std::vector<std::vector<Z>> H = {{M.a.get_num(), M.b.get_num()}, {M.c.get_num(), M.d.get_num()}};
    hermite_rows(H, 2);
    CosetSystem cs;
    cs.index = n;
    long h0 = H[0][0].get_si(), h1 = H[1][1].get_si();
    for (long j = 0; j < h1; ++j)
        for (long i = 0; i < h0; ++i) {
            cs.rep_coords.push_back({Z(i), Z(j)});
            cs.reps.push_back(sup.point(Q(i), Q(j)));
        }
    return cs;
}

bool contains(const Lattice& L, cplx z) {
    cplx a = L.w1(), b = L.w2();
    double det = a.real() * b.imag() - a.imag() * b.real();
    double x = (z.real() * b.imag() - z.imag() * b.real()) / det;
    double y = (a.real() * z.imag() - a.imag() * z.real()) / det;
    double tol = 1e-9 * (1.0 + std::fabs(x) + std::fabs(y));
    return std::fabs(x - std::round(x)) < tol && std::fabs(y - std::round(y)) < tol;
}

Lattice hermite_reduced(const Lattice& L) {
    const Mat2Q& B = L.basis();
    Z den = lcm_den(B);
    std::vector<std::vector<Z>> H = {{num_of(B.a * den), num_of(B.b * den)},
                                     {num_of(B.c * den), num_of(B.d * den)}};
    hermite_rows(H, 2);
    return from_rows(L.frame(), H[0], H[1], den);
}

Lattice intersect(const Lattice& L1, const Lattice& L2) {
    if (!(L1.frame() == L2.frame())) throw Error("NotCommensurable", "lattices live in different frames");
    const Mat2Q& B1 = L1.basis();
    const Mat2Q& B2 = L2.basis();
    Z den = lcm_den(B1);
    Z d2 = lcm_den(B2);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d2.get_mpz_t());
    auto zrow = [&](const Q& x, const Q& y, int k) {
        std::vector<Z> r = {num_of(x * den), num_of(y * den), 0, 0, 0, 0};
        r[2 + k] = 1;
        return r;
    };
    std::vector<std::vector<Z>> A = {zrow(B1.a, B1.b, 0), zrow(B1.c, B1.d, 1), zrow(B2.a, B2.b, 2),
                                     zrow(B2.c, B2.d, 3)};
    hermite_rows(A, 2);
    // rows 2,3 now span the relations x B1 + y B2 = 0
    std::vector<std::vector<Z>> gens;
    for (int r = 2; r < 4; ++r) {
        const Z& x0 = A[r][2];
        const Z& x1 = A[r][3];
        Q gx = x0 * B1.a + x1 * B1.c, gy = x0 * B1.b + x1 * B1.d;
        gens.push_back({num_of(gx * den), num_of(gy * den)});
    }
    hermite_rows(gens, 2);
    return from_rows(L1.frame(), gens[0], gens[1], den);
}

namespace {

Witness clear_denominators(const Q& a, const Q& b, const Q& c, const Q& d) {
    Z l = 1;
    for (const Q* q : {&a, &b, &c, &d}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den_mpz_t());
    Witness w{num_of(a * l), num_of(b * l), num_of(c * l), num_of(d * l)};
    Z g = 0;
    for (const Z* z : {&w.a, &w.b, &w.c, &w.d}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z->get_mpz_t());
    if (g > 1) {
        w.a /= g; w.b /= g; w.c /= g; w.d /= g;
    }
    if (sgn(w.c) < 0 || (sgn(w.c) == 0 && sgn(w.d) < 0)) {
        w.a = -w.a; w.b = -w.b; w.c = -w.c; w.d = -w.d;
    }
    return w;
}

void require_nonreal(const ExactScalar& w) {
    cplx v = w.value();
    bool real = w.kind() == ExactScalar::Kind::rat || (w.kind() == ExactScalar::Kind::quad && w.quad().is_real()) ||
                v.imag() == 0.0;
    if (real) throw Error("DegenerateLattice", "omega must have nonzero imaginary part");
}

}  // namespace

std::optional<Witness> commensurable(const ExactScalar& omega1, const ExactScalar& omega2) {
    require_nonreal(omega1);
    require_nonreal(omega2);
    using K = ExactScalar::Kind;
    if (omega1.kind() == K::quad && omega2.kind() == K::quad) {
        const QuadElem& w1 = omega1.quad();
        const QuadElem& w2 = omega2.quad();
        if (w1.D != w2.D) return std::nullopt;
        Q v = w2.y / w1.y;
        Q u = w2.x - v * w1.x;
        return clear_denominators(v, u, Q(0), Q(1));
    }
    if (omega1.kind() == K::sym && omega2.kind() == K::sym) {
        if (omega1.sym().symbol != omega2.sym().symbol) return std::nullopt;
        Mat2Q N = omega2.sym().M * omega1.sym().M.adj();
        return clear_denominators(N.a, N.b, N.c, N.d);
    }
    return std::nullopt;
}

bool verify_witness(const ExactScalar& omega1, const ExactScalar& omega2, const Witness& w) {
    if (sgn(w.det()) == 0) return false;
    using K = ExactScalar::Kind;
    if (omega1.kind() == K::quad && omega2.kind() == K::quad) {
        const QuadElem& w1 = omega1.quad();
        const QuadElem& w2 = omega2.quad();
        if (w1.D != w2.D) return false;
        long D = w1.D;
        QuadElem lhs = w2 * (QuadElem(D, Q(w.c), Q(0)) * w1 + QuadElem(D, Q(w.d), Q(0)));
        QuadElem rhs = QuadElem(D, Q(w.a), Q(0)) * w1 + QuadElem(D, Q(w.b), Q(0));
        return lhs == rhs;
    }
    if (omega1.kind() == K::sym && omega2.kind() == K::sym) {
        if (omega1.sym().symbol != omega2.sym().symbol) return false;
        Mat2Q W{Q(w.a), Q(w.b), Q(w.c), Q(w.d)};
        Mat2Q P = W * omega1.sym().M;
        const Mat2Q& M2 = omega2.sym().M;
        // proportional matrices give the same Moebius map
        return P.a * M2.b == P.b * M2.a && P.a * M2.c == P.c * M2.a && P.a * M2.d == P.d * M2.a &&
               P.b * M2.c == P.c * M2.b && P.b * M2.d == P.d * M2.b && P.c * M2.d == P.d * M2.c;
    }
    return false;
}

bool is_invariant(const Lattice& L) {
    Lattice C = L.conjugate();
    auto M = change_of_basis(L, C);
    return M && is_integral(M->a) && is_integral(M->b) && is_integral(M->c) && is_integral(M->d) &&
           abs(M->det()) == 1;
}

Lattice invariant_core(const Lattice& L) { return intersect(L, L.conjugate()); }

Lattice real_imag_sublattice(const Lattice& L) {
    if (!is_invariant(L)) throw Error("NotInvariant", "lattice is not closed under conjugation");
    // in a conj-negating frame with real scale: x + y omega is real iff y = 0
    // and purely imaginary iff x = 0
    const Mat2Q& B = L.basis();
    Z den = lcm_den(B);
    auto col = [&](const Q& q) { return num_of(q * den); };
    std::vector<std::vector<Z>> ry = {{col(B.b), col(B.a)}, {col(B.d), col(B.c)}};
    hermite_rows(ry, 1);
    std::vector<std::vector<Z>> rx = {{col(B.a), col(B.b)}, {col(B.c), col(B.d)}};
    hermite_rows(rx, 1);
    Z real_gen = abs(ry[1][1]), imag_gen = abs(rx[1][1]);
    return Lattice(L.frame(), Mat2Q{Q(real_gen, den), Q(0), Q(0), Q(imag_gen, den)});
}

}  // namespace lng
