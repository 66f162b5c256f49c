#include "lng/kernels.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lng {

int kernel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

inline void sum_terms(cplx u, cplx w, double& pr, double& pi, double& zr, double& zi) {
    cplx d = u - w;
    cplx p = 1.0 / (d * d) - 1.0 / (w * w);
    cplx z = 1.0 / d + 1.0 / w + u / (w * w);
    pr += p.real();
    pi += p.imag();
    zr += z.real();
    zi += z.imag();
}

// integer form of the linear conditions on (a, b, c, d)
struct Conditions {
    std::vector<std::array<std::int64_t, 4>> rows;
    bool impossible = false;
};

std::int64_t to_i64(const Z& z) {
    if (!z.fits_slong_p()) throw Error("Overflow", "coefficient too large for the search");
    return z.get_si();
}

void push_row(Conditions& c, std::array<Q, 4> r) {
    Z l = 1;
    for (const Q& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::array<std::int64_t, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = to_i64(Q(r[i] * l).get_num());
    if (out != std::array<std::int64_t, 4>{0, 0, 0, 0}) c.rows.push_back(out);
}

Conditions conditions(const ExactScalar& w1, const ExactScalar& w2) {
    using K = ExactScalar::Kind;
    Conditions c;
    if (w1.kind() == K::quad && w2.kind() == K::quad) {
        const QuadElem& a = w1.quad();
        const QuadElem& b = w2.quad();
        if (sgn(a.y) == 0 || sgn(b.y) == 0) throw Error("DegenerateLattice", "real omega");
        if (a.D != b.D) {
            c.impossible = true;
            return c;
        }
        QuadElem p = a * b;
        // c w1 w2 + d w2 - a w1 - b = 0, split into rational and sqrt D parts; unknown order (a, b, c, d)
        push_row(c, {-a.x, Q(-1), p.x, b.x});
        push_row(c, {-a.y, Q(0), p.y, b.y});
        return c;
    }
    if (w1.kind() == K::sym && w2.kind() == K::sym) {
        if (w1.sym().symbol != w2.sym().symbol) {
            c.impossible = true;
            return c;
        }
        const Mat2Q& M = w1.sym().M;
        const Mat2Q& N = w2.sym().M;
        auto mul = [](const Q& p, const Q& q, const Q& r, const Q& s) -> std::array<Q, 3> {
            return {p * r, p * s + q * r, q * s};
        };
        // (N.a t + N.b)(c (M.a t + M.b) + d (M.c t + M.d)) = (N.c t + N.d)(a (M.a t + M.b) + b (M.c t + M.d))
        auto ca = mul(N.c, N.d, M.a, M.b), cb = mul(N.c, N.d, M.c, M.d);
        auto cc = mul(N.a, N.b, M.a, M.b), cd = mul(N.a, N.b, M.c, M.d);
        for (int k = 0; k < 3; ++k) push_row(c, {-ca[k], -cb[k], cc[k], cd[k]});
        return c;
    }
    c.impossible = true;
    return c;
}

inline std::uint64_t rank(long x) { return x > 0 ? std::uint64_t(2 * x - 1) : std::uint64_t(-2 * x); }

inline std::uint64_t key(long a, long b, long c, long d) {
    return (rank(c) << 24) | (rank(d) << 16) | (rank(a) << 8) | rank(b);
}

inline bool satisfies(const Conditions& k, long a, long b, long c, long d) {
    if (static_cast<std::int64_t>(a) * d == static_cast<std::int64_t>(b) * c) return false;
    for (const auto& r : k.rows)
        if (r[0] * a + r[1] * b + r[2] * c + r[3] * d != 0) return false;
    return true;
}

inline long maxabs(long a, long b, long c, long d) {
    return std::max(std::max(std::labs(a), std::labs(b)), std::max(std::labs(c), std::labs(d)));
}

Witness unkey(std::uint64_t k) {
    auto un = [](std::uint64_t r) -> long { return r % 2 ? long((r + 1) / 2) : -long(r / 2); };
    return {Z(un((k >> 8) & 0xff)), Z(un(k & 0xff)), Z(un((k >> 24) & 0xff)), Z(un((k >> 16) & 0xff))};
}

void check_bound(int bound) {
    if (bound < 0 || bound > 12) throw Error("BadBound", "bound must lie in 0..12");
}

}  // namespace

LatticeSum eisenstein_sum_serial(const Lattice& L, cplx u, int N) {
    const cplx A = L.rw1(), B = L.rw2();
    double pr = 0, pi = 0, zr = 0, zi = 0;
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
            if (m == 0 && n == 0) continue;
            sum_terms(u, double(m) * A + double(n) * B, pr, pi, zr, zi);
        }
    return {1.0 / (u * u) + cplx(pr, pi), 1.0 / u + cplx(zr, zi)};
}

LatticeSum eisenstein_sum(const Lattice& L, cplx u, int N) {
    const cplx A = L.rw1(), B = L.rw2();
    double pr = 0, pi = 0, zr = 0, zi = 0;
#pragma omp parallel for reduction(+ : pr, pi, zr, zi) schedule(static)
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
            if (m == 0 && n == 0) continue;
            sum_terms(u, double(m) * A + double(n) * B, pr, pi, zr, zi);
        }
    return {1.0 / (u * u) + cplx(pr, pi), 1.0 / u + cplx(zr, zi)};
}

std::optional<Witness> brute_force_commensurable_serial(const ExactScalar& omega1, const ExactScalar& omega2,
                                                        int bound) {
    check_bound(bound);
    const Conditions k = conditions(omega1, omega2);
    if (k.impossible) return std::nullopt;
    for (long s = 1; s <= bound; ++s) {
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (long c = -s; c <= s; ++c)
            for (long d = -s; d <= s; ++d)
                for (long a = -s; a <= s; ++a)
                    for (long b = -s; b <= s; ++b) {
                        if (maxabs(a, b, c, d) != s || !satisfies(k, a, b, c, d)) continue;
                        best = std::min(best, key(a, b, c, d));
                    }
        if (best != std::numeric_limits<std::uint64_t>::max()) return unkey(best);
    }
    return std::nullopt;
}

std::optional<Witness> brute_force_commensurable(const ExactScalar& omega1, const ExactScalar& omega2, int bound) {
    check_bound(bound);
    const Conditions k = conditions(omega1, omega2);
    if (k.impossible) return std::nullopt;
    for (long s = 1; s <= bound; ++s) {
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        const long width = 2 * s + 1;
#pragma omp parallel for reduction(min : best) schedule(dynamic)
        for (long cd = 0; cd < width * width; ++cd) {
            const long c = cd / width - s, d = cd % width - s;
            for (long a = -s; a <= s; ++a)
                for (long b = -s; b <= s; ++b) {
                    if (maxabs(a, b, c, d) != s || !satisfies(k, a, b, c, d)) continue;
                    best = std::min(best, key(a, b, c, d));
                }
        }
        if (best != std::numeric_limits<std::uint64_t>::max()) return unkey(best);
    }
    return std::nullopt;
}

}  // namespace lng
