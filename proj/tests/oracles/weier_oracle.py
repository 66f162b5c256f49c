"""Independent oracle for the frozen values in the unit tests.

Evaluates the Weierstrass functions with mpmath's Jacobi theta functions at
50 digits, checks each value against its own sanity identities, and prints
the constants that the C++ tests compare with.
"""

import mpmath as mp

mp.mp.dps = 50


class Weier:
    def __init__(self, w1, w2):
        self.w1, self.w2 = mp.mpc(w1), mp.mpc(w2)
        if mp.im(self.w2 / self.w1) < 0:
            raise ValueError("orient w2 / w1 into the upper half plane")
        self.o1 = self.w1 / 2
        self.tau = self.w2 / self.w1
        self.q = mp.exp(1j * mp.pi * self.tau)
        t1p = mp.jtheta(1, 0, self.q, 1)
        t1ppp = mp.jtheta(1, 0, self.q, 3)
        self.t1p = t1p
        # zeta(w1 / 2)
        self.eta_half1 = -(mp.pi ** 2) / (12 * self.o1) * t1ppp / t1p
        self.eta1 = 2 * self.eta_half1
        # Legendre: eta1 w2 - eta2 w1 = 2 pi i
        self.eta2 = (self.eta1 * self.w2 - 2j * mp.pi) / self.w1

    def v(self, z):
        return mp.pi * z / (2 * self.o1)

    def sigma(self, z):
        v = self.v(z)
        return 2 * self.o1 / mp.pi * mp.exp(self.eta_half1 * z * z / (2 * self.o1)) * mp.jtheta(1, v, self.q) / self.t1p

    def zeta(self, z):
        v = self.v(z)
        return self.eta_half1 * z / self.o1 + mp.pi / (2 * self.o1) * mp.jtheta(1, v, self.q, 1) / mp.jtheta(1, v, self.q)

    def wp(self, z):
        return -mp.diff(self.zeta, z)

    def wp_prime(self, z):
        return -mp.diff(self.zeta, z, 2)

    def g2g3(self):
        # Laurent coefficients: wp = 1/z^2 + g2/20 z^2 + g3/28 z^4 + ...
        f = lambda z: self.wp(z) - 1 / z ** 2
        c = mp.taylor(f, 0, 4, method="quad", radius=abs(self.o1) / 4)
        return 20 * c[2], 28 * c[4]


def check(name, value, tol=mp.mpf("1e-30")):
    assert abs(value) < tol, (name, value)


def show(name, z):
    z = mp.mpc(z)
    print(f"{name:40s} {mp.nstr(mp.re(z), 17):>26s} {mp.nstr(mp.im(z), 17):>26s}")


def self_checks(W, u):
    check("periodic wp", W.wp(u + W.w1) - W.wp(u), mp.mpf("1e-25"))
    check("quasi-periodic zeta", W.zeta(u + W.w2) - W.zeta(u) - W.eta2, mp.mpf("1e-25"))
    g2, g3 = W.g2g3()
    ode = W.wp_prime(u) ** 2 - (4 * W.wp(u) ** 3 - g2 * W.wp(u) - g3)
    check("ode", ode, mp.mpf("1e-15") * abs(W.wp(u)) ** 3)


def main():
    sq = Weier(1, 1j)
    u = mp.mpc("0.3", "0.2")
    self_checks(sq, u)
    g2, g3 = sq.g2g3()
    show("<1,i> g2", g2)
    show("<1,i> g3", g3)
    show("<1,i> eta1", sq.eta1)
    show("<1,i> eta2", sq.eta2)
    show("<1,i> wp(0.3+0.2i)", sq.wp(u))
    show("<1,i> wp'(0.3+0.2i)", sq.wp_prime(u))
    show("<1,i> zeta(0.3+0.2i)", sq.zeta(u))
    show("<1,i> sigma(0.3+0.2i)", sq.sigma(u))
    show("<1,i> sigma(0.3+0.2i-0.1-0.4i)", sq.sigma(u - mp.mpc("0.1", "0.4")))

    gen = Weier(1, mp.mpc("0.31", "1.13"))
    u2 = mp.mpc("0.17", "-0.41")
    self_checks(gen, u2)
    g2, g3 = gen.g2g3()
    show("<1,0.31+1.13i> g2", g2)
    show("<1,0.31+1.13i> g3", g3)
    show("<1,0.31+1.13i> wp(0.17-0.41i)", gen.wp(u2))
    show("<1,0.31+1.13i> zeta(0.17-0.41i)", gen.zeta(u2))
    show("<1,0.31+1.13i> sigma(0.17-0.41i)", gen.sigma(u2))

    rho = Weier(1, mp.mpc("0.5", mp.sqrt(3) / 2))
    g2, g3 = rho.g2g3()
    show("<1,rho> g2", g2)
    show("<1,rho> g3", g3)

    # residue c(<1,i>, <1,2i>) = wp_{<1,2i>}(i)
    sub = Weier(1, 2j)
    show("c(<1,i>,<1,2i>)", sub.wp(1j))
    # residue c(<1,i>, <2,2i>) = wp(1) + wp(i) + wp(1+i) over <2,2i>
    big = Weier(2, 2j)
    show("c(<1,i>,<2,2i>)", big.wp(1) + big.wp(1j) + big.wp(1 + 1j))
    # c(<1,i>, <3,3i>) over the 8 nonzero coset representatives
    t = Weier(3, 3j)
    c3 = sum(t.wp(m + n * 1j) for m in range(3) for n in range(3) if (m, n) != (0, 0))
    show("c(<1,i>,<3,3i>)", c3)
    # qc(<1,i>, <1,2/3 i>) through the common sublattice <1,2i>:
    # index [<1,i>:<1,2i>] / [<1,2/3 i>:<1,2i>] = 2 / 3
    L1 = Weier(1, mp.mpc(0, mp.mpf(2) / 3))
    qc = sub.wp(1j) - mp.mpf(2) / 3 * (sub.wp(mp.mpc(0, mp.mpf(2) / 3)) + sub.wp(mp.mpc(0, mp.mpf(4) / 3)))
    show("qc(<1,i>,<1,2/3 i>)", qc)
    del L1


if __name__ == "__main__":
    main()
