"""Extended-precision reference values for the dispersion and propagator tests."""
from mpmath import mp, mpf, mpc, polyroots, sqrt, exp, pi, re, im

mp.dps = 40

def critical_u(g):
    b = 36 * g - 27 - 8 * g**2
    return sqrt((b + sqrt(b**2 + 64 * g**3 * (1 - g))) / 32)

def disc(g, u):
    return 16 * u**2 * (-16 * u**4 + (36 * g - 27 - 8 * g**2) * u**2 + g**3 * (1 - g))

def roots(g, u):
    r = polyroots([1, -2, g, 0, -u**2], maxsteps=200, extraprec=200)
    return sorted(r, key=lambda s: (abs(im(s)) < mpf(10)**-20, -im(s), re(s)))

g = mpf("0.99")
eta = sqrt(1 - g)
print("u_c(0.99) =", critical_u(g))
print("u_c(0.9) =", critical_u(mpf("0.9")))
print("disc(0.99, 1) =", disc(g, 1))
rs = roots(g, mpf(1))
for s in rs:
    print("root", s)
sp = rs[0]
pp = 2 - 4 * sp - 2 * eta**2 / (1 - sp)
print("pprime(s+) =", pp)
print("sigma(i s+/tau)/sigma0 =", 1 / (1 - sp))
# propagator at t = tau, z = ell0
G = 4j * pi * (1 - sp) / pp * exp(-sp) * exp(-sp * (1 - sp))
print("G(tau, ell0, s+) =", G)
# K_P exact at u=1, z=0, z0=ell0, T=tau
sr, si = re(sp), im(sp)
KP = re((1 - sp) * exp(1j * si * (2 * sr - 1) * (1 - 0))) / abs(pp)**2 * 16 * pi**2 * exp(-2 * sr) * exp(-(sr - sr**2 + si**2) * 1)
print("K_P(u=1,z=0,z0=l0,T=tau) =", KP)
uc = critical_u(g)
u = 2 * uc
print("K_P asym(u=2uc, T=tau, z+z0=l0) =", 16 * pi**2 * exp(-1) * exp(-mpf(1) / 4) * exp(-(u - uc)) / (32 * (u - uc)))
for g2 in [mpf("0.9"), mpf("0.99")]:
    for u in [mpf("0.3"), mpf(1), mpf(3), mpf(10)]:
        if u > critical_u(g2):
            print("s+(%s,%s) =" % (g2, u), roots(g2, u)[0])
