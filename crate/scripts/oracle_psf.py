"""Reference value of the plasmonic point-spread functional at the origin.

ell0^2 J_P(0, 0) = int_{xi u_c}^inf 2 pi K_P(u) u du, with T = tau and z0
chosen so that xi u_c z0 / ell0 = 0.2 (xi = 2, gamma = 0.99).
"""
from mpmath import mp, mpf, polyroots, sqrt, exp, pi, re, im, quad, linspace

mp.dps = 30

g = mpf("0.99")
eta2 = 1 - g
b = 36 * g - 27 - 8 * g**2
uc = sqrt((b + sqrt(b**2 + 64 * g**3 * (1 - g))) / 32)
xi = 2
h = mpf("0.2") / (xi * uc)


def splus(u):
    rs = polyroots([1, -2, g, 0, -u**2], maxsteps=200, extraprec=100)
    return max(rs, key=lambda s: im(s))


def kp(u):
    s = splus(u)
    sr, si = re(s), im(s)
    pp = 2 - 4 * s - 2 * eta2 / (1 - s)
    phase = exp(1j * si * (2 * sr - 1) * h)
    return re((1 - s) * phase) / abs(pp)**2 * 16 * pi**2 * exp(-2 * sr) * exp(-(sr - sr**2 + si**2) * h)


lo = xi * uc
hi = lo + 60 / h
val = quad(lambda u: 2 * pi * kp(u) * u, linspace(lo, hi, 200))
print("ell0^2 J_P(zeta=0.2, r=0, z=0, T=tau) =", val)
