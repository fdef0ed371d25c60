#!/usr/bin/env python3
"""High-precision reference values used to freeze expected numbers in the C++ tests.

Independent of the C++ implementation: every value is produced with mpmath
quadrature (30 digits) straight from the defining integrals.
"""
import math
from mpmath import mp, mpf, quad, log, cos, sin, tan, atan, atanh, tanh, cosh, pi, sqrt, clsin, inf

mp.dps = 30


def delta(a, th):
    sa, ca = sin(a) ** 2, cos(a) ** 2
    f = lambda t: log(2 * (sa * cos(t) ** 2 + ca * sin(t) ** 2)) / cos(2 * t)
    lo, hi = min(th, pi / 2), max(th, pi / 2)
    k = math.ceil(float(lo / (pi / 4)))
    mids = []
    while k * pi / 4 < hi:
        if k * pi / 4 > lo:
            mids.append(k * pi / 4)
        k += 1
    v = quad(f, [lo] + mids + [hi])
    return v if th < pi / 2 else -v


def lob(x):
    return clsin(2, 2 * x) / 2


def principal_sph(a, b, g):
    L, M, N = tan(a), tan(b), tan(g)
    p = (L * L + M * M + N * N + 1) / 2
    T = -sqrt(-p + sqrt(p * p + (L * M * N) ** 2))
    return L, M, N, T, pi + atan(T)


def vol_sph_delta(a, b, g):
    *_, T, th = principal_sph(a, b, g)
    return (delta(a, th) + delta(b, th) + delta(g, th) - 2 * delta(pi / 2, th) - delta(0, th)) / 4


def vol_sph_integral(a, b, g):
    L, M, N, T, th = principal_sph(a, b, g)
    K = (1 + L * L) * (1 + M * M) * (1 + N * N)
    f = lambda t: log((t * t + L * L) * (t * t + M * M) * (t * t + N * N) / (K * t * t)) / (t * t - 1)
    pts = [-inf, T] if T < -1 else [-inf, -1, T]
    return quad(f, pts) / 4


def vol_hyp(a, b, g):
    L, M, N = tan(a), tan(b), tan(g)
    p = (L * L + M * M + N * N + 1) / 2
    th = atan(sqrt(p + sqrt(p * p + (L * M * N) ** 2)))
    D = lambda x: lob(x + th) - lob(x - th)
    return (D(a) + D(b) + D(g) - 2 * D(pi / 2) - D(0)) / 4


def dilog2(r, t):
    f = lambda x: log(1 - 2 * x * cos(t) + x * x) / x if x != 0 else -2 * cos(t)
    return -quad(f, [0, r]) / 2


def ortho(a, b, g):
    D = sqrt(cos(a) ** 2 * cos(g) ** 2 - cos(b) ** 2)
    T = sin(a) * sin(g) / D
    th = atan(T)
    S = -delta(a, th) + delta(b, th) - delta(g, th) + delta(0, th)
    X = (sin(a) * sin(g) - D) / (sin(a) * sin(g) + D)
    ser = mp.nsum(lambda n: (-X) ** n / n ** 2 * (cos(2 * n * a) - cos(2 * n * b) + cos(2 * n * g) - 1), [1, inf])
    ser += -a * a + b * b - g * g
    return S / 4, ser / 4, T


if __name__ == "__main__":
    print("lobachevsky(pi/4)        ", lob(pi / 4))
    print("2*lobachevsky(pi/4)      ", 2 * lob(pi / 4))
    print("delta(2pi/3,3pi/4)       ", delta(2 * pi / 3, 3 * pi / 4))
    print("delta(0.6pi,0.7pi)       ", delta(0.6 * pi, 0.7 * pi))
    print("delta(1.0,0.4)           ", delta(1.0, 0.4))
    print("dtilde(pi/2,3pi/4)       ", delta(pi / 2, 3 * pi / 4) + (2 * 0.75 - 1) * pi ** 2 / 4)
    print("dilog2(1,pi/2)           ", dilog2(1, pi / 2), -pi ** 2 / 48)
    r = tan(pi / 4 - 0.4)
    print("dilog rel lhs/rhs        ", delta(1.0, 0.4) - delta(1.0, pi / 4), dilog2(r, pi / 2) - dilog2(r, 2.0))
    for trip in [(2 * pi / 3, 2 * pi / 3, 3 * pi / 4), (2 * pi / 3,) * 3, (2.0, 2.3, 2.7)]:
        L, M, N, T, th = principal_sph(*trip)
        print("principal", [float(x) for x in trip], "T", T, "theta", th)
        print("  V delta   ", vol_sph_delta(*trip))
        print("  V integral", vol_sph_integral(*trip))
        print("  l_alpha   ", atan(L / T))
    print("31pi^2/576               ", 31 * pi ** 2 / 576)
    e = mpf("1e-3")
    print("V(pi/2+1e-3)^3           ", vol_sph_delta(pi / 2 + e, pi / 2 + e, pi / 2 + e))
    for a, b in [(0.9 * pi, 0.8 * pi)]:
        print("V near singular          ", vol_sph_delta(a, b, pi - mpf("1e-4")), (a + b - pi) * pi)
    print("hyp(pi/4)^3              ", vol_hyp(pi / 4, pi / 4, pi / 4))
    print("hyp(1e-4)^3              ", vol_hyp(*(mpf("1e-4"),) * 3))
    print("hyp(pi/2-1e-3)^3         ", vol_hyp(*(pi / 2 - mpf("1e-3"),) * 3))
    print("ortho(pi/3,1.4,pi/3)     ", ortho(pi / 3, 1.4, pi / 3))
    print("ortho(pi/6,pi/2,pi/6)    ", ortho(pi / 6, pi / 2, pi / 6))
    a, s = mpf("1.2"), mpf("0.8")
    tt = atan(tanh(s))
    print("lob rel (1.2,0.8)        ", delta(a, tt) - delta(a, 0), -quad(lambda x: log(1 - cos(2 * a) / cosh(2 * x)), [0, s]), "theta~", tt)
