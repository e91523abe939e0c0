#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ unit tests.

Everything here is evaluated with mpmath at 40 digits straight from the
closed-form definitions, independent of the C++ code paths. Re-run with
`python3 tests/oracles/reference_values.py` to regenerate.
"""
import mpmath as mp

mp.mp.dps = 40
I = mp.mpc(0, 1)


def params(nu, nu_p, speed):
    cd2 = 2 * (1 - nu_p) / (1 - 2 * nu_p)
    as2 = 1 / mp.mpf(speed) ** 2
    ad2 = as2 * cd2
    b1 = as2 / (ad2 - 1)
    b2 = ad2 / (as2 - 1)
    beta = b2 / b1
    eps = mp.log(beta) / (2 * mp.pi)
    l1 = (ad2 - as2) / ((ad2 - 1) * mp.sqrt(b2))
    l2 = (ad2 - as2) / ((as2 - 1) * mp.sqrt(b1))
    r = mp.cosh(mp.pi * eps) - l1 * l2 / 2
    ell = mp.log(r + mp.sqrt(r * r - 1)) / (2 * mp.pi)
    g1 = mp.gamma((1 - nu) / 2) / (2 ** (nu + 1) * b1 ** ((nu - 1) / 2))
    g2 = mp.gamma((1 - nu) / 2) / (cd2 * 2 ** (nu + 1) * b2 ** ((nu - 1) / 2))
    return dict(nu=mp.mpf(nu), cd2=cd2, as2=as2, ad2=ad2, b1=b1, b2=b2, beta=beta,
                eps=eps, l1=l1, l2=l2, r=r, l=ell, d1m=eps / 2 + ell,
                d1p=-eps / 2 + ell, gamma1=g1, gamma2=g2)


def coeff_b(j, s, p):
    nu, ad2, as2, b1, b2 = p['nu'], p['ad2'], p['as2'], p['b1'], p['b2']
    if j == 1:
        return ((ad2 - as2) * (s - 1) - nu * as2) / (
            2 * (ad2 - 1) * b2 ** ((1 - s) / 2) * b1 ** (s / 2))
    return ((ad2 - as2) * (s - 1) - nu * (ad2 - 2 * as2)) / (
        2 * (as2 - 1) * b1 ** ((1 - s) / 2) * b2 ** (s / 2))


def kernel_g(j, s, p):
    nu = p['nu']
    return coeff_b(j, s, p) * mp.gamma(1 - s / 2) * mp.gamma((s - nu) / 2) / (
        mp.gamma((s + 1 - nu) / 2) * mp.gamma((3 - s) / 2))


def mellin_quad(x, delta):
    return mp.quad(lambda y: y ** (I * delta) / (y + x), [0, x, 1])


def show(name, v):
    v = mp.mpc(v)
    print(f"{name:<28} {mp.nstr(v.real, 17):>26} {mp.nstr(v.imag, 17):>26}")


if __name__ == '__main__':
    p = params(mp.mpf('0.1'), mp.mpf('0.3'), mp.mpf('0.2'))
    for k in ('ad2', 'b1', 'b2', 'beta', 'eps', 'l1', 'l2', 'r', 'l', 'd1m', 'd1p',
              'gamma1', 'gamma2'):
        show(k, p[k])
    sigma = p['nu'] / 4
    for z in (mp.mpc(2.5, 1.3), mp.mpc(0.3, -4), mp.mpc(-2.7, 0.4), mp.mpc(0.01, 0),
              mp.mpc(7.5, 60), mp.mpc(-0.5, -20), mp.mpc(100, 0)):
        show(f"Gamma({mp.nstr(z, 4)})", mp.gamma(z))
    show("b1(1)", coeff_b(1, 1, p))
    show("b1(nu)", coeff_b(1, p['nu'], p))
    show("b2(1)", coeff_b(2, 1, p))
    show("b2(nu)", coeff_b(2, p['nu'], p))
    show("G1(sigma+0.7i)", kernel_g(1, sigma + 0.7 * I, p))
    show("G2(sigma-0.3i)", kernel_g(2, sigma - 0.3 * I, p))
    show("f(1, 0.025)", 4 * mp.pi * I / (mp.exp(I * mp.pi * 0.025 / 2) + mp.exp(-I * mp.pi * 0.025 / 2)))
    show("f(0.3, sigma)", 4 * mp.pi * I / (0.3 * mp.exp(I * mp.pi * sigma / 2) + mp.exp(-I * mp.pi * sigma / 2)))
    show("M(0.3, 0.204)", mellin_quad(mp.mpf('0.3'), mp.mpf('0.204')))
    show("M(1, d1m)", mellin_quad(1, p['d1m']))
    show("M(0.95, d1p)", mellin_quad(mp.mpf('0.95'), p['d1p']))
    show("M(0.05, -d1m)", mellin_quad(mp.mpf('0.05'), -p['d1m']))
    show("M(0.5, 3.0)", mellin_quad(mp.mpf('0.5'), 3))
    # diagonal entry of the "+" system, N = 50, k = 25
    xk = mp.mpf(25) / 50
    show("a_kk(N=50,k=25)", 2 * mp.pi * I * xk ** (I * p['d1m']) / kernel_g(2, sigma - I / mp.pi * mp.log(xk), p))
