"""Reference values for the unit tests, computed with mpmath at 40 digits.

Run: python3 tests/oracles/oracles.py
The printed literals are pasted into the C++ tests.
"""
import mpmath as mp

mp.mp.dps = 40


def show(name, v):
    v = mp.mpc(v)
    print(f"{name}: {mp.nstr(v.real, 17)} {mp.nstr(v.imag, 17)}")


# log-gamma, principal branch
for z in [0.5, 5, mp.mpc(3, 4), mp.mpc(-2.5, 0.3), mp.mpc(-20.5, -30), mp.mpc(0.1, 45)]:
    show(f"loggamma({z})", mp.loggamma(z))
show("digamma(0.3+2i)", mp.digamma(mp.mpc(0.3, 2)))
show("digamma(-3.7)", mp.digamma(-3.7))

# pFq
show("2F1(0.3,0.4;1.5;0.5)", mp.hyp2f1(0.3, 0.4, 1.5, 0.5))
show("2F1(1,1;2;0.5)", mp.hyp2f1(1, 1, 2, 0.5))
show("3F2(0.3,0.4,2;1.2,1;0.95)", mp.hyp3f2(0.3, 0.4, 2, 1.2, 1, 0.95))
show("2F1(0.7,0.8;1;0.999)", mp.hyp2f1(0.7, 0.8, 1, 0.999))
show("2F1(0.5,0.5;1;1-1e-8)", mp.hyp2f1(0.5, 0.5, 1, 1 - mp.mpf("1e-8")))
# 3F2(a,b,f+1;c,f;z) = 2F1(a,b;c;z) + ab z/(c f) 2F1(a+1,b+1;c+1;z); mpmath's generic
# hyper() fails this close to z = 1.
_f = mp.mpc(1, 0.2)
_z = 1 - mp.mpf("1e-6")
show("3F2(0.7,0.8,2+0.2i;1,1+0.2i;1-1e-6)",
     mp.hyp2f1(0.7, 0.8, 1, _z) + 0.7 * 0.8 * _z / _f * mp.hyp2f1(1.7, 1.8, 2, _z))
show("2F1(0.3+0.2i,0.4;1.5-0.1i;0.9999)", mp.hyp2f1(mp.mpc(0.3, 0.2), 0.4, mp.mpc(1.5, -0.1), 0.9999))
show("1F1(0.5;1.5;-3)", mp.hyp1f1(0.5, 1.5, -3))

# Fox-Wright 2Psi2 kernel spec: nu=1, lambda=0, h=1, delta=0, mu=1.5, a=0.3, b=0.4
c1 = 2
p0 = mp.mpf(1.5) - 0.3 - 0.4
def psi22(z):
    return mp.nsum(lambda k: mp.gamma(c1 + k) * mp.gamma(c1 + p0 + k)
                   / (mp.gamma(c1 + 1.2 + k) * mp.gamma(c1 + 1.1 + k)) * z**k / mp.factorial(k), [0, mp.inf])
show("2Psi2 kernel spec z=-1", psi22(-1))
show("2Psi2 kernel spec z=-0.7", psi22(-0.7))
show("meijerG KJ-type z=1", mp.meijerg([[1 - c1, 1 - c1 - p0], []], [[0], [1 - c1 - 1.2, 1 - c1 - 1.1]], 1))

# Kernels with nu = 1 as Meijer G functions.
def kernel_KI(mu, a, b, h, delta, lam, s, x):
    c2 = 1 + h + (delta - 1) - lam
    p = mu - a - b
    g = mp.meijerg([[], [c2 + mu - a, c2 + mu - b]], [[0, c2, c2 + p], []], s * x)
    return x ** (lam - delta) * g


def kernel_KJ(mu, a, b, h, delta, lam, s, x):
    c1 = 1 + h + lam
    p = mu - a - b
    g = mp.meijerg([[1 - c1, 1 - c1 - p], []], [[0], [1 - c1 - mu + a, 1 - c1 - mu + b]], s * x)
    return x ** (lam - delta) * g


P = dict(mu=mp.mpf("0.8"), a=mp.mpf("0.1"), b=mp.mpf("0.3"), h=mp.mpf("0.2"), delta=mp.mpf(2))
for x in [mp.mpf("0.01"), mp.mpf("0.5"), 1, 3, 12]:
    show(f"KI(lam=0.5,s=2,x={x})", kernel_KI(lam=mp.mpf("0.5"), s=2, x=x, **P))
    show(f"KI(lam=0.5,s=1.5+1i,x={x})", kernel_KI(lam=mp.mpf("0.5"), s=mp.mpc(1.5, 1), x=x, **P))
show("KI(lam=0,s=2,x=1)", kernel_KI(lam=0, s=2, x=1, **P))
Q = dict(mu=mp.mpf("0.8"), a=mp.mpf("0.1"), b=mp.mpf("0.3"), h=mp.mpf("0.2"), delta=mp.mpf("0.5"))
for x in [mp.mpf("0.01"), mp.mpf("0.5"), 2, 4, 8, 30]:
    show(f"KJ(lam=1,s=1,x={x})", kernel_KJ(lam=1, s=1, x=x, **Q))
    show(f"KJ(lam=1,s=2-1i,x={x})", kernel_KJ(lam=1, s=mp.mpc(2, -1), x=x, **Q))

# Power images.
def power_coef(mu, a, b, c, m_terms):
    return sum(w * mp.gamma(c) * mp.gamma(c + mu - a - b - k) / (mp.gamma(c + mu - a) * mp.gamma(c + mu - b))
               for k, w in m_terms)


# nu=2, h=0.5, delta=1, mu=1.2, a=0.3, b=0.4, f=[1], m=[1], lambda=0.7: A = [1, 1]
mu, a, b, nu, h = mp.mpf("1.2"), mp.mpf("0.3"), mp.mpf("0.4"), 2, mp.mpf("0.5")
c1 = 1 + h + mp.mpf("0.7") / nu
show("power_image_I example coef", power_coef(mu, a, b, c1, [(0, 1), (1, a * b)]))
# nu=1, h=0.2, delta=2, mu=0.8, a=0.1, b=0.3, lambda=0.5
mu, a, b = mp.mpf("0.8"), mp.mpf("0.1"), mp.mpf("0.3")
c2 = 1 + mp.mpf("0.2") + 1 - mp.mpf("0.5")
show("power_image_J example coef", power_coef(mu, a, b, c2, [(0, 1)]))
show("RL x^1 mu=0.5", mp.gamma(2) / mp.gamma(2.5))
show("RL at x=2", mp.gamma(2) / mp.gamma(2.5) * mp.mpf(2) ** 1.5)
show("Laplace t^0.5 s=2", mp.gamma(1.5) / mp.mpf(2) ** 1.5)


# Laplace of x^lambda I[x^p e^{-qx}] by term-wise expansion of e^{-qx} (|q| < |s|).
def lhs_series_I(mu, a, b, h, nu, delta, lam, p, q, s):
    def term(n):
        c = 1 + h + (p + n) / nu
        coef = power_coef(mu, a, b, c, [(0, 1)])
        e = lam + p + n - delta
        return (-q) ** n / mp.factorial(n) * coef * mp.gamma(e + 1) / s ** (e + 1)
    return mp.nsum(term, [0, mp.inf])


show("first-side identity lhs (nu=1,h=.2,delta=.5,mu=.8,a=.1,b=.3,lam=0,p=.5,q=1,s=2)",
     lhs_series_I(mp.mpf("0.8"), mp.mpf("0.1"), mp.mpf("0.3"), mp.mpf("0.2"), 1, mp.mpf("0.5"), 0,
                  mp.mpf("0.5"), 1, 2))
