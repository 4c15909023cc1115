"""Independent computer-algebra oracle for frozen test values.

Run with `python3 -u tests/oracles/derive_goldens.py`. Uses sympy and numpy
only; shares no code with the C++ library. The printed values are frozen into
the C++ tests.

For m = 3 the implicit equation is found by interpolation: the smallest degree
D for which some nonzero polynomial of degree <= D vanishes on many sample
points of the image. Ranks are taken modulo a prime for speed.
"""
import itertools
import random

import numpy as np
import sympy as sp
from sympy.matrices.normalforms import smith_normal_form

u, v, t = sp.symbols("u v t")
y1, y2, y3 = sp.symbols("y1 y2 y3")


def psi2(rows):
    forms = [a * u + b * v for a, b in rows]
    return [sp.prod([forms[i] ** rows[i][k] for i in range(len(rows))]) for k in range(2)]


def implicit_m2(rows):
    ys = (y1, y2)
    pencils = []
    for k, expr in enumerate(psi2(rows)):
        num, den = sp.fraction(sp.together(expr))
        pencils.append(sp.expand((den * ys[k] - num).subs(v, 1)))
    res = sp.Poly(sp.resultant(pencils[0], pencils[1], u), y1, y2).primitive()[1]
    factors = sp.factor_list(res.as_expr())[1]
    keep = [f for f, _ in factors
            if sp.Poly(f, y1, y2).total_degree() > 0 and not sp.Poly(f, y1, y2).is_monomial]
    assert len(keep) == 1, keep
    return sp.expand(keep[0])


def show(name, expr):
    print(f"{name}: {sp.expand(expr)}")


B = [(1, 2), (-2, -3), (1, 0), (0, 1)]
C = [(1, 2), (0, -3), (-3, 0), (2, 1)]

dB = implicit_m2(B)
dC = implicit_m2(C)
show("Delta_B", dB)
show("Delta_C", dC)

displayed_delta_c = (-1296 * y2 * y1**3 - 8748 * y2**2 * y1**3 - 19683 * y2**3 * y1**3
                 + y2 * y1 + 4698 * y2**2 * y1**2 - 64 * y1**3 - 64 * y2**3
                 + 24 * y2**2 * y1 + 24 * y2 * y1**2 - 1296 * y2**3 * y1
                 - 8748 * y2**3 * y1**2)
print("displayed Delta_C == -Delta_C:", sp.expand(dC + displayed_delta_c) == 0)

print("psi_B(1,1) =", [e.subs({u: 1, v: 1}) for e in psi2(B)])

# Product over the cube roots of unity in the first coordinate, reduced modulo
# w^2 + w + 1.
w = sp.symbols("w")
prod = sp.expand(sp.prod([dB.subs(y1, w**k * y1) for k in range(3)]))
prod = sp.expand(sp.rem(sp.Poly(prod, w), sp.Poly(w**2 + w + 1, w)).as_expr())
assert not prod.has(w)
show("prod_eps Delta_B(eps y1, y2)", prod)
lhs = sp.expand(dC.subs({y1: y2**2 / y1**3}, simultaneous=True) * y1**9 / y2**3)
print("Laurent identity ratio:", sp.simplify(lhs / prod))

P = 1000003


def rank_mod_p(a):
    a = a.copy() % P
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), P - 2, P) % P
        others = np.nonzero(a[:, c])[0]
        for i in others:
            if i != r:
                a[i] = (a[i] - a[i, c] * a[r]) % P
        r += 1
    return r


def sample_image_mod_p(rows, count, rng):
    e0 = [-min(0, *r) for r in rows]
    pts = []
    while len(pts) < count:
        a = [rng.randrange(1, P) for _ in range(3)]
        forms = [sum(r[j] * a[j] for j in range(3)) % P for r in rows]
        if any(f == 0 for f in forms):
            continue
        f0 = 1
        for i, f in enumerate(forms):
            f0 = f0 * pow(f, e0[i], P) % P
        inv = pow(f0, P - 2, P)
        y = []
        for k in range(3):
            fk = 1
            for i, f in enumerate(forms):
                fk = fk * pow(f, rows[i][k] + e0[i], P) % P
            y.append(fk * inv % P)
        pts.append(y)
    return pts


def monomials(deg):
    return [e for e in itertools.product(range(deg + 1), repeat=3) if sum(e) <= deg]


def image_degree(rows, max_deg, seed=1):
    rng = random.Random(seed)
    for deg in range(1, max_deg + 1):
        mons = monomials(deg)
        pts = sample_image_mod_p(rows, len(mons) + 20, rng)
        a = np.array([[pow(p[0], e[0], P) * pow(p[1], e[1], P) % P * pow(p[2], e[2], P) % P
                       for e in mons] for p in pts], dtype=np.int64)
        if rank_mod_p(a) < len(mons):
            return deg
    return None


U3 = [(1, 1, 2), (1, -1, 0), (-1, 1, -1), (-1, -1, -1)]
PLANE = [(2, 1, 3), (-2, -1, -2), (1, 1, 0), (-1, -1, -1)]
NONUNIFORM = [(1, -1, 0), (1, -1, 1), (1, -1, 0), (-1, 2, 0), (-1, 1, -2), (-1, 0, 1)]
for name, rows in (("uniform4x3", U3), ("plane", PLANE), ("nonuniform", NONUNIFORM)):
    print(name, "image degree:", image_degree(rows, 14))


def psi3(rows, a):
    forms = [sum(sp.Rational(r[j]) * a[j] for j in range(3)) for r in rows]
    return [sp.prod([forms[i] ** rows[i][k] for i in range(len(rows))]) for k in range(3)]


# Exact quartic for the plane matrix from the rational nullspace.
mons = monomials(4)
rng = random.Random(7)
pts = []
while len(pts) < len(mons) + 10:
    a = [rng.randint(-50, 50) for _ in range(3)]
    if any(sum(r[j] * a[j] for j in range(3)) == 0 for r in PLANE):
        continue
    pts.append(psi3(PLANE, a))
mat = sp.Matrix([[p[0]**e[0] * p[1]**e[1] * p[2]**e[2] for e in mons] for p in pts])
ns = mat.nullspace()
print("plane quartic nullspace dim:", len(ns))
vec = ns[0] * sp.lcm([x.q for x in ns[0]])
quartic = sp.expand(sum(c * y1**e[0] * y2**e[1] * y3**e[2] for c, e in zip(vec, mons)))
show("plane quartic", quartic)
displayed = y1**2 * y3 + y1 * y2 + y1**3 + y2**2 * y3**2
val = displayed.subs(dict(zip((y1, y2, y3), psi3(PLANE, [3, -5, 7]))))
print("displayed quartic at psi(3,-5,7):", val)

# Fan triangulation from the origin of (0,0),(2,0),(1,1),(0,3).
tri = [((0, 0), (2, 0), (1, 1)), ((0, 0), (1, 1), (0, 3))]
twice = sum(abs((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])) for a, b, c in tri)
print("2*area {(2,0),(0,3),(1,1)} =", twice)

print("SNF diag:", smith_normal_form(sp.Matrix([[-3, 0], [2, 1]]), domain=sp.ZZ))
print("Res_t:", sp.resultant(t**3 - y2**3, y1 + t, t))
