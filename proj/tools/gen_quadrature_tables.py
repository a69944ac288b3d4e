#!/usr/bin/env python3
"""Generate triangle quadrature tables embedded in src/quadrature_tables.inc.

Degrees 1 and 2 use the classic centroid and three-point symmetric rules.
Higher degrees use a conical product construction: Gauss-Jacobi(1,0) points
in one direction crossed with Gauss-Legendre points in the other, collapsed
onto the reference triangle (0,0)-(1,0)-(0,1).  All weights are positive and
all points are strictly interior.

Nodes are computed from exact polynomial roots at 50-digit precision and the
weights from moment systems, then every rule is checked for exactness on the
full monomial basis of its degree before anything is written out.
"""

import sys
from fractions import Fraction

import mpmath as mp
import sympy as sp

mp.mp.dps = 50

OUT = "src/quadrature_tables.inc"
MAX_DEGREE = 14


def gauss_nodes_weights(n, jacobi):
    """Gauss nodes/weights on [0,1]; weight function (1-x) if jacobi else 1."""
    s = sp.Symbol("s")
    if jacobi:
        poly = sp.jacobi_poly(n, 1, 0, 2 * s - 1)
        moment = lambda p: Fraction(1, (p + 1) * (p + 2))
    else:
        poly = sp.legendre_poly(n, 2 * s - 1)
        moment = lambda p: Fraction(1, p + 1)
    coeffs = [mp.mpf(sp.Rational(c).p) / mp.mpf(sp.Rational(c).q)
              for c in sp.Poly(poly, s).all_coeffs()]
    nodes = sorted(r.real for r in mp.polyroots(coeffs, maxsteps=200, extraprec=200))
    vander = mp.matrix([[nodes[i] ** p for i in range(n)] for p in range(n)])
    rhs = mp.matrix([mp.mpf(moment(p).numerator) / mp.mpf(moment(p).denominator)
                     for p in range(n)])
    weights = mp.lu_solve(vander, rhs)
    return nodes, [weights[i] for i in range(n)]


def conical_rule(degree):
    n = (degree + 2) // 2  # 2n-1 >= degree
    aj, wj = gauss_nodes_weights(n, jacobi=True)
    bl, wl = gauss_nodes_weights(n, jacobi=False)
    pts = []
    for i in range(n):
        for j in range(n):
            x = aj[i]
            y = bl[j] * (1 - aj[i])
            w = wj[i] * wl[j]
            pts.append((x, y, w))
    return pts


def exact_monomial(p, q):
    """integral of x^p y^q over the reference triangle."""
    return (mp.factorial(p) * mp.factorial(q)) / mp.factorial(p + q + 2)


def check(degree, pts):
    for p in range(degree + 1):
        for q in range(degree + 1 - p):
            acc = mp.mpf(0)
            for (x, y, w) in pts:
                acc += w * (x ** p) * (y ** q)
            err = abs(acc - exact_monomial(p, q))
            if err > mp.mpf("1e-40"):
                raise RuntimeError(f"degree {degree} monomial x^{p} y^{q}: err {err}")
    total = sum(w for (_, _, w) in pts)
    if abs(total - mp.mpf(1) / 2) > mp.mpf("1e-40"):
        raise RuntimeError(f"degree {degree}: weight sum {total}")


def fmt(v):
    return mp.nstr(v, 19, strip_zeros=False)


def main():
    rules = {}
    rules[1] = [(mp.mpf(1) / 3, mp.mpf(1) / 3, mp.mpf(1) / 2)]
    rules[2] = [
        (mp.mpf(1) / 6, mp.mpf(1) / 6, mp.mpf(1) / 6),
        (mp.mpf(2) / 3, mp.mpf(1) / 6, mp.mpf(1) / 6),
        (mp.mpf(1) / 6, mp.mpf(2) / 3, mp.mpf(1) / 6),
    ]
    for d in range(3, MAX_DEGREE + 1):
        rules[d] = conical_rule(d)
    for d in range(1, MAX_DEGREE + 1):
        check(d, rules[d])

    lines = []
    lines.append("// Generated by tools/gen_quadrature_tables.py; do not edit by hand.")
    lines.append("// Each row is {x, y, weight} on the reference triangle (0,0)-(1,0)-(0,1).")
    for d in range(1, MAX_DEGREE + 1):
        pts = rules[d]
        lines.append(f"static constexpr double kTriRuleDeg{d}[][3] = {{")
        for (x, y, w) in pts:
            lines.append(f"    {{{fmt(x)}, {fmt(y)}, {fmt(w)}}},")
        lines.append("};")
    lines.append("static constexpr struct { const double (*rows)[3]; int n; } kTriRules[] = {")
    for d in range(1, MAX_DEGREE + 1):
        lines.append(f"    {{kTriRuleDeg{d}, {len(rules[d])}}},")
    lines.append("};")
    lines.append("")

    # Gauss-Legendre rules on [0,1] for time integrals, 1..5 points.
    lines.append("// Gauss-Legendre nodes/weights on [0,1], {node, weight} rows.")
    for n in range(1, 6):
        nodes, weights = gauss_nodes_weights(n, jacobi=False)
        lines.append(f"static constexpr double kGaussLegendre01N{n}[][2] = {{")
        for x, w in zip(nodes, weights):
            lines.append(f"    {{{fmt(x)}, {fmt(w)}}},")
        lines.append("};")
    lines.append("static constexpr struct { const double (*rows)[2]; int n; } kGaussLegendre01[] = {")
    for n in range(1, 6):
        lines.append(f"    {{kGaussLegendre01N{n}, {n}}},")
    lines.append("};")
    lines.append("")

    with open(OUT, "w") as f:
        f.write("\n".join(lines))
    npts = {d: len(rules[d]) for d in rules}
    print(f"wrote {OUT}; points per degree: {npts}")


if __name__ == "__main__":
    sys.exit(main())
