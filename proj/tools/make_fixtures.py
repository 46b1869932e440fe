#!/usr/bin/env python3
"""Writes the fixture corpus under fixtures/.

Structure constants are written out by hand here rather than produced by the
library, so the corpus doubles as an independent check of the constructions
(omni-Lie algebras, semidirect products).
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

SCHEMA = "leibniz-kit/1"


def q(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def zeros3(n):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def algebra(c):
    n = len(c)
    return {"schema": SCHEMA, "dim": n, "c": [[[q(v) for v in c[i][j]] for j in range(n)] for i in range(n)]}


def matrix(m):
    return [[q(v) for v in row] for row in m]


def left_mult(c, i):
    n = len(c)
    return [[c[i][j][k] for j in range(n)] for k in range(n)]


def right_mult(c, i):
    n = len(c)
    return [[c[j][i][k] for j in range(n)] for k in range(n)]


def abelian(n):
    return zeros3(n)


def l2():
    c = zeros3(2)
    c[0][0][1] = 1
    return c


def l2_scaled():
    c = zeros3(2)
    c[0][0][1] = 2
    return c


def heis3():
    c = zeros3(3)
    c[0][1][2] = 1
    c[1][0][2] = -1
    return c


def sl2():
    h, e, f = 0, 1, 2
    c = zeros3(3)
    c[h][e][e], c[e][h][e] = 2, -2
    c[h][f][f], c[f][h][f] = -2, 2
    c[e][f][h], c[f][e][h] = 1, -1
    return c


def omni(m):
    # basis E_ab (row-major) then e_a; [A+u, B+v] = AB - BA + Av
    d = m * m + m
    c = zeros3(d)
    E = lambda a, b: a * m + b
    for a in range(m):
        for b in range(m):
            for cc in range(m):
                for dd in range(m):
                    if b == cc:
                        c[E(a, b)][E(cc, dd)][E(a, dd)] += 1
                    if dd == a:
                        c[E(a, b)][E(cc, dd)][E(cc, b)] -= 1
            c[E(a, b)][m * m + b][m * m + a] += 1
    return c


def semidirect_adjoint(c, mode):
    # g ⋉ g with l = ad_L, r = ad_R (mode "lr") or r = 0 (mode "l0")
    n = len(c)
    d = 2 * n
    h = zeros3(d)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                h[i][j][k] = c[i][j][k]
                h[i][n + j][n + k] = c[i][j][k]
                if mode == "lr":
                    h[n + j][i][n + k] = c[j][i][k]
    return h


def adjoint_rep(c, negate_r=False):
    n = len(c)
    sign = -1 if negate_r else 1
    return {
        "schema": SCHEMA,
        "vdim": n,
        "l": [matrix(left_mult(c, i)) for i in range(n)],
        "r": [matrix([[sign * v for v in row] for row in right_mult(c, i)]) for i in range(n)],
    }


def graph_map(phis):
    return {"schema": SCHEMA, "vdim": len(phis), "phi": [matrix(p) for p in phis]}


def naive(phis, thetas):
    return {"schema": SCHEMA, "vdim": len(thetas[0]) if thetas else 0,
            "phi": [matrix(p) for p in phis], "theta": [[q(v) for v in t] for t in thetas]}


def unit(n, i):
    return [1 if k == i else 0 for k in range(n)]


def main(out):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    files = {}
    for n in (1, 2, 3):
        files[f"abelian{n}.json"] = algebra(abelian(n))
    files["L2.json"] = algebra(l2())
    files["L2_scaled.json"] = algebra(l2_scaled())
    files["heis3.json"] = algebra(heis3())
    files["sl2.json"] = algebra(sl2())
    files["omni1.json"] = algebra(omni(1))
    files["omni2.json"] = algebra(omni(2))
    files["semidirect_heis3_adjoint_lr.json"] = algebra(semidirect_adjoint(heis3(), "lr"))
    files["semidirect_L2_adjoint_l0.json"] = algebra(semidirect_adjoint(l2(), "l0"))

    bad = zeros3(1)
    bad[0][0][0] = 1
    files["negative/nonleibniz_square.json"] = algebra(bad)
    files["negative/sl2_adjoint_r_negated.rep.json"] = adjoint_rep(sl2(), negate_r=True)
    files["negative/graph_scalar.json"] = graph_map([[[1]]])
    E11 = [[1, 0], [0, 0]]
    E12 = [[0, 1], [0, 0]]
    files["negative/graph_E11_E12.json"] = graph_map([E11, E12])

    files["L2_adjoint.rep.json"] = adjoint_rep(l2())
    files["heis3_adjoint.rep.json"] = adjoint_rep(heis3())
    for name, c in (("L2", l2()), ("heis3", heis3()), ("sl2", sl2())):
        files[f"graph_{name}.json"] = graph_map([left_mult(c, i) for i in range(len(c))])
    # Tautological graph representation u -> phi(u) + u over the induced algebra.
    files["L2_graph.naive.json"] = naive([left_mult(l2(), i) for i in range(2)], [unit(2, i) for i in range(2)])
    # theta = 2 id over the algebra with doubled structure constants.
    files["L2_scaled_graph.naive.json"] = naive(
        [[[2 * v for v in row] for row in left_mult(l2(), i)] for i in range(2)],
        [[2 * v for v in unit(2, i)] for i in range(2)])

    for rel, doc in files.items():
        path = out / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures")
