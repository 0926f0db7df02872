#!/usr/bin/env python3
"""Write the extremal doubly-even self-dual weight distribution of length n
in catalog format.

Gleason's theorem writes every doubly-even self-dual enumerator as a
polynomial in phi8 = x^8 + 14x^4y^4 + y^8 and xi24 = x^4y^4(x^4 - y^4)^4.
Forcing A_4 = ... = A_{4m} = 0 with m = floor(n/24) fixes all free
coefficients, so the extremal distribution is unique.

usage: gleason_extremal.py N [--source TEXT] > catalog/extremal_N.txt
"""
import argparse
import sys

import sympy as sp


def extremal_distribution(n):
    if n % 8:
        raise ValueError("doubly-even self-dual codes need n divisible by 8")
    x, y = sp.symbols("x y")
    phi = x**8 + 14 * x**4 * y**4 + y**8
    xi = x**4 * y**4 * (x**4 - y**4) ** 4
    m = n // 24
    free = sp.symbols(f"b1:{m + 1}") if m else ()
    w = phi ** (n // 8) + sum(c * phi ** (n // 8 - 3 * j) * xi**j for j, c in enumerate(free, 1))
    poly = sp.Poly(sp.expand(w.subs(x, 1)), y)
    if free:
        sol = sp.solve([poly.coeff_monomial(y ** (4 * i)) for i in range(1, m + 1)], free)
        poly = sp.Poly(sp.expand(w.subs(x, 1).subs(sol)), y)
    dist = {mon[0]: int(c) for mon, c in zip(poly.monoms(), poly.coeffs())}
    if sum(dist.values()) != 2 ** (n // 2) or min(dist.values()) < 0:
        raise ValueError(f"no valid extremal distribution for n={n}")
    return dist


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("n", type=int)
    ap.add_argument("--source", default="gleason-extremal")
    args = ap.parse_args()
    dist = extremal_distribution(args.n)
    d = min(w for w in dist if w > 0)
    out = sys.stdout
    out.write(f"# extremal doubly-even self-dual [{args.n},{args.n // 2},{d}] weight distribution\n")
    out.write(f"{args.n} {args.n // 2} extremal{args.n} {args.source}\n")
    for w in sorted(dist):
        out.write(f"{w} {dist[w]}\n")


if __name__ == "__main__":
    main()
