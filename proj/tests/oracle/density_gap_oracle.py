#!/usr/bin/env python3
"""Independent oracle for the density gap of lattice colorings.

Recomputes, with exact arithmetic over pairs (p, q) ~ p + q*sqrt(2) of
Fractions, the smallest ell such that every subinterval of length ell of the
central half of the embedded span of a colored window contains all colors.
Used to freeze the regression baselines asserted by the acceptance suite.

Run:  python3 tests/oracle/density_gap_oracle.py
"""

from fractions import Fraction


def sign(x):
    """Exact sign of p + q*sqrt(2)."""
    p, q = x
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return (q > 0) - (q < 0)
    sp = 1 if p > 0 else -1
    sq = 1 if q > 0 else -1
    if sp == sq:
        return sp
    return sp if p * p > 2 * q * q else sq


def sub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def less(x, y):
    return sign(sub(x, y)) < 0


def density_gap(points, t):
    """points: list of ((p, q), color); returns exact ell as a (p, q) pair."""
    pts = sorted(points, key=lambda it: (float(it[0][0] + it[0][1] * 1.4142135623730951),))
    # float key is only a presort hint; fix up with exact comparisons
    for i in range(1, len(pts)):
        j = i
        while j > 0 and less(pts[j][0], pts[j - 1][0]):
            pts[j], pts[j - 1] = pts[j - 1], pts[j]
            j -= 1
    lo, hi = pts[0][0], pts[-1][0]
    span = sub(hi, lo)
    quarter = (span[0] / 4, span[1] / 4)
    core_lo = (lo[0] + quarter[0], lo[1] + quarter[1])
    core_hi = (hi[0] - quarter[0], hi[1] - quarter[1])

    ell = None
    for c in range(t):
        prev = core_lo
        best = None
        for v, vc in pts:
            if vc != c or less(v, core_lo) or less(core_hi, v):
                continue
            gap = sub(v, prev)
            if best is None or less(best, gap):
                best = gap
            prev = v
        tail = sub(core_hi, prev)
        if best is None or less(best, tail):
            best = tail
        if ell is None or less(ell, best):
            ell = best
    return ell


def fmt(x):
    p, q = x
    return f"{p} + {q}*sqrt(2)  ~= {float(p) + float(q) * 2 ** 0.5:.12f}"


def main():
    print("forced 3-coloring (a+b) mod 3 of [-W, W]^2 under sqrt(2) embedding:")
    for W in (5, 10, 20, 40):
        pts = []
        for a in range(-W, W + 1):
            for b in range(-W, W + 1):
                pts.append(((Fraction(a), Fraction(b)), (a + b) % 3))
        ell = density_gap(pts, 3)
        print(f"  W={W:3d}: ell = {fmt(ell)}")

    print("integer coloring a mod 3 on [0, 20] (rank-1 control):")
    pts = [((Fraction(a), Fraction(0)), a % 3) for a in range(0, 21)]
    print(f"  ell = {fmt(density_gap(pts, 3))}")

    print("(a+b) mod t for the family parameter t on [-20, 20]^2:")
    for t in (2, 3, 4, 5):
        pts = []
        for a in range(-20, 21):
            for b in range(-20, 21):
                pts.append(((Fraction(a), Fraction(b)), (a + b) % t))
        print(f"  t={t}: ell = {fmt(density_gap(pts, t))}")


if __name__ == "__main__":
    main()
