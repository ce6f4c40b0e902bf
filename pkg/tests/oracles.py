"""Independent reference counters for the test-suite.

Deliberately naive: plain ``itertools.product`` over colour vectors, sharing
no code with the package's counting or interpolation routines.
"""

from fractions import Fraction
from itertools import product


def colours(lam, mode):
    if mode == "signed":
        k = lam // 2
        return range(-k, k + 1)
    if mode == "balanced":
        k = lam // 2
        return [c for c in range(-k, k + 1) if c != 0]
    return range(1, lam + 1)


def count_colorings(n, edges, lam, mode="signed"):
    """Count maps c with c[b] != s*c[a] for every edge (a, b, s)."""
    total = 0
    for c in product(colours(lam, mode), repeat=n):
        if all(c[b] != s * c[a] for a, b, s in edges):
            total += 1
    return total


def newton_coefficients(points):
    """Power-basis coefficients of the interpolant, via divided differences."""
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    n = len(points)
    coef = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        coef.append(table[0])
    poly = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        nxt = [Fraction(0)] * (len(poly) + 1)
        for j, p in enumerate(poly):
            nxt[j + 1] += p
            nxt[j] -= xs[i] * p
        nxt[0] += coef[i]
        poly = nxt
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def reference_poly(n, edges, mode="signed"):
    """Chromatic polynomial coefficients by naive counting and Newton interpolation."""
    if mode == "signed":
        nodes = [2 * i + 1 for i in range(n + 1)]
    elif mode == "balanced":
        nodes = [2 * i + 2 for i in range(n + 1)]
    else:
        nodes = list(range(1, n + 2))
    coeffs = newton_coefficients([(lam, count_colorings(n, edges, lam, mode)) for lam in nodes])
    assert all(c.denominator == 1 for c in coeffs)
    return tuple(int(c) for c in coeffs)
