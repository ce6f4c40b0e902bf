"""Signed, balanced and ordinary chromatic polynomials.

Two independent routes:

* :func:`chromatic_poly_oracle` counts proper colorings exhaustively at
  ``n + 1`` admissible arguments and interpolates.
* :func:`chromatic_poly` runs memoized deletion-contraction on positive
  edges, switching a negative edge positive when no positive one is left.

A coloring ``c`` is proper when ``c(b) != sign * c(a)`` for every edge
``ab``.  A negative loop therefore forbids colour 0 and a positive loop
forbids everything.
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetExceeded, ModeMismatch
from .graph import SignedMultigraph
from .polynomials import IntPolynomial, interpolate

MODES = ("signed", "balanced", "unsigned")
PARITY_OF_MODE = {"signed": "odd", "balanced": "even", "unsigned": "all"}

DEFAULT_MAX_COLORINGS = 10**7
DEFAULT_MAX_EDGES = 40


def _check_mode(g: SignedMultigraph, mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode == "unsigned" and not g.is_all_positive():
        raise ModeMismatch("unsigned mode requires every edge to be positive")


def palette(lam: int, mode: str) -> np.ndarray:
    """Colour set for ``lam`` colours in the given mode."""
    if lam < 1:
        raise ValueError("number of colours must be positive")
    if mode == "signed":
        if lam % 2 != 1:
            raise ModeMismatch(f"signed mode needs odd lambda, got {lam}")
        k = lam // 2
        return np.arange(-k, k + 1)
    if mode == "balanced":
        if lam % 2 != 0:
            raise ModeMismatch(f"balanced mode needs even lambda, got {lam}")
        k = lam // 2
        return np.concatenate([np.arange(-k, 0), np.arange(1, k + 1)])
    if mode == "unsigned":
        return np.arange(1, lam + 1)
    raise ValueError(f"unknown mode {mode!r}")


def count_proper(g: SignedMultigraph, lam: int, mode: str = "signed",
                 max_colorings: int = DEFAULT_MAX_COLORINGS) -> int:
    """Exhaustively count proper colorings with ``lam`` colours."""
    _check_mode(g, mode)
    colours = palette(lam, mode)
    n = g.vertex_count
    if lam ** n > max_colorings:
        raise BudgetExceeded(f"{lam}^{n} colorings exceeds budget {max_colorings}")
    if g.has_positive_loop():
        return 0
    if n == 0:
        return 1
    # vertex v varies along axis v of an n-dimensional grid
    axes = [colours.reshape([-1 if i == v else 1 for i in range(n)]) for v in range(n)]
    ok = np.ones((lam,) * n, dtype=bool)
    for a, b, s in set(g.edges):
        if a == b:
            ok &= axes[a] != 0
        else:
            ok &= axes[b] != s * axes[a]
    return int(ok.sum())


def sample_nodes(n: int, mode: str) -> list[int]:
    """The ``n + 1`` smallest admissible arguments for the mode."""
    if mode == "signed":
        return [2 * i + 1 for i in range(n + 1)]
    if mode == "balanced":
        return [2 * i + 2 for i in range(n + 1)]
    return [i + 1 for i in range(n + 1)]


def chromatic_poly_oracle(g: SignedMultigraph, mode: str = "signed",
                          max_colorings: int = DEFAULT_MAX_COLORINGS) -> IntPolynomial:
    """Brute-force counts at ``n + 1`` nodes, then exact interpolation.

    The result is checked to be monic of degree ``n`` unless a positive loop
    makes every count zero.
    """
    _check_mode(g, mode)
    n = g.vertex_count
    points = [(lam, count_proper(g, lam, mode, max_colorings)) for lam in sample_nodes(n, mode)]
    return interpolate(points, n, monic=not g.has_positive_loop(), parity=PARITY_OF_MODE[mode])


def delete_edge(g: SignedMultigraph, e: int) -> SignedMultigraph:
    if not 0 <= e < g.edge_count:
        raise IndexError(f"edge {e} out of range")
    return SignedMultigraph(g.vertex_count, g.edges[:e] + g.edges[e + 1:])


def contract_positive_edge(g: SignedMultigraph, e: int) -> SignedMultigraph:
    """Identify the endpoints of positive non-loop edge ``e`` and drop it.

    The higher endpoint merges into the lower one and later vertices shift
    down by one.  Parallel copies of ``e`` become loops of their own sign.
    """
    if not 0 <= e < g.edge_count:
        raise IndexError(f"edge {e} out of range")
    a, b, s = g.edges[e]
    if a == b:
        raise ValueError("cannot contract a loop")
    if s < 0:
        raise ValueError("only positive edges can be contracted")
    n, rest = _contract(g.vertex_count, g.edges[:e] + g.edges[e + 1:], a, b)
    return SignedMultigraph(n, rest)


def _contract(n, edges, a, b):
    def rel(x):
        if x == b:
            x = a
        return x - 1 if x > b else x

    out = []
    for x, y, s in edges:
        x, y = rel(x), rel(y)
        out.append((min(x, y), max(x, y), s))
    return n - 1, tuple(out)


def _switch(edges, v):
    return tuple((x, y, -s if (x == v) != (y == v) else s) for x, y, s in edges)


class _Engine:
    """Deletion-contraction with a per-call memo keyed on the merged edge set."""

    def __init__(self, mode: str):
        self.mode = mode
        self.memo: dict = {}
        self.lam = IntPolynomial((0, 1))
        self.lam_minus_one = IntPolynomial((-1, 1))

    def base(self, n, edges):
        # loops only
        neg = {a for a, b, s in edges if s < 0}
        if any(s > 0 for _, _, s in edges):
            return IntPolynomial(())
        if self.mode == "signed":
            return self.lam ** (n - len(neg)) * self.lam_minus_one ** len(neg)
        return self.lam ** n

    def solve(self, n, edges):
        edges = tuple(sorted(set(edges)))
        key = (n, edges)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if any(a == b and s > 0 for a, b, s in edges):
            result = IntPolynomial(())
        else:
            pos = next((i for i, (a, b, s) in enumerate(edges) if a != b and s > 0), None)
            if pos is not None:
                a, b, _ = edges[pos]
                rest = edges[:pos] + edges[pos + 1:]
                result = self.solve(n, rest) - self.solve(*_contract(n, rest, a, b))
            else:
                neg = next((e for e in edges if e[0] != e[1]), None)
                if neg is not None:
                    result = self.solve(n, _switch(edges, neg[0]))
                else:
                    result = self.base(n, edges)
        self.memo[key] = result
        return result


def chromatic_poly(g: SignedMultigraph, mode: str = "signed",
                   max_edges: int = DEFAULT_MAX_EDGES) -> IntPolynomial:
    """Chromatic polynomial in lambda by deletion-contraction.

    ``mode`` is ``"signed"`` (odd lambda, colours -k..k), ``"balanced"``
    (even lambda, colours +-1..+-k) or ``"unsigned"`` (ordinary colouring of
    an all-positive graph).
    """
    _check_mode(g, mode)
    if g.edge_count > max_edges:
        raise BudgetExceeded(f"{g.edge_count} edges exceeds deletion-contraction budget {max_edges}")
    engine = _Engine(mode)
    return engine.solve(g.vertex_count, g.edges).with_parity(PARITY_OF_MODE[mode])
