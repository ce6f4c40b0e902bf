"""Signed Book graphs: construction, signature classification and closed forms.

B(m, n) is n cycles of length m glued along one common edge uv; each cycle
is a page.  Vertex numbering is fixed: u = 0, v = 1 and the k-th inner
vertex of page l (both 1-based) is ``2 + (l-1)(m-2) + (k-1)``.  Edge 0 is uv;
page l then contributes the path u, u_1^l, ..., u_{m-2}^l, v in order.  The
digon book B_m^n appends a second, negative uv edge at the end.

Every formula returns a polynomial in lambda.  The path multiplier is
``x = lambda - 1`` in both parities (2k when lambda = 2k+1, 2k-1 when
lambda = 2k), which is why signed and balanced recursions share one shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import ceil
from typing import Sequence

from .chromatic import PARITY_OF_MODE
from .errors import ModeMismatch
from .graph import SignedMultigraph, apply_switching, is_automorphism, graph_isomorphisms
from .polynomials import IntPolynomial, exact_divide


@dataclass(frozen=True)
class BookSpec:
    """Parameters of a signed book.

    ``l`` negative page edges u u_1^1 .. u u_1^l give B_l(m, n); with
    ``has_uv`` the signature is uv plus u u_1^1 .. u u_1^(l-1), i.e. B*_l(m, n).
    ``digon`` selects B_m^n (uv doubled with opposite signs); m = 2 is allowed
    only there.
    """

    m: int
    n: int
    l: int = 0
    has_uv: bool = False
    digon: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a book needs at least one page")
        if self.digon:
            if self.m < 2:
                raise ValueError("digon books need m >= 2")
            if self.l or self.has_uv:
                raise ValueError("digon books carry no extra signature")
        else:
            if self.m < 3:
                raise ValueError("book pages need m >= 3")
            if not 0 <= self.l <= self.n:
                raise ValueError(f"signature size l={self.l} outside 0..{self.n}")
            if self.has_uv and self.l < 1:
                raise ValueError("a signature containing uv has size l >= 1")

    @property
    def family(self) -> str:
        if self.digon:
            return "digon"
        if self.has_uv:
            return "B*_l"
        return "B_l" if self.l else "plain"

    @property
    def vertex_count(self) -> int:
        return self.n * (self.m - 2) + 2

    def describe(self) -> str:
        if self.digon:
            return f"B_{self.m}^{self.n}"
        if self.family == "plain":
            return f"B({self.m},{self.n})"
        star = "*" if self.has_uv else ""
        return f"B{star}_{self.l}({self.m},{self.n})"


@dataclass(frozen=True)
class BookClass:
    """Switching-isomorphism class of a signature on B(m, n), labelled by its
    number of unbalanced pages."""

    unbalanced_pages: int
    canonical_rep: BookSpec


def inner_vertex(m: int, k: int, l: int) -> int:
    """Index of u_k^l (1-based k and l)."""
    return 2 + (l - 1) * (m - 2) + (k - 1)


def page_edge(m: int, l: int, step: int = 0) -> int:
    """Index of the ``step``-th edge of page l (step 0 is u u_1^l)."""
    return 1 + (l - 1) * (m - 1) + step


def vertex_names(m: int, n: int) -> list[str]:
    names = ["u", "v"]
    for l in range(1, n + 1):
        names.extend(f"u_{k}^{l}" for k in range(1, m - 1))
    return names


def book_pairs(m: int, n: int) -> list[tuple[int, int]]:
    pairs = [(0, 1)]
    for l in range(1, n + 1):
        path = [0] + [inner_vertex(m, k, l) for k in range(1, m - 1)] + [1]
        pairs.extend(zip(path, path[1:]))
    return pairs


def build_book(spec: BookSpec) -> SignedMultigraph:
    m, n = spec.m, spec.n
    pairs = book_pairs(m, n)
    negative = set()
    if spec.has_uv:
        negative.add(0)
        negative.update(page_edge(m, l) for l in range(1, spec.l))
    else:
        negative.update(page_edge(m, l) for l in range(1, spec.l + 1))
    if spec.digon:
        pairs.append((0, 1))
        negative.add(len(pairs) - 1)
    return SignedMultigraph.from_signature(spec.vertex_count, pairs, negative)


def book_automorphisms(m: int, n: int) -> list[tuple[int, ...]]:
    """Page permutations times the optional u <-> v flip (2 n! maps for n >= 2).

    For n = 1 the book is a cycle with dihedral symmetry, found by brute force.
    """
    g = build_book(BookSpec(m, n))
    if n == 1:
        return graph_isomorphisms(g, g, max_vertices=max(g.vertex_count, 10))
    out = []
    for perm in permutations(range(1, n + 1)):
        for flip in (False, True):
            psi = [1, 0] if flip else [0, 1]
            psi += [0] * (g.vertex_count - 2)
            for l in range(1, n + 1):
                for k in range(1, m - 1):
                    k2 = m - 1 - k if flip else k
                    psi[inner_vertex(m, k, l)] = inner_vertex(m, k2, perm[l - 1])
            psi = tuple(psi)
            if not is_automorphism(g, psi):
                raise AssertionError(f"generated map {psi} is not an automorphism")
            out.append(psi)
    return out


def _check_sigma(m: int, n: int, sigma: Sequence[int]) -> tuple[int, ...]:
    expected = n * (m - 1) + 1
    if len(sigma) != expected:
        raise ValueError(f"B({m},{n}) has {expected} edges; got {len(sigma)} signs")
    return tuple(sigma)


def page_signs(m: int, n: int, sigma: Sequence[int]) -> list[int]:
    """Sign of each page cycle (uv included)."""
    sigma = _check_sigma(m, n, sigma)
    out = []
    for l in range(1, n + 1):
        s = sigma[0]
        for step in range(m - 1):
            s *= sigma[page_edge(m, l, step)]
        out.append(s)
    return out


def unbalanced_pages(m: int, n: int, sigma: Sequence[int]) -> int:
    return sum(1 for s in page_signs(m, n, sigma) if s < 0)


def reduce_signature(m: int, n: int, sigma: Sequence[int]) -> tuple[tuple[int, ...], list[int]]:
    """Switch ``sigma`` so every negative edge is at u and there are at most ceil(n/2).

    Returns the reduced sign list and the switching vector producing it.
    """
    sigma = _check_sigma(m, n, sigma)
    g = SignedMultigraph.from_signature(n * (m - 2) + 2, book_pairs(m, n))
    f = [0] * g.vertex_count
    f[1] = 1
    f[0] = sigma[0]  # makes uv positive
    for l in range(1, n + 1):
        nxt = 1  # v
        for k in range(m - 2, 0, -1):
            x = inner_vertex(m, k, l)
            f[x] = sigma[page_edge(m, l, k)] * f[nxt]
            nxt = x
    if unbalanced_pages(m, n, sigma) > ceil(n / 2):
        f[0] = -f[0]
    reduced = apply_switching(g.with_signs(sigma), f).signs
    return reduced, f


def canonical_spec(m: int, n: int, t: int) -> BookSpec:
    if t == 0:
        return BookSpec(m, n)
    if t <= ceil(n / 2):
        return BookSpec(m, n, t)
    return BookSpec(m, n, n + 1 - t, has_uv=True)


def classify_signature(m: int, n: int, sigma: Sequence[int]) -> BookClass:
    t = unbalanced_pages(m, n, sigma)
    return BookClass(t, canonical_spec(m, n, t))


def enumerate_classes(m: int, n: int) -> list[BookClass]:
    return [BookClass(t, canonical_spec(m, n, t)) for t in range(n + 1)]


# ---------------------------------------------------------------------------
# closed forms

_X = IntPolynomial((-1, 1))  # lambda - 1
_LAM = IntPolynomial((0, 1))


def _parity(mode: str) -> str:
    if mode not in ("signed", "balanced"):
        raise ModeMismatch(f"signed book formulas need mode signed or balanced, got {mode!r}")
    return PARITY_OF_MODE[mode]


def alternating_page_factor(m: int, top: int | None = None) -> IntPolynomial:
    """Sum over i = 0..top of (-1)^i x^(m-2-i); top defaults to m - 2."""
    top = m - 2 if top is None else top
    total = IntPolynomial(())
    for i in range(top + 1):
        total = total + (-1) ** i * _X ** (m - 2 - i)
    return total


def formula_cycle_minus(n: int, mode: str = "signed") -> IntPolynomial:
    """Unbalanced n-cycle: (lambda-1)^n signed; recursive in the balanced case."""
    if n < 2:
        raise ValueError("unbalanced cycles need n >= 2")
    parity = _parity(mode)
    if mode == "signed":
        return (_X ** n).with_parity(parity)
    poly = _LAM * _LAM - 2 * _LAM  # 4k^2 - 4k
    for j in range(3, n + 1):
        poly = _LAM * _X ** (j - 1) - poly
    return poly.with_parity(parity)


def path_attach_factor(l: int, mode: str = "signed") -> IntPolynomial:
    """Multiplier for hanging a path with ``l`` new vertices off one vertex."""
    if l < 0:
        raise ValueError("path length must be non-negative")
    return (_X ** l).with_parity(_parity(mode))


def formula_B_m_n(m: int, n: int, mode: str = "signed") -> IntPolynomial:
    """Digon book B_m^n: the page factor applied n - 1 times to B_m^1."""
    if m < 2 or n < 1:
        raise ValueError("digon books need m >= 2 and n >= 1")
    factor = alternating_page_factor(m)
    poly = factor * formula_cycle_minus(2, mode)
    for _ in range(n - 1):
        poly = factor * poly
    return poly.with_parity(_parity(mode))


def formula_unsigned_book(m: int, n: int) -> IntPolynomial:
    """[(k-1)^m + (-1)^m (k-1)]^n / [k(k-1)]^(n-1) with k = lambda."""
    if m < 3 or n < 1:
        raise ValueError("books need m >= 3 and n >= 1")
    cycle = _X ** m + (-1) ** m * _X
    return exact_divide(cycle ** n, (_LAM * _X) ** (n - 1))


def formula_b1_star(m: int, n: int, mode: str = "signed") -> IntPolynomial:
    """B*_1(m, n) by its own recursion, with the digon-book tail term."""
    if m < 3 or n < 1:
        raise ValueError("books need m >= 3 and n >= 1")
    poly = formula_cycle_minus(m, mode)
    head = alternating_page_factor(m, m - 3)
    for j in range(2, n + 1):
        poly = head * poly + (-1) ** (m - 2) * formula_B_m_n(m, j - 1, mode)
    return poly.with_parity(_parity(mode))


def _formula_b_l(m: int, n: int, l: int, mode: str) -> IntPolynomial:
    # B_l(m, l) switches at u to B*_1(m, l); balanced pages then each
    # contribute the page factor.
    poly = formula_b1_star(m, l, mode)
    return alternating_page_factor(m) ** (n - l) * poly


def _formula_b_star_chain(m: int, n: int, l: int, mode: str) -> IntPolynomial:
    # B*_l(m, n) = factor * B*_(l-1)(m, n-1), down to B*_1.
    poly = formula_b1_star(m, n - l + 1, mode)
    return alternating_page_factor(m) ** (l - 1) * poly


def formula_signed_book(m: int, n: int, l: int, has_uv: bool = False,
                        mode: str = "signed") -> IntPolynomial:
    """Chromatic polynomial of B_l(m, n) or, with ``has_uv``, B*_l(m, n).

    B*_l is resolved through its switching equivalence with B_(n+1-l).
    ``l = 0`` is the unsigned book, valid in every mode.
    """
    BookSpec(m, n, l, has_uv)  # validates
    if l == 0:
        parity = PARITY_OF_MODE[mode] if mode in PARITY_OF_MODE else "all"
        return formula_unsigned_book(m, n).with_parity(parity)
    _parity(mode)
    if has_uv:
        return formula_signed_book(m, n, n + 1 - l, False, mode)
    return _formula_b_l(m, n, l, mode).with_parity(_parity(mode))


def formula_signed_book_star_recursion(m: int, n: int, l: int, mode: str = "signed") -> IntPolynomial:
    """B*_l(m, n) through the star recursion alone (no switching identity)."""
    BookSpec(m, n, l, True)
    return _formula_b_star_chain(m, n, l, mode).with_parity(_parity(mode))


def formula_for_spec(spec: BookSpec, mode: str = "signed") -> IntPolynomial:
    if spec.digon:
        return formula_B_m_n(spec.m, spec.n, mode)
    if spec.l == 0:
        if mode not in PARITY_OF_MODE:
            raise ValueError(f"unknown mode {mode!r}")
        return formula_unsigned_book(spec.m, spec.n).with_parity(PARITY_OF_MODE[mode])
    if mode == "unsigned":
        raise ModeMismatch("unsigned mode needs an all-positive book (l = 0)")
    return formula_signed_book(spec.m, spec.n, spec.l, spec.has_uv, mode)


def glue_complete_intersection(chi_g: IntPolynomial, chi_h: IntPolynomial,
                               chi_intersection: IntPolynomial) -> IntPolynomial:
    """Chromatic polynomial of G union H when G and H meet in a complete graph."""
    if chi_intersection.is_zero():
        raise ZeroDivisionError("chromatic polynomial of the intersection is zero")
    return exact_divide(chi_g * chi_h, chi_intersection)


def star_to_plain_alignment(m: int, n: int, l: int) -> tuple[tuple[int, ...], list[int]]:
    """Signs of B*_l(m, n) mapped by a page automorphism onto B_(n+1-l)'s labelling,
    plus the switching vector (switch at u) witnessing equivalence with B_(n+1-l).

    After switching at u the negative edges of B*_l sit on pages l..n; the
    page permutation sends them to pages 1..n+1-l.
    """
    star = build_book(BookSpec(m, n, l, has_uv=True))
    perm = list(range(l, n + 1)) + list(range(1, l))  # new page i+1 <- old page perm[i]
    old_to_new = {old: new for new, old in enumerate(perm, 1)}
    signs = [0] * star.edge_count
    signs[0] = star.edges[0][2]
    for old in range(1, n + 1):
        for step in range(m - 1):
            signs[page_edge(m, old_to_new[old], step)] = star.edges[page_edge(m, old, step)][2]
    f = [1] * star.vertex_count
    f[0] = -1
    return tuple(signs), f
