"""Type-BC sub-arrangements, their intersection lattices and Whitney numbers.

Coordinates are 0-based and match graph vertices; :meth:`Hyperplane.label`
renders the usual 1-based ``h_{ij}^{+}`` names.

The chromatic formulas count colorings by the flat of BC_n they lie on.  A
colour vector is proper exactly when no hyperplane of the graph contains it,
so the flats that contribute are those generated by the complement
arrangement that do *not* lie inside any graph hyperplane.
:func:`coloring_poset` builds that family; :func:`intersection_lattice` is
the plain closure and keeps every flat.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, ModeMismatch
from .graph import SignedMultigraph
from .polynomials import IntPolynomial, falling_factorial, substitute_affine

DEFAULT_MAX_COORDINATES = 9
DEFAULT_MAX_FLATS = 5000


@dataclass(frozen=True, order=True)
class Hyperplane:
    """``equal``: x_i = x_j, ``opposite``: x_i = -x_j, ``zero``: x_i = 0."""

    kind: str
    i: int
    j: int = -1

    def __post_init__(self):
        if self.kind == "zero":
            object.__setattr__(self, "j", -1)
        elif self.kind in ("equal", "opposite"):
            if self.i == self.j:
                raise ValueError("equal/opposite hyperplanes need distinct coordinates")
            if self.i > self.j:
                i, j = self.j, self.i
                object.__setattr__(self, "i", i)
                object.__setattr__(self, "j", j)
        else:
            raise ValueError(f"unknown hyperplane kind {self.kind!r}")

    @classmethod
    def equal(cls, i, j):
        return cls("equal", i, j)

    @classmethod
    def opposite(cls, i, j):
        return cls("opposite", i, j)

    @classmethod
    def zero(cls, i):
        return cls("zero", i)

    @classmethod
    def for_edge(cls, a: int, b: int, sign: int) -> "Hyperplane":
        """The hyperplane ``x_b = sign * x_a``; loops give ``x_a = 0``."""
        if a == b:
            return cls.zero(a)
        return cls("equal" if sign > 0 else "opposite", a, b)

    def label(self) -> str:
        if self.kind == "zero":
            return f"h_{{{self.i + 1}}}"
        sup = "+" if self.kind == "equal" else "-"
        return f"h_{{{self.i + 1}{self.j + 1}}}^{{{sup}}}"


@dataclass(frozen=True)
class SignedFlat:
    """Flat of a BC_n sub-arrangement.

    ``zero`` holds the coordinates forced to 0.  Each block lists
    ``(coordinate, sign)`` pairs meaning ``x_coordinate = sign * t`` for a
    free parameter ``t``; blocks are sorted by minimum coordinate and that
    coordinate carries sign +1.
    """

    n: int
    zero: frozenset[int]
    blocks: tuple[tuple[tuple[int, int], ...], ...]

    @classmethod
    def ambient(cls, n: int) -> "SignedFlat":
        return cls(n, frozenset(), tuple(((i, 1),) for i in range(n)))

    @classmethod
    def from_labels(cls, n: int, labels: dict[int, tuple[int, int] | None]) -> "SignedFlat":
        """Canonicalize a map coordinate -> (block id, sign) or None for zero."""
        zero = frozenset(i for i, lab in labels.items() if lab is None)
        groups: dict[int, list[tuple[int, int]]] = {}
        for i in sorted(labels):
            lab = labels[i]
            if lab is not None:
                groups.setdefault(lab[0], []).append((i, lab[1]))
        blocks = []
        for members in groups.values():
            lead = members[0][1]
            blocks.append(tuple((i, s * lead) for i, s in members))
        blocks.sort(key=lambda blk: blk[0][0])
        return cls(n, zero, tuple(blocks))

    def labels(self) -> dict[int, tuple[int, int] | None]:
        out: dict[int, tuple[int, int] | None] = {i: None for i in self.zero}
        for bid, blk in enumerate(self.blocks):
            for i, s in blk:
                out[i] = (bid, s)
        return out

    @property
    def rank(self) -> int:
        return self.n - len(self.blocks)

    def dump(self) -> str:
        zero = ",".join(str(i) for i in sorted(self.zero))
        blocks = ",".join(
            "{" + ",".join(f"{'+' if s > 0 else '-'}{i}" for i, s in blk) + "}"
            for blk in self.blocks)
        return f"rank={self.rank} zero={{{zero}}} blocks=[{blocks}]"


def intersect_flat(flat: SignedFlat, h: Hyperplane) -> SignedFlat:
    """Intersection of ``flat`` with hyperplane ``h``."""
    labels = flat.labels()
    if h.kind == "zero":
        _zero_block(labels, h.i)
        return SignedFlat.from_labels(flat.n, labels)
    i, j = h.i, h.j
    rel = 1 if h.kind == "equal" else -1  # x_j = rel * x_i
    li, lj = labels[i], labels[j]
    if li is None or lj is None:
        _zero_block(labels, i)
        _zero_block(labels, j)
    elif li[0] == lj[0]:
        if lj[1] != rel * li[1]:
            _zero_block(labels, i)
    else:
        factor = rel * li[1] * lj[1]
        old = lj[0]
        for c, lab in labels.items():
            if lab is not None and lab[0] == old:
                labels[c] = (li[0], lab[1] * factor)
    return SignedFlat.from_labels(flat.n, labels)


def _zero_block(labels, i):
    lab = labels[i]
    if lab is None:
        return
    for c, other in labels.items():
        if other is not None and other[0] == lab[0]:
            labels[c] = None


def flat_lies_in(flat: SignedFlat, h: Hyperplane) -> bool:
    return intersect_flat(flat, h) == flat


def bc_arrangement(n: int) -> list[Hyperplane]:
    hs = [Hyperplane.zero(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            hs.append(Hyperplane.equal(i, j))
            hs.append(Hyperplane.opposite(i, j))
    return sorted(hs)


def graphic_arrangement(g: SignedMultigraph) -> list[Hyperplane]:
    """One hyperplane per edge (loops of either sign give ``x_i = 0``), deduplicated."""
    return sorted({Hyperplane.for_edge(a, b, s) for a, b, s in g.edges})


def balanced_graphic_arrangement(g: SignedMultigraph) -> list[Hyperplane]:
    """Graphic arrangement plus every coordinate hyperplane."""
    return sorted(set(graphic_arrangement(g)) | {Hyperplane.zero(i) for i in range(g.vertex_count)})


def complement_for_signed(g: SignedMultigraph) -> list[Hyperplane]:
    used = set(graphic_arrangement(g))
    return [h for h in bc_arrangement(g.vertex_count) if h not in used]


def complement_for_balanced(g: SignedMultigraph) -> list[Hyperplane]:
    used = set(balanced_graphic_arrangement(g))
    return [h for h in bc_arrangement(g.vertex_count) if h not in used]


def unsigned_arrangement(g: SignedMultigraph) -> list[Hyperplane]:
    return sorted({Hyperplane.equal(a, b) for a, b, _ in g.edges if a != b})


def complement_for_unsigned(g: SignedMultigraph) -> list[Hyperplane]:
    used = set(unsigned_arrangement(g))
    n = g.vertex_count
    return [Hyperplane.equal(i, j) for i in range(n) for j in range(i + 1, n)
            if Hyperplane.equal(i, j) not in used]


def intersection_lattice(hyperplanes: Iterable[Hyperplane], n: int,
                         max_coordinates: int = DEFAULT_MAX_COORDINATES,
                         max_flats: int = DEFAULT_MAX_FLATS) -> list[tuple[SignedFlat, int]]:
    """All flats of the arrangement with their ranks, built rank by rank.

    Flat counts grow roughly like the signed Bell numbers, so the closure
    stops with :class:`BudgetExceeded` once it holds more than ``max_flats``.
    """
    if n > max_coordinates:
        raise BudgetExceeded(f"{n} coordinates exceeds lattice budget {max_coordinates}")
    hs = list(dict.fromkeys(hyperplanes))
    level = [SignedFlat.ambient(n)]
    out = [(level[0], 0)]
    rank = 0
    while level:
        nxt = {}
        for flat in level:
            for h in hs:
                f2 = intersect_flat(flat, h)
                if f2.rank == rank + 1:
                    nxt.setdefault(f2, None)
        rank += 1
        level = list(nxt)
        out.extend((f, rank) for f in level)
        if len(out) > max_flats:
            raise BudgetExceeded(f"intersection lattice exceeds {max_flats} flats")
    return out


def whitney_numbers(flats: Iterable[tuple[SignedFlat, int]], n: int) -> list[int]:
    w = [0] * (n + 1)
    for _, r in flats:
        w[r] += 1
    return w


def coloring_poset(g: SignedMultigraph, mode: str = "signed",
                   max_coordinates: int = DEFAULT_MAX_COORDINATES,
                   max_flats: int = DEFAULT_MAX_FLATS) -> list[tuple[SignedFlat, int]]:
    """Flats of the complement arrangement lying on no hyperplane of the graph.

    A positive loop puts the whole space inside a forbidden hyperplane, so
    the poset is empty.
    """
    if mode == "signed":
        comp, forbidden = complement_for_signed(g), graphic_arrangement(g)
    elif mode == "balanced":
        comp, forbidden = complement_for_balanced(g), balanced_graphic_arrangement(g)
    elif mode == "unsigned":
        if not g.is_all_positive():
            raise ModeMismatch("unsigned mode requires every edge to be positive")
        comp, forbidden = complement_for_unsigned(g), unsigned_arrangement(g)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if g.has_positive_loop():
        return []
    lattice = intersection_lattice(comp, g.vertex_count, max_coordinates, max_flats)
    return [(f, r) for f, r in lattice if not any(flat_lies_in(f, h) for h in forbidden)]


def poset_whitney(g: SignedMultigraph, mode: str = "signed",
                  max_coordinates: int = DEFAULT_MAX_COORDINATES,
                  max_flats: int = DEFAULT_MAX_FLATS) -> list[int]:
    return whitney_numbers(coloring_poset(g, mode, max_coordinates, max_flats), g.vertex_count)


def chromatic_from_whitney(w: Sequence[int], n: int, mode: str = "signed") -> IntPolynomial:
    """Sum of ``w_i 2^(n-i) (k)_(n-i)`` (signed/balanced) or ``w_i (k)_(n-i)`` (unsigned), in lambda."""
    if len(w) > n + 1 and any(w[n + 1:]):
        raise ValueError("Whitney vector has nonzero entries above rank n")
    total = IntPolynomial(())
    for i, wi in enumerate(w[:n + 1]):
        if not wi:
            continue
        j = n - i
        weight = wi if mode == "unsigned" else wi * 2 ** j
        total = total + falling_factorial(j) * weight
    if mode == "signed":
        return substitute_affine(total.coefficients, 2, 1, "odd")
    if mode == "balanced":
        return substitute_affine(total.coefficients, 2, 0, "even")
    if mode == "unsigned":
        return total.with_parity("all")
    raise ValueError(f"unknown mode {mode!r}")


def chromatic_poly_whitney(g: SignedMultigraph, mode: str = "signed",
                           max_coordinates: int = DEFAULT_MAX_COORDINATES,
                           max_flats: int = DEFAULT_MAX_FLATS) -> IntPolynomial:
    return chromatic_from_whitney(poset_whitney(g, mode, max_coordinates, max_flats),
                                  g.vertex_count, mode)


def dump_poset(flats: Iterable[tuple[SignedFlat, int]]) -> str:
    return "".join(f.dump() + "\n" for f, _ in sorted(flats, key=lambda fr: (fr[1], fr[0].dump())))
