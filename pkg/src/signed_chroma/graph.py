"""Signed multigraphs: switching, balance, switching equivalence and isomorphism.

Signs live on edge indices rather than in a set of negative edges, so
parallel edges of different sign are representable.  Loops and parallel
edges are allowed everywhere.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import BudgetExceeded, GraphFormatError

Edge = tuple[int, int, int]

DEFAULT_MAX_VERTICES = 10
DEFAULT_MAX_ENUM_EDGES = 20


@dataclass(frozen=True)
class SignedMultigraph:
    """Vertices ``0..vertex_count-1`` and an ordered list of signed edges.

    Each edge is stored as ``(a, b, sign)`` with ``a <= b`` and ``sign`` in
    ``{+1, -1}``.  Edge order only fixes indices; no operation depends on it.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        norm = []
        for e in self.edges:
            a, b, s = e
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge {e} has an endpoint out of range")
            if s not in (1, -1):
                raise ValueError(f"edge {e} has sign {s!r}; expected +1 or -1")
            norm.append((min(a, b), max(a, b), int(s)))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(s for _, _, s in self.edges)

    @property
    def signature(self) -> frozenset[int]:
        """Indices of negative edges."""
        return frozenset(i for i, (_, _, s) in enumerate(self.edges) if s < 0)

    def with_signs(self, signs: Sequence[int]) -> "SignedMultigraph":
        if len(signs) != len(self.edges):
            raise ValueError(f"expected {len(self.edges)} signs, got {len(signs)}")
        return SignedMultigraph(
            self.vertex_count, tuple((a, b, s) for (a, b, _), s in zip(self.edges, signs)))

    def is_all_positive(self) -> bool:
        return all(s > 0 for _, _, s in self.edges)

    def has_positive_loop(self) -> bool:
        return any(a == b and s > 0 for a, b, s in self.edges)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b, _ in self.edges)

    @classmethod
    def from_signature(cls, vertex_count: int, pairs: Iterable[tuple[int, int]],
                       negative: Iterable[int] = ()) -> "SignedMultigraph":
        """Build from unsigned edges plus the indices of negative ones."""
        neg = set(negative)
        return cls(vertex_count, tuple((a, b, -1 if i in neg else 1)
                                       for i, (a, b) in enumerate(pairs)))


@dataclass(frozen=True)
class CycleBalanceProfile:
    """Signs of the fundamental cycles of every non-forest edge."""

    forest_edges: tuple[int, ...]
    non_forest_edges: tuple[int, ...]
    fundamental_cycle_signs: tuple[int, ...]


def _check_signs(g: SignedMultigraph, signs: Sequence[int]) -> tuple[int, ...]:
    if len(signs) != g.edge_count:
        raise ValueError(f"sign list has length {len(signs)}; graph has {g.edge_count} edges")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1 or -1")
    return tuple(signs)


def switch_at(g: SignedMultigraph, v: int) -> SignedMultigraph:
    """Negate every non-loop edge incident to ``v``."""
    if not 0 <= v < g.vertex_count:
        raise IndexError(f"vertex {v} out of range")
    return SignedMultigraph(g.vertex_count, tuple(
        (a, b, -s if (a == v) != (b == v) else s) for a, b, s in g.edges))


def apply_switching(g: SignedMultigraph, f: Sequence[int]) -> SignedMultigraph:
    """Resign by ``f``: each edge ``ab`` becomes ``f(a) * sign * f(b)``."""
    if len(f) != g.vertex_count:
        raise ValueError(f"switching vector has length {len(f)}; graph has {g.vertex_count} vertices")
    if any(x not in (1, -1) for x in f):
        raise ValueError("switching vector entries must be +1 or -1")
    return SignedMultigraph(g.vertex_count, tuple((a, b, f[a] * s * f[b]) for a, b, s in g.edges))


def compose_switchings(f: Sequence[int], h: Sequence[int]) -> list[int]:
    return [x * y for x, y in zip(f, h, strict=True)]


def spanning_forest(g: SignedMultigraph) -> tuple[list[int], list[int]]:
    """Greedy spanning forest in edge order; returns (forest, non-forest) edge indices."""
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest, rest = [], []
    for i, (a, b, _) in enumerate(g.edges):
        ra, rb = find(a), find(b)
        if ra == rb:
            rest.append(i)
        else:
            parent[ra] = rb
            forest.append(i)
    return forest, rest


def component_count(g: SignedMultigraph) -> int:
    forest, _ = spanning_forest(g)
    return g.vertex_count - len(forest)


def _potentials(g: SignedMultigraph, signs: Sequence[int], forest: Sequence[int]) -> list[int]:
    """Product of signs along the forest path from each vertex to its component root."""
    adj = defaultdict(list)
    for i in forest:
        a, b, _ = g.edges[i]
        adj[a].append((b, signs[i]))
        adj[b].append((a, signs[i]))
    pot = [0] * g.vertex_count
    for root in range(g.vertex_count):
        if pot[root]:
            continue
        pot[root] = 1
        stack = [root]
        while stack:
            x = stack.pop()
            for y, s in adj[x]:
                if not pot[y]:
                    pot[y] = pot[x] * s
                    stack.append(y)
    return pot


def balance_profile(g: SignedMultigraph) -> CycleBalanceProfile:
    forest, rest = spanning_forest(g)
    pot = _potentials(g, g.signs, forest)
    cycle_signs = tuple(pot[g.edges[i][0]] * g.edges[i][2] * pot[g.edges[i][1]] for i in rest)
    return CycleBalanceProfile(tuple(forest), tuple(rest), cycle_signs)


def is_balanced(g: SignedMultigraph) -> bool:
    """True iff every cycle (including loops) has positive sign product."""
    return all(s == 1 for s in balance_profile(g).fundamental_cycle_signs)


def cycle_sign(g: SignedMultigraph, cycle: Sequence[int],
               edge_choice: Sequence[int] | None = None) -> int:
    """Sign product along the closed walk ``cycle[0] -> cycle[1] -> ... -> cycle[0]``.

    ``edge_choice`` optionally names the edge index used for each step, which
    disambiguates parallel edges; otherwise the lowest-index edge is used.
    """
    k = len(cycle)
    if k == 0:
        raise ValueError("empty cycle")
    steps = [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]
    if edge_choice is not None and len(edge_choice) != k:
        raise ValueError("edge_choice must name one edge per step")
    sign = 1
    for step, (x, y) in enumerate(steps):
        key = (min(x, y), max(x, y))
        if edge_choice is not None:
            idx = edge_choice[step]
            if not 0 <= idx < g.edge_count or g.edges[idx][:2] != key:
                raise ValueError(f"edge {idx} does not join {x} and {y}")
        else:
            idx = next((i for i, e in enumerate(g.edges) if e[:2] == key), None)
            if idx is None:
                raise ValueError(f"no edge joins {x} and {y}")
        sign *= g.edges[idx][2]
    return sign


def _solve_parity(n: int, constraints: Iterable[tuple[int, int, int]]) -> list[int] | None:
    """Find f in {+1,-1}^n with f[a]*f[b] == s for every (a, b, s), or None."""
    adj = defaultdict(list)
    for a, b, s in constraints:
        if a == b:
            if s != 1:
                return None
            continue
        adj[a].append((b, s))
        adj[b].append((a, s))
    f = [0] * n
    for root in range(n):
        if f[root]:
            continue
        f[root] = 1
        stack = [root]
        while stack:
            x = stack.pop()
            for y, s in adj[x]:
                want = f[x] * s
                if not f[y]:
                    f[y] = want
                    stack.append(y)
                elif f[y] != want:
                    return None
    return f


def switching_equivalent(g: SignedMultigraph, sigma1: Sequence[int],
                         sigma2: Sequence[int]) -> list[int] | None:
    """Return f with ``sigma2(e) == f(a) sigma1(e) f(b)`` for every edge, or None.

    Linear time: f is fixed along a spanning forest, then every remaining
    edge is checked.
    """
    s1, s2 = _check_signs(g, sigma1), _check_signs(g, sigma2)
    return _solve_parity(g.vertex_count,
                         ((a, b, x * y) for (a, b, _), x, y in zip(g.edges, s1, s2)))


def switching_canonical(g: SignedMultigraph, signs: Sequence[int] | None = None) -> tuple[int, ...]:
    """The unique member of the switching class with every forest edge positive."""
    signs = g.signs if signs is None else _check_signs(g, signs)
    forest, _ = spanning_forest(g)
    pot = _potentials(g, signs, forest)
    return tuple(pot[a] * s * pot[b] for (a, b, _), s in zip(g.edges, signs))


def count_switching_classes(g: SignedMultigraph) -> int:
    """Number of switching classes of sign assignments: 2**(m - n + c)."""
    return 2 ** (g.edge_count - g.vertex_count + component_count(g))


def enumerate_switching_classes(g: SignedMultigraph,
                                max_edges: int = DEFAULT_MAX_ENUM_EDGES) -> list[tuple[int, ...]]:
    """One representative per switching class (forest edges positive)."""
    if g.edge_count > max_edges:
        raise BudgetExceeded(f"{g.edge_count} edges exceeds enumeration budget {max_edges}")
    _, rest = spanning_forest(g)
    reps = []
    for choice in product((1, -1), repeat=len(rest)):
        signs = [1] * g.edge_count
        for i, s in zip(rest, choice):
            signs[i] = s
        reps.append(tuple(signs))
    return reps


# ---------------------------------------------------------------------------
# isomorphism


def _pair_multiplicities(g: SignedMultigraph) -> Counter:
    return Counter((a, b) for a, b, _ in g.edges)


def _pair_classes(g: SignedMultigraph) -> dict[tuple[int, int], list[int]]:
    classes = defaultdict(list)
    for i, (a, b, _) in enumerate(g.edges):
        classes[(a, b)].append(i)
    return classes


def graph_isomorphisms(g: SignedMultigraph, h: SignedMultigraph,
                       max_vertices: int = DEFAULT_MAX_VERTICES) -> list[tuple[int, ...]]:
    """All vertex bijections ``g -> h`` preserving edge multiplicities (signs ignored).

    Plain backtracking over degree- and loop-compatible candidates.
    """
    n = g.vertex_count
    if max(n, h.vertex_count) > max_vertices:
        raise BudgetExceeded(f"{max(n, h.vertex_count)} vertices exceeds isomorphism budget {max_vertices}")
    if n != h.vertex_count or g.edge_count != h.edge_count:
        return []
    mg, mh = _pair_multiplicities(g), _pair_multiplicities(h)

    def profile(mult, v):
        loops = mult.get((v, v), 0)
        nbrs = sorted(c for (a, b), c in mult.items() if a != b and v in (a, b))
        return loops, tuple(nbrs)

    pg = [profile(mg, v) for v in range(n)]
    ph = [profile(mh, v) for v in range(n)]
    if sorted(pg) != sorted(ph):
        return []

    def mult(m, a, b):
        return m.get((a, b) if a <= b else (b, a), 0)

    # most constrained vertices first
    order = sorted(range(n), key=lambda v: (-len(pg[v][1]), -pg[v][0]))
    mapping = [-1] * n
    used = [False] * n
    found = []

    def extend(pos):
        if pos == n:
            found.append(tuple(mapping))
            return
        v = order[pos]
        for w in range(n):
            if used[w] or ph[w] != pg[v]:
                continue
            if any(mult(mg, v, order[q]) != mult(mh, w, mapping[order[q]]) for q in range(pos)):
                continue
            mapping[v] = w
            used[w] = True
            extend(pos + 1)
            used[w] = False
            mapping[v] = -1

    extend(0)
    return found


def _class_sign_counts(g: SignedMultigraph, signs: Sequence[int]) -> dict[tuple[int, int], Counter]:
    counts = defaultdict(Counter)
    for (a, b, _), s in zip(g.edges, signs):
        counts[(a, b)][s] += 1
    return counts


def _relabel(psi: Sequence[int], a: int, b: int) -> tuple[int, int]:
    x, y = psi[a], psi[b]
    return (x, y) if x <= y else (y, x)


def signatures_automorphic(g: SignedMultigraph, sigma1: Sequence[int], sigma2: Sequence[int],
                           max_vertices: int = DEFAULT_MAX_VERTICES,
                           automorphisms: Sequence[Sequence[int]] | None = None) -> bool:
    """True iff some automorphism of ``g`` carries sigma1 exactly onto sigma2."""
    s1, s2 = _check_signs(g, sigma1), _check_signs(g, sigma2)
    if automorphisms is None:
        automorphisms = graph_isomorphisms(g, g, max_vertices)
    c1, c2 = _class_sign_counts(g, s1), _class_sign_counts(g, s2)
    for psi in automorphisms:
        if all(c2[_relabel(psi, a, b)] == cnt for (a, b), cnt in c1.items()):
            return True
    return False


def _switching_witness(g: SignedMultigraph, s1, h: SignedMultigraph, s2,
                       psi: Sequence[int]) -> list[int] | None:
    """f on h's vertices making psi(sigma1) switching-equivalent to sigma2, if any.

    Each parallel class imposes f(x)f(y) = t where t*multiset1 == multiset2;
    a balanced mixed class admits both t and imposes nothing.
    """
    c1, c2 = _class_sign_counts(g, s1), _class_sign_counts(h, s2)
    constraints = []
    for (a, b), cnt in c1.items():
        target = c2[_relabel(psi, a, b)]
        flipped = Counter({-s: k for s, k in cnt.items()})
        ok_plus, ok_minus = cnt == target, flipped == target
        x, y = _relabel(psi, a, b)
        if ok_plus and ok_minus:
            continue
        if ok_plus:
            constraints.append((x, y, 1))
        elif ok_minus:
            constraints.append((x, y, -1))
        else:
            return None
    return _solve_parity(h.vertex_count, constraints)


def switching_isomorphic(g: SignedMultigraph, sigma1: Sequence[int],
                         h: SignedMultigraph, sigma2: Sequence[int],
                         max_vertices: int = DEFAULT_MAX_VERTICES,
                         isomorphisms: Sequence[Sequence[int]] | None = None) -> bool:
    """True iff (g, sigma1) is isomorphic to some switching of (h, sigma2)."""
    s1, s2 = _check_signs(g, sigma1), _check_signs(h, sigma2)
    if isomorphisms is None:
        isomorphisms = graph_isomorphisms(g, h, max_vertices)
    return any(_switching_witness(g, s1, h, s2, psi) is not None for psi in isomorphisms)


def switching_isomorphism_classes(g: SignedMultigraph,
                                  max_edges: int = DEFAULT_MAX_ENUM_EDGES,
                                  max_vertices: int = DEFAULT_MAX_VERTICES) -> list[tuple[int, ...]]:
    """Representatives of the sign assignments on ``g`` up to switching isomorphism."""
    autos = graph_isomorphisms(g, g, max_vertices)
    reps: list[tuple[int, ...]] = []
    for cand in enumerate_switching_classes(g, max_edges):
        if not any(switching_isomorphic(g, cand, g, r, isomorphisms=autos) for r in reps):
            reps.append(cand)
    return reps


def is_automorphism(g: SignedMultigraph, psi: Sequence[int]) -> bool:
    """True iff ``psi`` is a vertex permutation preserving all edge multiplicities."""
    if sorted(psi) != list(range(g.vertex_count)):
        return False
    m = _pair_multiplicities(g)
    return all(m.get(_relabel(psi, a, b), 0) == c for (a, b), c in m.items())


# ---------------------------------------------------------------------------
# text formats

_EDGE_RE = re.compile(r"^edge\s+(\d+)\s+(\d+)\s+([+-])(1)?$")


def parse_edge_list(text: str) -> SignedMultigraph:
    """Parse ``vertices <n>`` followed by ``edge <a> <b> <+|->`` lines."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "vertices" or not parts[1].isdigit():
                raise GraphFormatError(f"line {lineno}: expected 'vertices <n>'")
            n = int(parts[1])
            continue
        m = _EDGE_RE.match(" ".join(line.split()))
        if not m:
            raise GraphFormatError(f"line {lineno}: expected 'edge <a> <b> <+|->', got {raw!r}")
        a, b = int(m.group(1)), int(m.group(2))
        if a >= n or b >= n:
            raise GraphFormatError(f"line {lineno}: vertex out of range for {n} vertices")
        edges.append((a, b, 1 if m.group(3) == "+" else -1))
    if n is None:
        raise GraphFormatError("missing 'vertices <n>' header")
    return SignedMultigraph(n, tuple(edges))


def read_edge_list(path) -> SignedMultigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: SignedMultigraph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"vertices {g.vertex_count}")
    lines.extend(f"edge {a} {b} {'+' if s > 0 else '-'}" for a, b, s in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g: SignedMultigraph, names: Sequence[str] | None = None, name: str = "G") -> str:
    """Graphviz export; negative edges are dashed."""
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        label = names[v] if names else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for a, b, s in g.edges:
        style = "dashed" if s < 0 else "solid"
        lines.append(f"  {a} -- {b} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
