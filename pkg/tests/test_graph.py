import itertools

import pytest
from hypothesis import given, strategies as st

from signed_chroma.errors import BudgetExceeded, GraphFormatError
from signed_chroma.graph import (SignedMultigraph, apply_switching, balance_profile, count_switching_classes,
                                 cycle_sign, enumerate_switching_classes, format_edge_list,
                                 graph_isomorphisms, is_balanced, parse_edge_list, signatures_automorphic,
                                 switch_at, switching_canonical, switching_equivalent, switching_isomorphic,
                                 switching_isomorphism_classes, to_dot)
from signed_chroma.book import BookSpec, build_book, inner_vertex, page_edge


@st.composite
def signed_graphs(draw, max_n=5, max_m=8):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1),
                                    st.sampled_from((1, -1))), min_size=m, max_size=m))
    return SignedMultigraph(n, tuple(edges))


def triangle(signs):
    return SignedMultigraph(3, ((0, 1, signs[0]), (1, 2, signs[1]), (0, 2, signs[2])))


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        SignedMultigraph(2, ((0, 2, 1),))
    with pytest.raises(ValueError):
        SignedMultigraph(2, ((0, 1, 0),))


def test_switch_at_path():
    g = SignedMultigraph(3, ((0, 1, -1), (1, 2, 1)))
    assert switch_at(g, 1).signature == {1}
    with pytest.raises(IndexError):
        switch_at(g, 3)


def test_switch_at_digon_and_loop():
    g = SignedMultigraph(2, ((0, 1, 1), (0, 1, -1), (0, 0, -1)))
    assert switch_at(g, 0).signs == (-1, 1, -1)


def test_apply_switching_examples():
    g = triangle((-1, 1, 1))  # e1 = 01 negative, e2 = 12
    assert apply_switching(g, [1, 1, 1]) == g
    assert apply_switching(g, [-1, -1, -1]) == g
    # vertex 1 is shared by e1 and e2 only
    assert apply_switching(g, [1, -1, 1]).signature == {1}
    with pytest.raises(ValueError):
        apply_switching(g, [1, 1])


@given(signed_graphs(), st.data())
def test_switch_is_involution_and_matches_vector(g, data):
    v = data.draw(st.integers(0, g.vertex_count - 1))
    assert switch_at(switch_at(g, v), v) == g
    f = data.draw(st.lists(st.sampled_from((1, -1)), min_size=g.vertex_count, max_size=g.vertex_count))
    h = g
    for x, fx in enumerate(f):
        if fx < 0:
            h = switch_at(h, x)
    assert apply_switching(g, f) == h
    assert apply_switching(apply_switching(g, f), f) == g
    # loops never change sign
    assert [s for a, b, s in apply_switching(g, f).edges if a == b] == [s for a, b, s in g.edges if a == b]


def test_balance_examples():
    assert is_balanced(triangle((1, 1, 1)))
    assert not is_balanced(triangle((-1, 1, 1)))
    assert is_balanced(triangle((-1, -1, 1)))
    assert not is_balanced(SignedMultigraph(1, ((0, 0, -1),)))
    assert cycle_sign(triangle((-1, 1, 1)), [0, 1, 2]) == -1


def test_cycle_sign_with_parallel_choice():
    g = SignedMultigraph(2, ((0, 1, 1), (0, 1, -1)))
    assert cycle_sign(g, [0, 1], edge_choice=[0, 1]) == -1
    assert cycle_sign(g, [0, 1], edge_choice=[0, 0]) == 1
    with pytest.raises(ValueError):
        cycle_sign(g, [0, 1], edge_choice=[0, 5])
    with pytest.raises(ValueError):
        cycle_sign(triangle((1, 1, 1)), [0, 1, 1])


def test_profile_length():
    g = build_book(BookSpec(4, 3))
    prof = balance_profile(g)
    assert len(prof.fundamental_cycle_signs) == g.edge_count - g.vertex_count + 1


def test_switching_equivalent_examples():
    c3 = triangle((1, 1, 1))
    assert switching_equivalent(c3, (-1, 1, 1), (1, -1, 1)) is not None
    assert switching_equivalent(c3, (1, 1, 1), (-1, 1, 1)) is None
    tree = SignedMultigraph(4, ((0, 1, 1), (1, 2, 1), (1, 3, 1)))
    for s1 in itertools.product((1, -1), repeat=3):
        for s2 in itertools.product((1, -1), repeat=3):
            f = switching_equivalent(tree, s1, s2)
            assert apply_switching(tree.with_signs(s1), f).signs == s2
    with pytest.raises(ValueError):
        switching_equivalent(c3, (1, 1), (1, 1, 1))


@given(signed_graphs(), st.data())
def test_equivalence_iff_same_cycle_profile(g, data):
    m = g.edge_count
    s1 = data.draw(st.lists(st.sampled_from((1, -1)), min_size=m, max_size=m))
    s2 = data.draw(st.lists(st.sampled_from((1, -1)), min_size=m, max_size=m))
    same = (balance_profile(g.with_signs(s1)).fundamental_cycle_signs
            == balance_profile(g.with_signs(s2)).fundamental_cycle_signs)
    f = switching_equivalent(g, s1, s2)
    assert (f is not None) == same
    if f is not None:
        assert apply_switching(g.with_signs(s1), f).signs == tuple(s2)


@given(signed_graphs(max_m=6), st.data())
def test_cycle_sign_switching_invariant(g, data):
    f = data.draw(st.lists(st.sampled_from((1, -1)), min_size=g.vertex_count, max_size=g.vertex_count))
    h = apply_switching(g, f)
    for a, b, _ in g.edges:
        if a == b:
            assert cycle_sign(g, [a]) == cycle_sign(h, [a])
    assert balance_profile(g).fundamental_cycle_signs == balance_profile(h).fundamental_cycle_signs


def test_equivalence_relation_transitive_via_product():
    g = build_book(BookSpec(3, 2))
    s1 = (1, -1, 1, 1, -1)
    f12 = [1, -1, 1, -1]
    s2 = apply_switching(g.with_signs(s1), f12).signs
    f23 = [-1, 1, 1, -1]
    s3 = apply_switching(g.with_signs(s2), f23).signs
    f13 = switching_equivalent(g, s1, s3)
    assert f13 is not None
    assert apply_switching(g.with_signs(s1), f13).signs == s3


def test_count_switching_classes():
    tree = SignedMultigraph(3, ((0, 1, 1), (1, 2, 1)))
    assert count_switching_classes(tree) == 1
    for m in range(1, 7):
        cycle = SignedMultigraph(m, tuple((i, (i + 1) % m, 1) for i in range(m)))
        assert count_switching_classes(cycle) == 2
    for m, n in [(3, 2), (3, 3), (4, 2)]:
        assert count_switching_classes(build_book(BookSpec(m, n))) == 2 ** n


@pytest.mark.parametrize("m,n", [(3, 2), (3, 3), (4, 2)])
def test_book_orbits_by_exhaustion(m, n):
    g = build_book(BookSpec(m, n))
    seen = set()
    orbits = 0
    for signs in itertools.product((1, -1), repeat=g.edge_count):
        if signs in seen:
            continue
        orbits += 1
        for f in itertools.product((1, -1), repeat=g.vertex_count):
            seen.add(apply_switching(g.with_signs(signs), f).signs)
    assert orbits == 2 ** n
    reps = enumerate_switching_classes(g)
    assert len(reps) == 2 ** n
    assert len({switching_canonical(g, r) for r in reps}) == len(reps)


def test_enumeration_budget():
    g = SignedMultigraph(2, tuple((0, 1, 1) for _ in range(25)))
    with pytest.raises(BudgetExceeded):
        enumerate_switching_classes(g)


def test_isomorphism_budget():
    g = SignedMultigraph(11)
    with pytest.raises(BudgetExceeded):
        graph_isomorphisms(g, g)


def test_isomorphisms_respect_multiplicity():
    digon_tail = SignedMultigraph(3, ((0, 1, 1), (0, 1, -1), (1, 2, 1)))
    other = SignedMultigraph(3, ((1, 2, 1), (1, 2, 1), (0, 1, 1)))
    isos = graph_isomorphisms(digon_tail, other)
    assert isos == [(2, 1, 0)]
    assert graph_isomorphisms(digon_tail, SignedMultigraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 1)))) == []


def test_book_signatures_automorphic():
    g = build_book(BookSpec(4, 3))
    uu1 = [1] * g.edge_count
    uu1[page_edge(4, 1)] = -1
    uu2 = [1] * g.edge_count
    uu2[page_edge(4, 2)] = -1
    uv = [1] * g.edge_count
    uv[0] = -1
    assert signatures_automorphic(g, uu1, uu2)
    assert not signatures_automorphic(g, uv, uu1)
    assert not switching_isomorphic(g, uv, g, uu1)


@pytest.mark.parametrize("k", [1, 2])
def test_middle_signatures_switching_isomorphic(k):
    m, n = 4, 2 * k + 1
    plain = build_book(BookSpec(m, n, k + 1))
    star = build_book(BookSpec(m, n, k + 1, has_uv=True))
    assert switching_isomorphic(plain, plain.signs, star, star.signs, max_vertices=12)


def test_switching_isomorphism_classes_of_k4():
    k4 = SignedMultigraph(4, tuple((a, b, 1) for a, b in itertools.combinations(range(4), 2)))
    # two signed K3's and three signed K4's up to switching isomorphism
    assert len(switching_isomorphism_classes(SignedMultigraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 1))))) == 2
    assert len(switching_isomorphism_classes(k4)) == 3


def test_switching_isomorphic_with_mixed_parallel_class():
    g = SignedMultigraph(3, ((0, 1, 1), (0, 1, -1), (1, 2, 1), (0, 2, 1)))
    h = SignedMultigraph(3, ((1, 2, -1), (1, 2, 1), (0, 1, -1), (0, 2, 1)))
    assert switching_isomorphic(g, g.signs, h, h.signs)


def test_edge_list_round_trip():
    text = """# a digon with a tail
vertices 3
edge 0 1 +
edge 0 1 -   # negative
edge 1 2 +
edge 2 2 -
"""
    g = parse_edge_list(text)
    assert g.edges == ((0, 1, 1), (0, 1, -1), (1, 2, 1), (2, 2, -1))
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize("text", ["", "vertices x\n", "vertices 2\nedge 0 2 +\n", "vertices 2\nedge 0 1 *\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_dot_export_dashes_negative_edges():
    dot = to_dot(SignedMultigraph(2, ((0, 1, 1), (0, 1, -1))))
    assert "0 -- 1 [style=solid];" in dot
    assert "0 -- 1 [style=dashed];" in dot
