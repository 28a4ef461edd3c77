import pytest
from hypothesis import given, strategies as st

from liebounds.errors import ConstructionError, DomainError, PreconditionError, UnsupportedInputError
from liebounds.rootkit import (
    RootSubspace,
    build_root_system,
    cartan_matrix,
    coarse_class_of,
    coarse_classes,
    filtration_is_ideal,
    height,
    identify_type,
    positive_roots_by_height,
    simple_coordinates_by_gram,
    span_complement_rank,
)

from oracles import in_span, rank_of, reflection_closure

CLASSICAL = [("A", r) for r in range(1, 7)] + [("B", r) for r in range(2, 7)] + [("C", r) for r in range(2, 7)]
CLASSICAL += [("D", r) for r in range(3, 7)] + [("BC", r) for r in range(1, 6)]
EXCEPTIONAL = [("E6", None), ("E7", None), ("E8", None), ("F4", None), ("G2", None)]
SMALL = CLASSICAL + [("F4", None), ("G2", None), ("E6", None)]


def expected_count(t, r):
    return {
        "A": lambda: r * (r + 1),
        "B": lambda: 2 * r * r,
        "C": lambda: 2 * r * r,
        "D": lambda: 2 * r * (r - 1),
        "BC": lambda: 2 * r * r + 2 * r,
        "E6": lambda: 72,
        "E7": lambda: 126,
        "E8": lambda: 240,
        "F4": lambda: 48,
        "G2": lambda: 12,
    }[t]()


@pytest.mark.parametrize("t,r", CLASSICAL + EXCEPTIONAL)
def test_root_counts(t, r):
    rs = build_root_system(t, r)
    assert len(rs.roots) == expected_count(t, rs.rank)
    assert len(set(rs.roots)) == len(rs.roots)


@pytest.mark.parametrize("t,r", SMALL)
def test_roots_match_reflection_closure(t, r):
    rs = build_root_system(t, r)
    seeds = list(rs.simple_roots)
    if t == "BC":
        seeds.append(tuple(2 * x for x in rs.simple_roots[-1]))
    assert reflection_closure(seeds) == set(rs.roots)


@pytest.mark.parametrize("t,r", SMALL)
def test_structural_invariants(t, r):
    rs = build_root_system(t, r)
    roots = set(rs.roots)
    for b in rs.roots:
        assert tuple(-x for x in b) in roots
        c = rs.coefficients(b)
        assert all(x >= 0 for x in c) or all(x <= 0 for x in c)
        for a in rs.roots:
            assert rs.reflect(a, b) in roots
    doubles = {b for b in rs.roots if tuple(2 * x for x in b) in roots}
    if t == "BC":
        n = rs.rank
        assert doubles == {tuple(s * (i == j) for j in range(n)) for i in range(n) for s in (1, -1)}
    else:
        assert not doubles and rs.is_reduced


@pytest.mark.parametrize("t,r", SMALL)
def test_bfs_coordinates_match_gram_route(t, r):
    rs = build_root_system(t, r)
    slow = simple_coordinates_by_gram(rs.roots, rs.simple_roots)
    assert all(slow[b] == rs.coefficients(b) for b in rs.roots)


def test_coordinates_for_classical_bases():
    a3 = build_root_system("A", 3)
    assert a3.simple_roots == ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1))
    bc2 = build_root_system("BC", 2)
    assert bc2.simple_roots == ((1, -1), (0, 1))
    assert set(bc2.roots) == {
        (1, 1), (1, -1), (-1, 1), (-1, -1), (1, 0), (-1, 0), (0, 1), (0, -1), (2, 0), (-2, 0), (0, 2), (0, -2)
    }
    c3 = build_root_system("C", 3)
    assert c3.simple_roots[-1] == (0, 0, 2)


def test_invalid_constructions():
    with pytest.raises(ConstructionError, match="D"):
        build_root_system("D", 2)
    with pytest.raises(ConstructionError):
        build_root_system("B", 1)
    with pytest.raises(ConstructionError):
        build_root_system("Q", 3)
    with pytest.raises(ConstructionError):
        build_root_system("A", 0)


def test_height_examples():
    a2 = build_root_system("A", 2)
    a1, a2s = a2.simple_roots
    top = tuple(x + y for x, y in zip(a1, a2s))
    assert height(a2, top) == 2
    assert height(a2, a1) == 1
    assert height(a2, tuple(-x for x in top)) == -2
    with pytest.raises(DomainError):
        height(a2, (1, 1, 1))


def test_height_order():
    a2 = build_root_system("A", 2)
    assert positive_roots_by_height(a2) == ((1, 0, -1), (1, -1, 0), (0, 1, -1))
    a3 = build_root_system("A", 3)
    assert [height(a3, b) for b in positive_roots_by_height(a3)] == [3, 2, 2, 1, 1, 1]
    bc2 = build_root_system("BC", 2)
    order = positive_roots_by_height(bc2)
    assert len(order) == 6 and order[0] == (2, 0)


@pytest.mark.parametrize("t,r", SMALL)
def test_height_is_additive(t, r):
    rs = build_root_system(t, r)
    roots = set(rs.roots)
    for b in rs.roots:
        for g in rs.roots:
            s = tuple(x + y for x, y in zip(b, g))
            if s in roots:
                assert height(rs, s) == height(rs, b) + height(rs, g)


def test_filtration_examples():
    a2 = build_root_system("A", 2)
    assert filtration_is_ideal(a2, 1)
    assert filtration_is_ideal(a2, 0)
    f4 = build_root_system("F4")
    assert all(filtration_is_ideal(f4, k) for k in range(25))
    with pytest.raises(DomainError):
        filtration_is_ideal(a2, 4)
    with pytest.raises(DomainError):
        filtration_is_ideal(a2, -1)


def test_coarse_class_examples():
    a2 = build_root_system("A", 2)
    cls = coarse_classes(a2)
    assert len(cls) == 6 and all(len(c.members) == 1 for c in cls)
    bc2 = build_root_system("BC", 2)
    cls = coarse_classes(bc2)
    assert len(cls) == 8
    for v in [(1, 0), (0, 1), (-1, 0), (0, -1)]:
        c = coarse_class_of(bc2, v)
        assert c.members == (v, tuple(2 * x for x in v))
    assert coarse_class_of(bc2, (2, 0)).representative == (1, 0)
    # C_n is reduced: one class per root
    assert len(coarse_classes(build_root_system("C", 3))) == 18


@pytest.mark.parametrize("t,r", SMALL)
def test_coarse_classes_partition(t, r):
    rs = build_root_system(t, r)
    cls = coarse_classes(rs)
    seen = [b for c in cls for b in c.members]
    assert sorted(seen) == sorted(rs.roots)
    for c in cls:
        rep = c.representative
        expected = tuple(b for b in rs.roots if any(b == tuple(k * x for x in rep) for k in (1, 2)))
        assert set(c.members) == set(expected) and len(c.members) <= 2
        assert coarse_class_of(rs, tuple(-x for x in rep)).members == tuple(tuple(-x for x in m) for m in c.members)


def test_span_complement_examples():
    a2 = build_root_system("A", 2)
    assert span_complement_rank(a2, RootSubspace([a2.simple_roots[0]])) == 2
    b3 = build_root_system("B", 3)
    assert span_complement_rank(b3, RootSubspace([(1, 0, 0)])) == 3
    with pytest.raises(PreconditionError):
        span_complement_rank(a2, RootSubspace([]))
    with pytest.raises(PreconditionError):
        span_complement_rank(a2, RootSubspace(list(a2.simple_roots)))
    with pytest.raises(ConstructionError):
        RootSubspace([(1, -1, 0), (2, -2, 0)])


def test_span_complement_rejects_vectors_off_the_root_span():
    a2 = build_root_system("A", 2)
    with pytest.raises(DomainError):
        span_complement_rank(a2, RootSubspace([(1, 1, 1)]))


def test_span_complement_rejects_reducible():
    from dataclasses import replace

    a2 = build_root_system("A", 2)
    # A1 x A1 sitting inside Z^4
    fake = replace(a2, rank=2, simple_roots=((1, -1, 0, 0), (0, 0, 1, -1)), gram=((2, 0), (0, 2)))
    with pytest.raises(UnsupportedInputError):
        span_complement_rank(fake, RootSubspace([(1, -1, 0, 0)]))


@pytest.mark.parametrize("t,r", [(t, r) for t, r in SMALL if (r or 4) <= 3] + [("G2", None)])
def test_root_span_lemma_on_root_subsets(t, r):
    # W spanned by any nonempty set of roots with W != V
    rs = build_root_system(t, r)
    from itertools import combinations

    pos = rs.positive_roots
    seen = set()
    for size in (1, 2):
        for sub in combinations(pos, size):
            if rank_of(list(sub)) >= rs.rank:
                continue
            W = RootSubspace.spanned_by(sub)
            key = frozenset(b for b in rs.roots if in_span(list(W.basis), b))
            if key in seen:
                continue
            seen.add(key)
            assert span_complement_rank(rs, W) == rs.rank


@given(st.sampled_from(SMALL), st.data())
def test_root_span_lemma_random(tr, data):
    rs = build_root_system(*tr)
    if rs.rank < 2:
        return
    k = data.draw(st.integers(1, rs.rank - 1))
    picks = data.draw(st.lists(st.sampled_from(rs.roots), min_size=1, max_size=k))
    if rank_of(picks) >= rs.rank:
        return
    assert span_complement_rank(rs, RootSubspace.spanned_by(picks)) == rs.rank


@pytest.mark.parametrize(
    "t,r,expected",
    [("A", 3, ("A", 3)), ("D", 3, ("A", 3)), ("B", 2, ("C", 2)), ("C", 2, ("C", 2)), ("B", 4, ("B", 4)),
     ("C", 4, ("C", 4)), ("D", 5, ("D", 5)), ("E6", None, ("E6", 6)), ("E7", None, ("E7", 7)),
     ("E8", None, ("E8", 8)), ("F4", None, ("F4", 4)), ("G2", None, ("G2", 2)), ("A", 1, ("A", 1))],
)
def test_identify_type(t, r, expected):
    assert identify_type(build_root_system(t, r).gram) == expected


def test_cartan_matrix_b2():
    b2 = build_root_system("B", 2)
    # a_ij = 2<a_i, a_j>/<a_j, a_j>; alpha_1 long, alpha_2 short
    assert cartan_matrix(b2.gram) == ((2, -2), (-1, 2))
