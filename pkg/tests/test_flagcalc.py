import pytest

from liebounds.catalogue import describe, make_spec
from liebounds.errors import DomainError
from liebounds.flagcalc import (
    counter_for,
    dynkin_components,
    flag_codimension,
    maximal_parabolics,
    parabolic,
    r0_of_class,
    r0_of_group,
    r0_of_parabolic,
    r_of_group,
    v_of_group,
)
from liebounds.rootkit import build_root_system, coarse_class_of, indices_to_mask

from oracles import brute_counts, components, proper_subsets

SAMPLE = [
    "SL(3,C)", "SL(5,C)", "Sp(6,C)", "SO(9,C)", "SO(10,C)", "SL(4,H)", "SO+(7,3)", "SO+(4,4)", "SU(4,2)",
    "SU(3,3)", "Sp(3,2)", "Sp(3,3)", "SO*(10)", "SO*(12)", "G2", "F4", "EII", "SL(5,R)",
]


def test_parabolic_examples():
    d = describe("SL(3,C)")
    rs = d.root_system
    a1, a2 = rs.simple_roots
    neg = lambda v: tuple(-x for x in v)  # noqa: E731
    pq = parabolic(d, [])
    assert len(pq.missing_roots) == 3 and all(not rs.is_positive(b) for b in pq.missing_roots)
    pq = parabolic(d, [1])
    assert set(pq.missing_roots) == {neg(a2), neg(tuple(x + y for x, y in zip(a1, a2)))}
    pq = parabolic(d, [1, 2])
    assert pq.missing_roots == () and not pq.is_proper(2)
    assert set(rs.positive_roots) <= pq.sigma_Q
    with pytest.raises(DomainError):
        parabolic(d, [3])
    with pytest.raises(DomainError):
        parabolic(d, [0])


def test_flag_codimension_examples():
    d = describe("SO+(7,3)")
    assert flag_codimension(d, parabolic(d, [2, 3])) == 8
    d = describe("SL(4,C)")
    assert flag_codimension(d, parabolic(d, [1, 3])) == 8
    assert flag_codimension(d, parabolic(d, [1, 2, 3])) == 0


@pytest.mark.parametrize("n", range(3, 13))
def test_v_and_r_of_sl_complex(n):
    d = describe(make_spec("SL_C", n))
    assert v_of_group(d) == 2 * n - 2
    assert r_of_group(d) == n - 1


@pytest.mark.parametrize("n", range(4, 16))
def test_v_of_so_star(n):
    d = describe(make_spec("SOstar", n))
    assert v_of_group(d) == {4: 6, 6: 15}.get(n, 4 * n - 7)


@pytest.mark.parametrize("n", range(2, 9))
def test_v_of_sp_complex(n):
    assert v_of_group(describe(make_spec("Sp_C", n))) == 4 * n - 2


def test_r_examples():
    for m in range(2, 7):
        for n in range(2, m + 1):
            assert r_of_group(describe(make_spec("SU", m, n))) == 2 * n - 1
    assert r_of_group(describe("G2")) == 5


def test_r0_of_class_examples():
    d = describe("SU(3,3)")
    rs = d.root_system
    assert r0_of_class(d, coarse_class_of(rs, (2, 0, 0))) == 1
    assert r0_of_class(d, coarse_class_of(rs, (1, -1, 0))) == 2
    d = describe("SO+(7,3)")
    assert r0_of_class(d, coarse_class_of(d.root_system, (1, 0, 0))) == 2


@pytest.mark.parametrize("n", range(2, 7))
def test_r0_of_su_nn_at_last_maximal(n):
    d = describe(make_spec("SU", n, n))
    pq = parabolic(d, range(1, n))
    assert r0_of_parabolic(d, pq) == n * n


def test_r0_of_group_examples():
    assert r0_of_group(describe("SL(3,C)")) == 4
    eii = describe("EII")
    assert r0_of_group(eii) == v_of_group(eii) == 21


def test_dynkin_components_examples():
    a4 = build_root_system("A", 4)
    assert dynkin_components(a4, [1, 2, 4]) == [(1, 2), (4,)]
    assert dynkin_components(a4, []) == []
    b5 = build_root_system("B", 5)
    for k in range(5):
        assert dynkin_components(b5, range(k + 1, 6)) == [tuple(range(k + 1, 6))]
    d = describe("E6")
    assert dynkin_components(d, [1, 2, 3, 5, 6]) == components(d.root_system, [1, 2, 3, 5, 6])


@pytest.mark.parametrize("spec", SAMPLE)
def test_fast_counts_match_direct_enumeration(spec):
    d = describe(spec)
    c = counter_for(d)
    for sub in proper_subsets(d.rank):
        pq = parabolic(d, sub)
        direct = (flag_codimension(d, pq), len(pq.missing_classes), r0_of_parabolic(d, pq))
        assert direct == brute_counts(d, sub)
        assert c.counts(indices_to_mask(sub, d.rank)) == direct


@pytest.mark.parametrize("spec", SAMPLE + ["E6", "SU(5,2)", "Sp(4,4)", "SO(12,C)", "SO(13,C)"])
def test_maximal_minima_equal_all_subset_minima(spec):
    d = describe(spec)
    if d.rank > 6:
        pytest.skip("exhaustive range is rank <= 6")
    c = counter_for(d)
    rows = [c.counts(indices_to_mask(sub, d.rank)) for sub in proper_subsets(d.rank)]
    assert v_of_group(d) == min(r[0] for r in rows)
    assert r_of_group(d) == min(r[1] for r in rows)
    assert r0_of_group(d) == min(r[2] for r in rows)
    assert len(maximal_parabolics(d)) == d.rank


@pytest.mark.parametrize("spec", SAMPLE + ["E6", "SU(5,2)", "Sp(4,4)", "SO(12,C)"])
def test_monotone_in_pi_q(spec):
    d = describe(spec)
    c = counter_for(d)
    full = (1 << d.rank) - 1
    for mask in range(full + 1):
        here = c.counts(mask)
        missing = parabolic(d, [i + 1 for i in range(d.rank) if mask >> i & 1]).missing_roots
        for i in range(d.rank):
            if not mask >> i & 1:
                bigger = mask | 1 << i
                there = c.counts(bigger)
                assert all(x >= y for x, y in zip(here, there))
                more = parabolic(d, [j + 1 for j in range(d.rank) if bigger >> j & 1]).missing_roots
                assert set(more) <= set(missing)


@pytest.mark.parametrize("spec", ["SL(4,C)", "Sp(6,C)", "SO(11,C)", "SO(12,C)", "G2", "F4", "EII", "E6"])
def test_r0_equals_codimension_when_multiplicities_small(spec):
    d = describe(spec)
    c = counter_for(d)
    for mask in range(1 << d.rank):
        codim, _, r0 = c.counts(mask)
        assert codim == r0


@pytest.mark.parametrize("spec", SAMPLE)
def test_r0_between_class_count_and_twice(spec):
    d = describe(spec)
    for sub in proper_subsets(d.rank):
        pq = parabolic(d, sub)
        k = len(pq.missing_classes)
        assert k <= r0_of_parabolic(d, pq) <= 2 * k
        assert r0_of_parabolic(d, pq) == sum(r0_of_class(d, cl) for cl in pq.missing_classes)
        assert all(not d.root_system.is_positive(b) for b in pq.missing_roots)


def test_r_le_r0_le_v_on_catalogue():
    from liebounds.verify import catalogued
    from liebounds.catalogue import default_catalogue

    for d in catalogued(default_catalogue(), 9, max_gap=3):
        assert r_of_group(d) <= r0_of_group(d) <= v_of_group(d)
