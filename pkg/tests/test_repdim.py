from itertools import combinations

import pytest
from hypothesis import assume, given, strategies as st

from liebounds.catalogue import describe, make_spec
from liebounds.errors import DomainError, IdentificationError, PreconditionError, ScaleLimitError, UnsupportedInputError
from liebounds.repdim import (
    FREUDENTHAL_MAX_DIM,
    DominantWeight,
    classifier_for,
    delta_shape,
    freudenthal_dim,
    identify_subalgebra,
    min_nontrivial_complex_dim,
    min_real_rep,
    n_of_subalgebra,
    real_rep_report,
    search_box,
    subalgebra_signature,
    weyl_dim,
)
from liebounds.rootkit import indices_to_mask

from oracles import components, signature_by_filtering


def unit(i, r, k=1):
    return tuple(k * (j == i - 1) for j in range(r))


def test_weyl_dim_examples():
    assert weyl_dim("A4", unit(2, 4)) == 10
    assert weyl_dim("C4", unit(1, 4)) == 8
    assert weyl_dim("D5", unit(4, 5)) == 16
    assert weyl_dim(("E6", 6), (0,) * 6) == 1
    assert weyl_dim("E8", unit(8, 8)) == 248
    with pytest.raises(DomainError):
        weyl_dim("A2", (1, -1))
    with pytest.raises(DomainError):
        DominantWeight((0, -2))


@pytest.mark.parametrize("ell", range(4, 9))
def test_adjoint_of_type_a(ell):
    lam = tuple(1 if i in (0, ell - 1) else 0 for i in range(ell))
    assert weyl_dim(("A", ell), lam) == ell * (ell + 2)


def test_min_complex_dim_examples():
    for ell in range(2, 8):
        d, mins = min_nontrivial_complex_dim(("A", ell))
        assert d == ell + 1 and set(mins) == {unit(1, ell), unit(ell, ell)}
    for ell in range(2, 8):
        d, mins = min_nontrivial_complex_dim(("C", ell))
        assert d == 2 * ell and mins == [unit(1, ell)]
    for n in range(5, 9):
        d, mins = min_nontrivial_complex_dim(("D", n))
        assert d == 2 * n and mins == [unit(1, n)]


def test_classifier_examples():
    c = classifier_for("Sp(3,2)")
    assert c.s0 == (1, 2, 3, 4, 5) and c.eps_indices == frozenset({1, 3, 5})
    c = classifier_for("SO*(16)")
    assert c.s0 == tuple(range(1, 9))
    c = classifier_for("SO*(14)")
    assert c.s0 == (1, 2, 3, 4, 5, 7, 6)
    c = classifier_for("SU(4,3)")
    assert c.s0 == (6, 5, 4, 3, 2, 1) and c.eps_indices is None
    with pytest.raises(UnsupportedInputError):
        classifier_for("SO+(7,3)")
    with pytest.raises(UnsupportedInputError):
        classifier_for("SU(2,2)")


@pytest.mark.parametrize("real_form", ["SU(3,2)", "SU(5,5)", "Sp(4,2)", "SO*(10)", "SO*(16)", "SO*(18)"])
def test_s0_is_an_involutive_diagram_automorphism(real_form):
    from liebounds.rootkit import build_root_system

    c = classifier_for(real_form)
    rs = build_root_system(*c.complex_type)
    r = rs.rank
    for i in range(r):
        assert c.s0[c.s0[i] - 1] == i + 1
        for j in range(r):
            assert rs.gram[i][j] * rs.gram[c.s0[i] - 1][c.s0[i] - 1] == rs.gram[c.s0[i] - 1][c.s0[j] - 1] * rs.gram[i][i]


def test_min_real_rep_examples():
    for m in range(2, 7):
        for n in range(2, m + 1):
            if (m, n) != (2, 2):
                assert min_real_rep(make_spec("SU", m, n)) == 2 * (m + n)
            assert min_real_rep(make_spec("Sp_pq", m, n)) == 4 * (m + n)
    for n in range(5, 11):
        assert min_real_rep(make_spec("SOstar", n)) == 4 * n
    assert min_real_rep("SU(2,2)") == 6
    assert real_rep_report("SU(2,2)").source == "catalogue"
    assert real_rep_report("SO*(8)").source == "catalogue"
    assert min_real_rep("SO+(7,3)") == 10
    with pytest.raises(UnsupportedInputError):
        min_real_rep("EII")


def test_minimizer_unique_up_to_s0():
    for spec in ["SU(4,3)", "SU(3,3)", "Sp(3,2)", "SO*(10)", "SO*(12)"]:
        rep = real_rep_report(spec)
        assert rep.source == "classifier" and rep.unique_up_to_s0


def test_freudenthal_examples():
    assert freudenthal_dim("A2", (1, 1)) == 8
    assert freudenthal_dim("B3", (0, 0, 0)) == 1
    assert freudenthal_dim("C3", (0, 1, 0)) == 14
    assert freudenthal_dim("G2", (1, 1)) == 64
    assert freudenthal_dim("E6", unit(1, 6)) == 27
    assert freudenthal_dim("F4", unit(4, 4)) == 26
    with pytest.raises(ScaleLimitError):
        freudenthal_dim("A7", unit(1, 7))


TYPES = [("A", r) for r in range(1, 5)] + [("B", r) for r in range(2, 5)] + [("C", r) for r in range(2, 5)]
TYPES += [("D", 4), ("G2", 2), ("F4", 4)]


@given(st.sampled_from(TYPES), st.data())
def test_weyl_matches_freudenthal_random(ctype, data):
    lam = tuple(data.draw(st.lists(st.integers(0, 2), min_size=ctype[1], max_size=ctype[1])))
    d = weyl_dim(ctype, lam)
    # stay inside the oracle's documented scale
    assume(sum(lam) <= 4 and d <= FREUDENTHAL_MAX_DIM)
    assert d == freudenthal_dim(ctype, lam)


MONO_TYPES = [(t, r) for t in "ABCD" for r in range(2, 7) if (t, r) != ("D", 2)] + [("E6", 6), ("E7", 7), ("F4", 4), ("G2", 2)]


@pytest.mark.parametrize("ctype", MONO_TYPES)
def test_weyl_dim_strictly_monotone(ctype):
    r = ctype[1]
    for lam in search_box(r, 2) + [(0,) * r]:
        d = weyl_dim(ctype, lam)
        for i in range(r):
            bumped = tuple(x + (j == i) for j, x in enumerate(lam))
            assert weyl_dim(ctype, bumped) > d


@pytest.mark.parametrize("real_form", ["SU(4,2)", "SU(5,5)", "SO*(14)", "SO*(18)"])
def test_dimension_symmetric_under_s0(real_form):
    c = classifier_for(real_form)
    for lam in search_box(c.complex_type[1], 3):
        assert weyl_dim(c.complex_type, lam) == weyl_dim(c.complex_type, c.apply_s0(lam))


@given(st.sampled_from(["Sp(3,2)", "Sp(4,4)", "SO*(12)", "SO*(14)", "SO*(20)"]), st.data())
def test_eps_is_a_homomorphism(real_form, data):
    c = classifier_for(real_form)
    r = c.complex_type[1]

    def fixed():
        lam = list(data.draw(st.lists(st.integers(0, 3), min_size=r, max_size=r)))
        for i in range(r):
            lam[c.s0[i] - 1] = lam[i] = max(lam[i], lam[c.s0[i] - 1])
        return tuple(lam)

    a, b = fixed(), fixed()
    assert c.is_s0_fixed(a) and c.is_s0_fixed(b)
    s = tuple(x + y for x, y in zip(a, b))
    assert c.eps(s) == c.eps(a) * c.eps(b)


@pytest.mark.parametrize("real_form", ["Sp(2,2)", "Sp(3,2)", "Sp(4,3)", "SO*(10)", "SO*(12)", "SO*(16)", "SO*(18)"])
def test_kernel_minimum_exceeds_n(real_form):
    c = classifier_for(real_form)
    n = min_real_rep(real_form)
    kernel = [lam for lam in search_box(c.complex_type[1]) if c.is_s0_fixed(lam) and c.eps(lam) == 1]
    assert min(weyl_dim(c.complex_type, lam) for lam in kernel) > n


def test_eps_undefined_off_fixed_lattice():
    c = classifier_for("SO*(14)")
    with pytest.raises(DomainError):
        c.eps(unit(6, 7))
    with pytest.raises(UnsupportedInputError):
        classifier_for("SU(3,2)").eps((1, 0, 0, 1))


# --- subalgebras ----------------------------------------------------------------


def test_n_of_subalgebra_examples():
    for m in range(3, 9):
        for n in range(3, m + 1):
            d = describe(make_spec("SU", m, n))
            expected = 6 if (m, n) == (3, 3) else 2 * (m + n - 2)
            assert n_of_subalgebra(d, range(2, n + 1)) == expected
            assert f"SU({m - 1},{n - 1})" in [str(s) for s in identify_subalgebra(d, range(2, n + 1))]
    for n in range(4, 9):
        d = describe(make_spec("SL_H", n))
        for p, q in combinations(range(1, n), 2):
            assert n_of_subalgebra(d, range(p, q + 1)) == 4 * (q - p + 2)
    for n in range(3, 7):
        for m in range(n + 1, n + 5):
            d = describe(make_spec("SOplus", m, n))
            for k in range(0, n - 1):
                if (m - k, n - k) == (3, 2):
                    # so(3,2) = sp(4,R) has a 4-dimensional representation
                    assert n_of_subalgebra(d, range(k + 1, n + 1)) == 4
                    continue
                assert n_of_subalgebra(d, range(k + 1, n + 1)) == m + n - 2 * k


def test_identification_is_by_restricted_data():
    eii = describe("EII")
    assert [str(s) for s in identify_subalgebra(eii, [1, 2])] == ["SL(3,R)"]
    assert [str(s) for s in identify_subalgebra(eii, [3, 4])] == ["SL(3,C)"]
    assert [str(s) for s in identify_subalgebra(eii, [2, 3, 4])] == ["SU(3,3)"]
    d = describe("SO(12,C)")
    assert [str(s) for s in identify_subalgebra(d, [3, 4, 5, 6])] == ["SO(8,C)"]


def test_subalgebra_preconditions():
    d = describe("SU(5,4)")
    with pytest.raises(PreconditionError):
        subalgebra_signature(d, [2])
    with pytest.raises(PreconditionError):
        subalgebra_signature(d, [1, 3])
    with pytest.raises(IdentificationError):
        from liebounds.repdim import identify_subalgebra_by_signature
        from liebounds.catalogue import default_catalogue

        identify_subalgebra_by_signature(("A", 3, (7,)), default_catalogue())


SIG_SAMPLE = ["SU(5,3)", "SU(4,4)", "Sp(4,2)", "Sp(3,3)", "SO*(14)", "SO*(16)", "SO+(8,4)", "SO+(5,5)", "SL(5,H)",
              "SO(11,C)", "SO(12,C)", "E6", "F4", "EII", "G2", "SL(5,R)", "Sp(8,R)"]


@pytest.mark.parametrize("spec", SIG_SAMPLE)
def test_fast_signature_matches_root_filtering(spec):
    d = describe(spec)
    rs = d.root_system
    for size in range(2, d.rank + 1):
        for delta in combinations(range(1, d.rank + 1), size):
            if len(components(rs, delta)) != 1:
                continue
            label, rank, norms, _ = delta_shape(rs, indices_to_mask(delta, d.rank))
            sig = subalgebra_signature(d, delta)
            slow = signature_by_filtering(d, delta)
            assert norms == tuple(k for k, _ in slow)
            assert sig[2] == tuple(m for _, m in slow)
            assert rank == size


@pytest.mark.parametrize("spec", SIG_SAMPLE)
def test_subalgebra_n_agrees_with_classifier(spec):
    d = describe(spec)
    rs = d.root_system
    for size in range(2, d.rank):
        for delta in combinations(range(1, d.rank + 1), size):
            if len(components(rs, delta)) != 1:
                continue
            forms = identify_subalgebra(d, delta)
            n = n_of_subalgebra(d, delta)
            for f in forms:
                try:
                    rep = real_rep_report(f)
                except UnsupportedInputError:
                    continue
                if rep.source == "classifier":
                    assert rep.value == n
