"""Named verification checks over parameter grids.

Each check returns a CheckResult listing every failing instance with the
expected and computed values; the CLI maps that onto exit codes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .bounds import default_grid, s_lower_value, stated_range, theorem_range
from .catalogue import Catalogue, GroupDescriptor, default_catalogue, make_spec
from .errors import NotTabulatedError, UnsupportedInputError
from .flagcalc import r0_of_group, r_of_group, v_of_group
from .repdim import freudenthal_dim, min_nontrivial_complex_dim, real_rep_report, search_box, weyl_dim
from .rootkit import (
    RootSubspace,
    build_root_system,
    filtration_is_ideal,
    positive_roots_by_height,
    span_complement_rank,
)


@dataclass(frozen=True)
class Failure:
    instance: str
    quantity: str
    expected: object
    computed: object

    def __str__(self) -> str:
        return f"{self.instance}: {self.quantity} expected {self.expected}, computed {self.computed}"


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: List[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, instance: str, quantity: str, expected, computed) -> None:
        self.checked += 1
        if expected != computed:
            self.failures.append(Failure(instance, quantity, expected, computed))


def catalogued(
    catalogue: Catalogue, max_param: int, table_only: bool = False, max_gap: Optional[int] = None
) -> Iterator[GroupDescriptor]:
    """Descriptors on the grid n <= m <= max_param (and m - n <= max_gap if given)."""
    for rec in catalogue:
        if not rec.params:
            grid = [()]
        elif len(rec.params) == 1:
            grid = [(n,) for n in range(1, max_param + 1)]
        else:
            grid = [(m, n) for n in range(1, max_param + 1) for m in range(n, max_param + 1)]
            if max_gap is not None:
                grid = [p for p in grid if p[0] - p[1] <= max_gap]
        for params in grid:
            env = dict(zip(rec.params, params))
            if not rec.valid(env) or (table_only and not rec.in_table1(env)):
                continue
            try:
                yield catalogue.describe(make_spec(rec.family, *params))
            except NotTabulatedError:
                continue


def _independent_n(desc: GroupDescriptor) -> Optional[int]:
    # complex groups: a complex irreducible of dimension d is real of dimension 2d
    if desc.complex:
        return 2 * min_nontrivial_complex_dim(desc.restricted_type)[0]
    try:
        rep = real_rep_report(desc.spec)
    except UnsupportedInputError:
        return None
    return rep.value if rep.source == "classifier" else None


def check_table1(max_param: int = 12, catalogue: Optional[Catalogue] = None) -> CheckResult:
    """Computed v and r against the stored table formulas; n against its independent computation."""
    cat = catalogue or default_catalogue()
    res = CheckResult("table1")
    for desc in catalogued(cat, max_param, table_only=True):
        name = str(desc)
        res.expect(name, "v", cat.tabulated(desc.spec, "table_v"), v_of_group(desc))
        res.expect(name, "r", cat.tabulated(desc.spec, "table_r"), r_of_group(desc))
        n = _independent_n(desc)
        if n is not None:
            res.expect(name, "n", desc.n_G, n)
        if desc.v_cpt is None:
            res.expect(name, "v_cpt", "stored", None)
    return res


def closed_form_s(family: str, params: Tuple[int, ...]) -> Optional[int]:
    """The published closed form for the lower bound, or None outside its side conditions."""
    if family == "SL_H":
        (n,) = params
        if n >= 5:
            return 4 * n - 4
        return {4: 8, 3: 4}.get(n)
    if family == "SOstar":
        (n,) = params
        return min(4 * n - 7, n * n // 4) if n >= 4 else None
    if family == "SL_C":
        (n,) = params
        return 2 * n - 2 if n >= 5 else None
    if len(params) != 2:
        return None
    m, n = params
    if family == "SOplus":
        if n >= 3 and m >= n + 2:
            return min(m + n - 2, n * (n + 3) // 2)
        if n == 2 and m >= 4:
            return 4
        return None
    if family == "SU":
        if (m, n) == (2, 2):
            return 4
        return min(2 * m + 2 * n - 3, n * (n + 1)) if m >= n >= 2 else None
    if family == "Sp_pq":
        return min(4 * m + 4 * n - 7, n * (n + 1)) if m >= n >= 2 else None
    return None


# complex families without rank-one factors: (family, parameter giving rank r)
_COMPLEX_BY_RANK: Dict[str, Callable[[int], Optional[Tuple[int, ...]]]] = {
    "SL_C": lambda r: (r + 1,),
    "Sp_C": lambda r: (r,),
    "SO_C": lambda r: (2 * r + 1,) if r >= 2 else None,
}


def check_s_formulas(max_param: int = 14, catalogue: Optional[Catalogue] = None) -> CheckResult:
    cat = catalogue or default_catalogue()
    res = CheckResult("s-formulas")
    for family in ("SL_H", "SOplus", "SU", "Sp_pq", "SOstar", "SL_C"):
        for desc in catalogued(cat, max_param):
            if desc.family != family:
                continue
            expected = closed_form_s(family, desc.params)
            if expected is not None:
                res.expect(str(desc), "s_lower", expected, s_lower_value(desc))
    for family, param in _COMPLEX_BY_RANK.items():
        for r in range(2, 9):
            params = param(r)
            if params is None:
                continue
            for p in {params, (2 * r,)} if family == "SO_C" and r >= 3 else {params}:
                desc = cat.describe(make_spec(family, *p))
                res.expect(str(desc), "s_lower = v", v_of_group(desc), s_lower_value(desc))
    for family in ("E6", "E7", "E8", "F4", "G2", "EII"):
        desc = cat.describe(make_spec(family))
        res.expect(str(desc), "s_lower = v", v_of_group(desc), s_lower_value(desc))
    return res


def _theorem_check(name: str, families: Tuple[str, ...], top: int) -> CheckResult:
    res = CheckResult(name)
    for family in families:
        grid = default_grid(family, top if family != "SOstar" else max(top, 60))
        found = set(theorem_range(family, grid))
        for params in grid:
            res.expect(f"{family}{params}", "in range", stated_range(family, params), params in found)
    return res


def check_theorem1(max_param: int = 40, catalogue: Optional[Catalogue] = None) -> CheckResult:
    return _theorem_check("theorem1", ("SL_H", "SOplus", "SU", "SOstar"), max_param)


def check_theorem_sp(max_param: int = 40, catalogue: Optional[Catalogue] = None) -> CheckResult:
    return _theorem_check("theoremSp", ("Sp_pq",), max_param)


def check_sandwich(max_rank: int = 10, catalogue: Optional[Catalogue] = None) -> CheckResult:
    """r <= r0 <= s_lower <= v on catalogued descriptors up to the rank bound.

    Two-parameter families are sampled with m - n <= 4; larger gaps change
    only one multiplicity.
    """
    cat = catalogue or default_catalogue()
    res = CheckResult("sandwich")
    for desc in catalogued(cat, 2 * max_rank + 1, max_gap=4):
        if desc.rank > max_rank or desc.rank < 1:
            continue
        r, r0, v = r_of_group(desc), r0_of_group(desc), v_of_group(desc)
        s = s_lower_value(desc)
        res.expect(str(desc), "r <= r0 <= s_lower <= v", True, r <= r0 <= s <= v)
    return res


BUILT_TYPES = ("A", "B", "C", "D", "BC", "E6", "E7", "E8", "F4", "G2")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "BC": 1}
_FIXED = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}


def built_systems(max_rank: int):
    for t in BUILT_TYPES:
        if t in _FIXED:
            if _FIXED[t] <= max_rank:
                yield build_root_system(t)
            continue
        for r in range(_MIN_RANK[t], max_rank + 1):
            yield build_root_system(t, r)


def check_ideals(max_rank: int = 8, catalogue: Optional[Catalogue] = None) -> CheckResult:
    res = CheckResult("ideals")
    for rs in built_systems(max_rank):
        for k in range(len(positive_roots_by_height(rs)) + 1):
            res.expect(rs.label, f"u_{k} ideal", True, filtration_is_ideal(rs, k))
    return res


def check_rootspan(max_rank: int = 4, catalogue: Optional[Catalogue] = None) -> CheckResult:
    """Roots off W and off its orthogonal complement span V, for W spanned by simple roots."""
    res = CheckResult("rootspan")
    for rs in built_systems(max_rank):
        if rs.rank < 2:
            continue
        for size in range(1, rs.rank):
            for sub in itertools.combinations(range(rs.rank), size):
                W = RootSubspace([rs.simple_roots[i] for i in sub])
                res.expect(f"{rs.label} W=span{tuple(i + 1 for i in sub)}", "rank", rs.rank, span_complement_rank(rs, W))
    return res


def check_weyl_oracle(max_rank: int = 5, catalogue: Optional[Catalogue] = None) -> CheckResult:
    """Weyl dimension formula against the Freudenthal recursion, sum of labels <= 3."""
    res = CheckResult("weyl-oracle")
    types = [(t, r) for t in ("A", "B", "C", "D") for r in range(_MIN_RANK.get(t, 1), max_rank + 1)]
    types.append(("G2", 2))
    for t, r in types:
        ctype = (t, r)
        for lam in search_box(r, 3):
            res.expect(f"{t}{r} {lam}", "dim", weyl_dim(ctype, lam), freudenthal_dim(ctype, lam))
    return res


CHECKS: Dict[str, Tuple[Callable[..., CheckResult], str]] = {
    "table1": (check_table1, "param"),
    "s-formulas": (check_s_formulas, "param"),
    "theorem1": (check_theorem1, "param"),
    "theoremSp": (check_theorem_sp, "param"),
    "sandwich": (check_sandwich, "rank"),
    "ideals": (check_ideals, "rank"),
    "rootspan": (check_rootspan, "rank"),
    "weyl-oracle": (check_weyl_oracle, "rank"),
}


def run_check(name: str, bound: Optional[int] = None, catalogue: Optional[Catalogue] = None) -> CheckResult:
    """Run one named check; ``bound`` is the parameter or rank limit the check understands."""
    try:
        fn, _ = CHECKS[name]
    except KeyError:
        raise UnsupportedInputError(f"unknown check {name!r}; expected one of {', '.join(CHECKS)}") from None
    if bound is None:
        return fn(catalogue=catalogue)
    return fn(bound, catalogue=catalogue)
