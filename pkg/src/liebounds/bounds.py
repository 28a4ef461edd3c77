"""Lower bounds for s(G) from parabolic data.

For every proper standard parabolic Q three kinds of bound are available:
the coarse count r0(Q), one superrigidity bound |Pi \\ Delta| * n(g_Delta)
per connected component Delta of Pi_Q with at least two nodes, and for a
few families a refined bound n(g_Delta) + 1 when Pi_Q = {alpha_2..alpha_n}.
The effective bound at Q is the largest applicable one; s_lower is the
minimum of the effective bounds over all proper Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .catalogue import GroupDescriptor, default_catalogue, describe, make_spec
from .errors import PreconditionError, ScaleLimitError
from .flagcalc import counter_for, v_of_group
from .repdim import _n_for_signature, delta_shape, n_of_subalgebra
from .rootkit import components_of_mask, indices_to_mask, mask_to_indices

MAX_ENUMERATION_RANK = 20


@dataclass(frozen=True)
class ParabolicBounds:
    pi_Q: Tuple[int, ...]
    r0_bound: int
    superrigidity_bounds: Tuple[Tuple[Tuple[int, ...], int], ...]
    refined_bound: Optional[int]
    effective: int


@dataclass(frozen=True)
class BoundReport:
    """Bounds for every proper parabolic and their minimum.

    ``s_lower`` is a lower bound for s(G); nothing here claims equality.
    """

    group: str
    s_lower: int
    argmin: Tuple[Tuple[int, ...], ...]
    entries: Tuple[ParabolicBounds, ...]
    kind: str = "lower bound"


def refined_applies(desc: GroupDescriptor) -> bool:
    f, p = desc.family, desc.params
    if f == "SU":
        return p[1] >= 3 and p != (3, 3)
    if f == "Sp_pq":
        return p[1] >= 3
    if f == "SOstar":
        # SO*(2m+2n) with m in {n, n+1}, n >= 3, (m,n) != (3,3)
        return p[0] >= 7
    return False


def _n_of_mask(desc: GroupDescriptor, mask: int) -> int:
    rs = desc.root_system
    label, rank, _, reps = delta_shape(rs, mask)
    return _n_for_signature((label, rank, tuple(desc.mult_of(r) for r in reps)), default_catalogue())


def superrigidity_bound(desc: GroupDescriptor, pi_Q: Iterable[int], delta: Iterable[int]) -> Optional[int]:
    """|Pi \\ Delta| * n(g_Delta), or None when |Delta| < 2."""
    rs = desc.root_system
    mask = indices_to_mask(pi_Q, rs.rank)
    dmask = indices_to_mask(delta, rs.rank)
    if dmask not in components_of_mask(rs.adjacency, mask):
        raise PreconditionError(f"{tuple(sorted(set(delta)))} is not a connected component of {tuple(sorted(set(pi_Q)))}")
    size = bin(dmask).count("1")
    if size < 2:
        return None
    return (rs.rank - size) * n_of_subalgebra(desc, mask_to_indices(dmask))


def refined_bound(desc: GroupDescriptor, pi_Q: Iterable[int]) -> Optional[int]:
    """n(g_Delta) + 1 for Delta = {alpha_2..alpha_n} in the families where it holds, else None."""
    r = desc.rank
    pi = set(pi_Q)
    indices_to_mask(pi, r)
    if not refined_applies(desc) or pi != set(range(2, r + 1)):
        return None
    return n_of_subalgebra(desc, range(2, r + 1)) + 1


class _Engine:
    def __init__(self, desc: GroupDescriptor):
        self.desc = desc
        self.rs = desc.root_system
        self.counter = counter_for(desc)
        self.rank = self.rs.rank
        self.full = (1 << self.rank) - 1
        self.refined_mask = self.full & ~1 if refined_applies(desc) else None
        self._sr: Dict[int, Optional[int]] = {}

    def sr(self, comp: int) -> Optional[int]:
        if comp not in self._sr:
            size = bin(comp).count("1")
            self._sr[comp] = None if size < 2 else (self.rank - size) * _n_of_mask(self.desc, comp)
        return self._sr[comp]

    def refined(self) -> int:
        return _n_of_mask(self.desc, self.refined_mask) + 1

    def evaluate(self, mask: int) -> Tuple[int, List[Tuple[int, int]], Optional[int], int]:
        _, _, r0 = self.counter.counts(mask)
        srs = []
        eff = r0
        for comp in self.counter.components(mask):
            v = self.sr(comp)
            if v is not None:
                srs.append((comp, v))
                eff = max(eff, v)
        ref = None
        if mask == self.refined_mask:
            ref = self.refined()
            eff = max(eff, ref)
        return r0, srs, ref, eff


def s_lower(desc: GroupDescriptor, keep_entries: bool = True) -> BoundReport:
    """Enumerate every proper parabolic and report the bounds at each."""
    if desc.rank > MAX_ENUMERATION_RANK:
        raise ScaleLimitError(f"rank {desc.rank} exceeds the enumeration cap {MAX_ENUMERATION_RANK}")
    eng = _Engine(desc)
    best = None
    argmin: List[int] = []
    entries = []
    for mask in range(eng.full):
        r0, srs, ref, eff = eng.evaluate(mask)
        if keep_entries:
            entries.append(
                ParabolicBounds(
                    mask_to_indices(mask),
                    r0,
                    tuple((mask_to_indices(c), v) for c, v in srs),
                    ref,
                    eff,
                )
            )
        if best is None or eff < best:
            best, argmin = eff, [mask]
        elif eff == best:
            argmin.append(mask)
    order = sorted(mask_to_indices(m) for m in argmin)
    entries.sort(key=lambda e: (len(e.pi_Q), e.pi_Q))
    return BoundReport(str(desc), best, tuple(order), tuple(entries))


def _is_path(desc: GroupDescriptor) -> bool:
    return desc.restricted_type[0] in ("A", "B", "C", "BC")


def _s_lower_path(desc: GroupDescriptor) -> int:
    """Interval dynamic programme for diagrams that are paths alpha_1 - ... - alpha_r.

    A proper Pi_Q is a family of non-adjacent intervals. For a threshold t,
    best(t) is the largest r0 weight kept inside intervals whose bounds are
    all <= t; then s_lower = min_t max(t, R0 - best(t)), and since best is
    monotone the minimum sits where the two terms cross.
    """
    eng = _Engine(desc)
    r = eng.rank
    total_r0 = eng.counter.totals[2]
    # r0 weight of the positive roots with support exactly [c, d]
    exact_w = [[0] * r for _ in range(r)]
    for support, w in eng.counter._supports:
        lo = (support & -support).bit_length() - 1
        hi = support.bit_length() - 1
        exact_w[lo][hi] += w[2]
    inside = [[0] * r for _ in range(r)]
    for length in range(1, r + 1):
        for a in range(r - length + 1):
            b = a + length - 1
            v = exact_w[a][b]
            if length > 1:
                v += inside[a + 1][b] + inside[a][b - 1]
                if length > 2:
                    v -= inside[a + 1][b - 1]
            inside[a][b] = v
    cost = [[0] * r for _ in range(r)]
    for a in range(r):
        for b in range(a + 1, r):
            if a == 0 and b == r - 1:
                continue
            m = (1 << (b + 1)) - (1 << a)
            c = eng.sr(m)
            if m == eng.refined_mask:
                c = max(c, eng.refined())
            cost[a][b] = c

    def best(t: int) -> int:
        f = [0] * (r + 1)
        for i in range(r):
            top = f[i]
            for a in range(i + 1):
                if a == 0 and i == r - 1:
                    continue
                if a < i and cost[a][i] > t:
                    continue
                prev = f[a - 1] if a >= 1 else 0
                cand = prev + inside[a][i]
                if cand > top:
                    top = cand
            f[i + 1] = top
        return f[r]

    cands = sorted({0} | {cost[a][b] for a in range(r) for b in range(a + 1, r) if not (a == 0 and b == r - 1)})
    gap = lambda t: total_r0 - best(t)  # noqa: E731
    lo, hi = 0, len(cands)
    while lo < hi:
        mid = (lo + hi) // 2
        if cands[mid] >= gap(cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    options = []
    if lo < len(cands):
        options.append(cands[lo])
    if lo > 0:
        options.append(gap(cands[lo - 1]))
    return min(options)


@lru_cache(maxsize=4096)
def s_lower_value(desc: GroupDescriptor) -> int:
    """s_lower(G) as a number; path diagrams of large rank use the interval programme."""
    if _is_path(desc) and desc.rank > 10:
        return _s_lower_path(desc)
    return s_lower(desc, keep_entries=False).s_lower


def small_multiplicity_check(desc: GroupDescriptor) -> bool:
    """Whether every coarse class has total multiplicity at most 2."""
    mult = desc.mult
    for _, cls, double_cls, indivisible, _ in desc.root_system.profile:
        if indivisible and mult[cls] + (mult[double_cls] if double_cls else 0) > 2:
            return False
    return True


# --- parameter ranges of the main theorems -------------------------------------------

THEOREM_FAMILIES = ("SL_H", "SOplus", "SU", "SOstar", "Sp_pq")


def default_grid(family: str, top: int = 40) -> List[Tuple[int, ...]]:
    if family == "SL_H":
        return [(n,) for n in range(3, top + 1)]
    if family == "SOstar":
        return [(n,) for n in range(4, top + 1)]
    if family == "SOplus":
        grid = [(m, n) for n in range(3, top + 1) for m in range(n + 1, top + 1)]
        return [(m, 2) for m in range(4, top + 1)] + grid
    if family in ("SU", "Sp_pq"):
        return [(m, n) for n in range(2, top + 1) for m in range(n, top + 1)]
    raise PreconditionError(f"no theorem range for family {family!r}")


def stated_range(family: str, params: Sequence[int]) -> bool:
    """The parameter inequalities as published."""
    if family == "SL_H":
        return params[0] >= 5
    if family == "SOstar":
        return params[0] >= 14
    m, n = params
    if family == "SOplus":
        return (3 <= n < m and 2 * m <= n * n + n + 4) or (m, n) == (4, 2)
    if family == "SU":
        return 2 <= n <= m and 2 * m <= n * n - n + 2
    if family == "Sp_pq":
        return 6 <= n <= m and 4 * m <= n * n - 3 * n + 6
    raise PreconditionError(f"no theorem range for family {family!r}")


def theorem_condition(desc: GroupDescriptor) -> bool:
    """s_lower >= v(G), or >= v(G) - 2 for Sp(m,n)."""
    slack = 2 if desc.family == "Sp_pq" else 0
    return s_lower_value(desc) >= v_of_group(desc) - slack


def theorem_range(family: str, grid: Optional[Iterable[Sequence[int]]] = None) -> List[Tuple[int, ...]]:
    """Grid points where the computed bounds reach v(G) (v(G) - 2 for Sp(m,n))."""
    if family not in THEOREM_FAMILIES:
        raise PreconditionError(f"no theorem range for family {family!r}; expected one of {THEOREM_FAMILIES}")
    points = default_grid(family) if grid is None else [tuple(p) for p in grid]
    out = []
    for params in points:
        if theorem_condition(describe(make_spec(family, *params))):
            out.append(tuple(params))
    return sorted(out)
