"""Standard parabolic subgroups and the codimension-type invariants v, r, r0.

A standard parabolic is encoded by the set of simple-root indices it keeps
(1-based, as in the usual alpha_1, ..., alpha_n numbering). A root lies in
span(Pi_Q) exactly when its support in the simple basis is contained in
Pi_Q, so all set computations reduce to bitmask containment.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Tuple, Union

from .catalogue import GroupDescriptor
from .rootkit import (
    CoarseClass,
    Root,
    RootSystem,
    coarse_classes,
    components_of_mask,
    indices_to_mask,
    mask_to_indices,
)


@dataclass(frozen=True)
class ParabolicSubset:
    pi_Q: FrozenSet[int]
    sigma_Q: FrozenSet[Root]
    missing_roots: Tuple[Root, ...]
    missing_classes: Tuple[CoarseClass, ...]

    def is_proper(self, rank: int) -> bool:
        return len(self.pi_Q) < rank


def _mask(desc: GroupDescriptor, pi_Q: Iterable[int]) -> int:
    return indices_to_mask(pi_Q, desc.rank)


def parabolic(desc: GroupDescriptor, pi_Q: Iterable[int]) -> ParabolicSubset:
    """Root data of the standard parabolic keeping the simple roots ``pi_Q``."""
    rs = desc.root_system
    mask = _mask(desc, pi_Q)
    sigma = []
    missing = []
    for beta in rs.roots:
        if rs.is_positive(beta) or not (rs.support(beta) & ~mask):
            sigma.append(beta)
        else:
            missing.append(beta)
    missing_set = set(missing)
    classes = tuple(c for c in coarse_classes(rs) if c.representative in missing_set)
    return ParabolicSubset(frozenset(mask_to_indices(mask)), frozenset(sigma), tuple(missing), classes)


def flag_codimension(desc: GroupDescriptor, pq: ParabolicSubset) -> int:
    """dim G/Q: the multiplicities of the missing roots, summed."""
    return sum(desc.mult_of(beta) for beta in pq.missing_roots)


def r0_of_class(desc: GroupDescriptor, c: CoarseClass) -> int:
    total = sum(desc.mult_of(beta) for beta in c.members)
    return 1 if total == 1 else 2


def r0_of_parabolic(desc: GroupDescriptor, pq: ParabolicSubset) -> int:
    return sum(r0_of_class(desc, c) for c in pq.missing_classes)


def maximal_parabolics(desc: GroupDescriptor) -> List[ParabolicSubset]:
    full = set(range(1, desc.rank + 1))
    return [parabolic(desc, full - {i}) for i in range(1, desc.rank + 1)]


def _max_counts(desc: GroupDescriptor) -> List[Tuple[int, int, int]]:
    # the quantities are monotone in Pi_Q, so minima over proper parabolics
    # are attained at the maximal ones
    c = counter_for(desc)
    return [c.counts(c.full & ~(1 << i)) for i in range(c.rank)]


def v_of_group(desc: GroupDescriptor) -> int:
    """Minimal codimension of a proper parabolic subgroup."""
    return min(t[0] for t in _max_counts(desc))


def r_of_group(desc: GroupDescriptor) -> int:
    """Minimal number of coarse classes missing from a proper parabolic."""
    return min(t[1] for t in _max_counts(desc))


def r0_of_group(desc: GroupDescriptor) -> int:
    return min(t[2] for t in _max_counts(desc))


def dynkin_components(desc: Union[GroupDescriptor, RootSystem], pi_Q: Iterable[int]) -> List[Tuple[int, ...]]:
    """Connected components of the Dynkin diagram restricted to ``pi_Q``."""
    rs = desc.root_system if isinstance(desc, GroupDescriptor) else desc
    mask = indices_to_mask(pi_Q, rs.rank)
    return [mask_to_indices(c) for c in components_of_mask(rs.adjacency, mask)]


# --- component-count route -------------------------------------------------------


class ParabolicCounter:
    """Per-mask v/r/r0 counts computed from connected components.

    Root supports are connected, so a positive root lies in span(Pi_Q)
    exactly when its support sits inside one component of Pi_Q. Each
    quantity is therefore a total minus a sum of per-component terms, and the
    per-component terms are cached.
    """

    def __init__(self, desc: GroupDescriptor):
        self.desc = desc
        rs = desc.root_system
        self.rank = rs.rank
        self.full = (1 << rs.rank) - 1
        self.adjacency = rs.adjacency
        mult = desc.mult
        agg: Dict[int, List[int]] = {}
        for support, cls, double_cls, indivisible, count in rs.profile:
            w = agg.setdefault(support, [0, 0, 0])
            w[0] += count * mult[cls]
            if indivisible:
                total = mult[cls] + (mult[double_cls] if double_cls else 0)
                w[1] += count
                w[2] += count * (1 if total == 1 else 2)
        self._supports = tuple((s, tuple(w)) for s, w in sorted(agg.items()))
        self.totals = tuple(sum(w[k] for _, w in self._supports) for k in range(3))
        self._inside: Dict[int, Tuple[int, int, int]] = {}

    def inside(self, comp: int) -> Tuple[int, int, int]:
        """(codim, classes, r0) weight of positive roots supported in ``comp``."""
        got = self._inside.get(comp)
        if got is None:
            a = b = c = 0
            for s, w in self._supports:
                if not s & ~comp:
                    a += w[0]
                    b += w[1]
                    c += w[2]
            got = self._inside[comp] = (a, b, c)
        return got

    def components(self, mask: int) -> Tuple[int, ...]:
        return components_of_mask(self.adjacency, mask)

    def counts(self, mask: int) -> Tuple[int, int, int]:
        """(dim G/Q, missing classes, r0(Q)) for the parabolic with simple-root mask ``mask``."""
        a, b, c = self.totals
        for comp in self.components(mask):
            x, y, z = self.inside(comp)
            a -= x
            b -= y
            c -= z
        return a, b, c


@lru_cache(maxsize=1024)
def counter_for(desc: GroupDescriptor) -> ParabolicCounter:
    return ParabolicCounter(desc)

