"""Dimensions of irreducible representations and minimal real representations.

Dominant weights are given by their coefficients on the fundamental weights.
The Weyl product is evaluated with the integer identities

    2<lambda + rho, alpha> = sum_i a_i (k_i + 1) |alpha_i|^2
    2<rho, alpha>          = sum_i a_i |alpha_i|^2

for alpha = sum_i a_i alpha_i, so the whole product is one exact division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from . import exact
from .catalogue import GroupDescriptor, GroupSpec, default_catalogue, make_spec, parse_group_spec
from .catalogue.store import Catalogue, LENGTH_CLASS_NAMES
from .errors import (
    ConstructionError,
    DomainError,
    IdentificationError,
    NotTabulatedError,
    PreconditionError,
    ScaleLimitError,
    UnsupportedInputError,
)
from .rootkit import (
    RootSystem,
    build_root_system,
    cartan_matrix,
    components_of_mask,
    identify_type,
    indices_to_mask,
)

ComplexType = Tuple[str, int]

_REDUCED = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")


@dataclass(frozen=True)
class DominantWeight:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(k) for k in self.coeffs))
        if any(k < 0 for k in self.coeffs):
            raise DomainError(f"weight {self.coeffs} is not dominant")

    @classmethod
    def fundamental(cls, i: int, rank: int, times: int = 1) -> "DominantWeight":
        c = [0] * rank
        c[i - 1] = times
        return cls(tuple(c))

    def __add__(self, other: "DominantWeight") -> "DominantWeight":
        return DominantWeight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)


WeightLike = Union[DominantWeight, Sequence[int]]


def _coerce_type(complex_type) -> ComplexType:
    if isinstance(complex_type, str):
        s = complex_type.strip().upper()
        if s in ("E6", "E7", "E8", "F4", "G2"):
            return s, int(s[1])
        label, digits = s[0], s[1:]
        if not digits.isdigit():
            raise ConstructionError(f"cannot read complex type {complex_type!r}")
        return label, int(digits)
    label, rank = complex_type
    label = str(label).upper()
    if label in ("E", "F", "G"):
        label = f"{label}{rank}"
    return label, int(rank)


def _system(complex_type) -> RootSystem:
    label, rank = _coerce_type(complex_type)
    if label not in _REDUCED:
        raise UnsupportedInputError(f"{label} is not the type of a complex simple Lie algebra")
    return build_root_system(label, rank)


def _weight(rs: RootSystem, lam: WeightLike) -> Tuple[int, ...]:
    w = lam if isinstance(lam, DominantWeight) else DominantWeight(tuple(lam))
    if len(w.coeffs) != rs.rank:
        raise DomainError(f"weight has {len(w.coeffs)} coefficients, type {rs.label} has rank {rs.rank}")
    return w.coeffs


@lru_cache(maxsize=None)
def _weyl_data(rs: RootSystem):
    sq = [rs.gram[i][i] for i in range(rs.rank)]
    rows = []
    den = 1
    for beta in rs.positive_roots:
        a = rs.coefficients(beta)
        terms = tuple((i, a[i] * sq[i]) for i in range(rs.rank) if a[i])
        rows.append(terms)
        den *= sum(t for _, t in terms)
    return tuple(rows), den


def weyl_dim(complex_type, lam: WeightLike) -> int:
    """Dimension of the irreducible representation with highest weight ``lam``.

    >>> weyl_dim("A4", (0, 1, 0, 0))
    10
    """
    rs = _system(complex_type)
    k = _weight(rs, lam)
    rows, den = _weyl_data(rs)
    num = 1
    for terms in rows:
        num *= sum(t * (k[i] + 1) for i, t in terms)
    d, rem = divmod(num, den)
    assert rem == 0, "Weyl product is not an integer"
    return d


def search_box(rank: int, total: int = 2) -> List[Tuple[int, ...]]:
    """All nonzero dominant weights with coefficient sum at most ``total``, in a fixed order."""
    out = []
    for s in range(1, total + 1):
        for combo in combinations_with_replacement(range(rank), s):
            c = [0] * rank
            for i in combo:
                c[i] += 1
            out.append(tuple(c))
    return out


def min_nontrivial_complex_dim(complex_type) -> Tuple[int, List[Tuple[int, ...]]]:
    """Smallest dimension of a nontrivial irreducible representation, with all minimizers."""
    rs = _system(complex_type)
    if rs.rank < 2:
        raise PreconditionError("minimal dimension search needs rank >= 2")
    best = None
    argmin: List[Tuple[int, ...]] = []
    for lam in search_box(rs.rank):
        d = weyl_dim(complex_type, lam)
        if best is None or d < best:
            best, argmin = d, [lam]
        elif d == best:
            argmin.append(lam)
    return best, sorted(argmin, reverse=True)


# --- Freudenthal oracle ------------------------------------------------------------

_WEYL_ORDER = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "G2": 12,
}


def weyl_group_order(label: str, rank: int) -> int:
    if label in _WEYL_ORDER:
        return _WEYL_ORDER[label]
    if label == "A":
        return math.factorial(rank + 1)
    if label in ("B", "C"):
        return 2**rank * math.factorial(rank)
    if label == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    raise ConstructionError(f"no Weyl group order for {label}{rank}")


FREUDENTHAL_MAX_RANK = 6
FREUDENTHAL_MAX_DIM = 10**7


@lru_cache(maxsize=None)
def _freudenthal_data(rs: RootSystem):
    cartan = cartan_matrix(rs.gram)
    n = rs.rank
    # positive roots in fundamental-weight coordinates, with their heights
    pos = []
    for beta in rs.positive_roots:
        a = rs.coefficients(beta)
        pos.append((tuple(sum(a[j] * cartan[j][i] for j in range(n)) for i in range(n)), sum(a)))
    # <w_i, w_j> = (A^-1)_ij |alpha_j|^2 / 2, scaled to integers
    inv = exact.inverse([list(r) for r in cartan])
    form = [[inv[i][j] * Fraction(rs.gram[j][j], 2) for j in range(n)] for i in range(n)]
    scale = math.lcm(*(x.denominator for row in form for x in row))
    iform = tuple(tuple(int(x * scale) for x in row) for row in form)
    return cartan, tuple(pos), iform


def _ip(form, u, v) -> int:
    return sum(u[i] * form[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if u[i] and v[j])


def _dominant_conjugate(cartan, mu):
    mu = list(mu)
    while True:
        for i, c in enumerate(mu):
            if c < 0:
                row = cartan[i]
                mu = [m - c * r for m, r in zip(mu, row)]
                break
        else:
            return tuple(mu)


def _orbit_size(rs: RootSystem, mu) -> int:
    zero = indices_to_mask([i + 1 for i, c in enumerate(mu) if c == 0], rs.rank)
    stab = 1
    for comp in components_of_mask(rs.adjacency, zero):
        idx = [i for i in range(rs.rank) if comp >> i & 1]
        sub = [[rs.gram[i][j] for j in idx] for i in idx]
        stab *= weyl_group_order(*identify_type(sub))
    return weyl_group_order(*identify_type(rs.gram)) // stab


def freudenthal_dim(complex_type, lam: WeightLike) -> int:
    """Dimension of V(lam) as a sum of weight multiplicities (Freudenthal recursion).

    Only dominant weights are tracked; each contributes its multiplicity
    times the size of its Weyl orbit.
    """
    rs = _system(complex_type)
    k = _weight(rs, lam)
    if rs.rank > FREUDENTHAL_MAX_RANK:
        raise ScaleLimitError(f"Freudenthal oracle limited to rank <= {FREUDENTHAL_MAX_RANK}")
    cartan, pos, form = _freudenthal_data(rs)
    n = rs.rank
    rho = (1,) * n
    top = tuple(a + b for a, b in zip(k, rho))
    top_norm = _ip(form, top, top)

    depth: Dict[Tuple[int, ...], int] = {k: 0}
    frontier = [k]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha, ht in pos:
                nu = tuple(a - b for a, b in zip(mu, alpha))
                if min(nu) >= 0 and nu not in depth:
                    depth[nu] = depth[mu] + ht
                    nxt.append(nu)
        frontier = nxt

    mult: Dict[Tuple[int, ...], int] = {}
    total = 0
    for mu in sorted(depth, key=lambda w: (depth[w], w)):
        if mu == k:
            m = 1
        else:
            acc = 0
            for alpha, _ in pos:
                j = 1
                while True:
                    nu = tuple(a + j * b for a, b in zip(mu, alpha))
                    dom = _dominant_conjugate(cartan, nu)
                    if dom not in depth:
                        break
                    acc += mult.get(dom, 0) * _ip(form, nu, alpha)
                    j += 1
            shifted = tuple(a + b for a, b in zip(mu, rho))
            denom = top_norm - _ip(form, shifted, shifted)
            m, rem = divmod(2 * acc, denom)
            if rem:
                raise ArithmeticError(f"non-integral multiplicity at {mu}")
        mult[mu] = m
        total += m * _orbit_size(rs, mu)
        if total > FREUDENTHAL_MAX_DIM:
            raise ScaleLimitError(f"dimension exceeds the oracle limit {FREUDENTHAL_MAX_DIM}")
    return total


# --- real forms --------------------------------------------------------------------


@dataclass(frozen=True)
class RealRepClassifier:
    """Diagram involution and Cartan index of a real form.

    ``s0`` lists the image of each node (1-based). ``eps_indices`` is the set
    S with eps(lambda) = (-1)^(sum of k_i over S); ``None`` means the index is
    not available and only the s0-fixed lattice is known.
    """

    real_form: str
    complex_type: ComplexType
    s0: Tuple[int, ...]
    eps_indices: Optional[FrozenSet[int]]

    def apply_s0(self, lam: Sequence[int]) -> Tuple[int, ...]:
        out = [0] * len(lam)
        for i, k in enumerate(lam):
            out[self.s0[i] - 1] = k
        return tuple(out)

    def is_s0_fixed(self, lam: Sequence[int]) -> bool:
        return self.apply_s0(lam) == tuple(lam)

    def eps(self, lam: Sequence[int]) -> int:
        if not self.is_s0_fixed(lam):
            raise DomainError(f"{tuple(lam)} is not fixed by s0")
        if self.eps_indices is None:
            raise UnsupportedInputError(f"no Cartan index available for {self.real_form}")
        return -1 if sum(lam[i - 1] for i in self.eps_indices) % 2 else 1


def _real_form_spec(real_form) -> GroupSpec:
    if isinstance(real_form, GroupDescriptor):
        return real_form.spec
    if isinstance(real_form, GroupSpec):
        return real_form
    return parse_group_spec(real_form)


def classifier_for(real_form) -> RealRepClassifier:
    """s0 and Cartan index for su(m,n), sp(m,n) and so*(2n) in the ranges of the standard lemma."""
    spec = _real_form_spec(real_form)
    f, p = spec.family, spec.params
    if f == "SU" and p != (2, 2):
        ell = p[0] + p[1] - 1
        return RealRepClassifier(str(spec), ("A", ell), tuple(ell + 1 - i for i in range(1, ell + 1)), None)
    if f == "Sp_pq":
        ell = p[0] + p[1]
        return RealRepClassifier(str(spec), ("C", ell), tuple(range(1, ell + 1)), frozenset(range(1, ell + 1, 2)))
    if f == "SOstar" and p[0] >= 5:
        n = p[0]
        s0 = list(range(1, n + 1))
        if n % 2:
            s0[n - 2], s0[n - 1] = n, n - 1
        return RealRepClassifier(str(spec), ("D", n), tuple(s0), frozenset(2 * i - 1 for i in range(1, n // 2 + 1)))
    raise UnsupportedInputError(f"no real-representation classifier for {spec}")


@dataclass(frozen=True)
class RealRepReport:
    value: int
    source: str
    minimizers: Tuple[Tuple[int, ...], ...] = ()
    unique_up_to_s0: Optional[bool] = None


def real_rep_report(real_form, catalogue: Optional[Catalogue] = None) -> RealRepReport:
    """Minimal nontrivial real representation with the weights that realise it.

    Every candidate weight contributes d (if it may lie in ker eps) or 2d (if
    it certainly does not). When eps is unknown, s0-fixed weights contribute
    d, which is a lower bound for their true contribution.
    """
    spec = _real_form_spec(real_form)
    try:
        cls = classifier_for(spec)
    except UnsupportedInputError:
        cat = catalogue or default_catalogue()
        try:
            return RealRepReport(cat.tabulated(spec, "n_G"), "catalogue")
        except NotTabulatedError:
            raise UnsupportedInputError(f"{spec} has no classifier and no catalogue value for n") from None
    best = None
    cands: List[Tuple[int, ...]] = []
    exact_value = True
    for lam in search_box(cls.complex_type[1]):
        d = weyl_dim(cls.complex_type, lam)
        if cls.is_s0_fixed(lam):
            if cls.eps_indices is None:
                value, is_exact = d, False
            else:
                value, is_exact = (d, True) if cls.eps(lam) == 1 else (2 * d, True)
        else:
            value, is_exact = 2 * d, True
        if best is None or value < best:
            best, cands, exact_value = value, [lam], is_exact
        elif value == best:
            cands.append(lam)
            exact_value = exact_value and is_exact
    orbit = {cands[0], cls.apply_s0(cands[0])}
    unique = all(c in orbit for c in cands)
    source = "classifier" if exact_value else "classifier (lower bound)"
    return RealRepReport(best, source, tuple(sorted(cands, reverse=True)), unique)


def min_real_rep(real_form, catalogue: Optional[Catalogue] = None) -> int:
    """Minimal dimension of a nontrivial real representation.

    >>> min_real_rep("SU(4,3)")
    14
    """
    return real_rep_report(real_form, catalogue).value


# --- subalgebras g_Delta ------------------------------------------------------------

Signature = Tuple[str, int, Tuple[int, ...]]


def _normalize_label(label: str, rank: int) -> Tuple[str, int]:
    if label == "B" and rank == 2:
        return "C", 2
    if label == "D" and rank == 3:
        return "A", 3
    return label, rank


def descriptor_signature(desc: GroupDescriptor) -> Signature:
    label, rank = _normalize_label(*desc.restricted_type)
    return label, rank, tuple(desc.mult[c] for c in LENGTH_CLASS_NAMES[desc.restricted_type[0]])


@lru_cache(maxsize=None)
def delta_shape(rs: RootSystem, mask: int) -> Tuple[str, int, Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
    """Type, rank and root norms (ascending) of the subsystem spanned by the simple roots in ``mask``.

    Also returns one representative root per norm. An irreducible reduced
    system has the root lengths of its simple roots; a non-reduced one adds
    the doubles 2*alpha_i that are roots.
    """
    idx = [i for i in range(rs.rank) if mask >> i & 1]
    if len(components_of_mask(rs.adjacency, mask)) != 1:
        raise PreconditionError(f"{tuple(i + 1 for i in idx)} is not connected in the Dynkin diagram")
    gram = [[rs.gram[i][j] for j in idx] for i in idx]
    label, rank = identify_type(gram)
    reps: Dict[int, Tuple[int, ...]] = {}
    nonreduced = False
    for i in idx:
        a = rs.simple_roots[i]
        reps.setdefault(rs.norm2(a), a)
        double = tuple(2 * x for x in a)
        if double in rs:
            nonreduced = True
            reps.setdefault(rs.norm2(double), double)
    if nonreduced:
        label = "BC"
    norms = tuple(sorted(reps))
    return label, rank, norms, tuple(reps[k] for k in norms)


def subalgebra_signature(desc: GroupDescriptor, delta: Iterable[int]) -> Signature:
    """(type, rank, multiplicities from shortest to longest) of the subsystem spanned by ``delta``."""
    rs = desc.root_system
    idx = sorted(set(delta))
    if len(idx) < 2:
        raise PreconditionError("subalgebra identification needs |Delta| >= 2")
    label, rank, _, reps = delta_shape(rs, indices_to_mask(idx, rs.rank))
    return label, rank, tuple(desc.mult_of(r) for r in reps)


def _record_signature(rec, params: Tuple[int, ...]) -> Optional[Signature]:
    # the restricted data of one record without building a full descriptor
    env = dict(zip(rec.params, params))
    if not rec.valid(env):
        return None
    for piece in rec.restricted:
        if piece.when is None or piece.when(env):
            break
    else:
        return None
    mult = {name: e(env) for name, e in piece.mult}
    if min(mult.values()) <= 0:
        return None
    label, rank = _normalize_label(piece.type_label, piece.rank(env))
    return label, rank, tuple(mult[c] for c in LENGTH_CLASS_NAMES[piece.type_label])


class _SignatureIndex:
    """Signature -> catalogued specs, over a parameter box that grows on demand.

    A box with rank bound R and multiplicity bound D contains every spec of
    restricted rank <= R whose multiplicities are <= D: each family's last
    parameter is at most about twice its rank, and the gap m - n of the
    two-parameter families is at most their largest multiplicity.
    """

    def __init__(self, catalogue: Catalogue):
        self.catalogue = catalogue
        self.rank_bound = 0
        self.mult_bound = 0
        self.table: Dict[Signature, List[GroupSpec]] = {}

    def _rebuild(self, rank_bound: int, mult_bound: int) -> None:
        table: Dict[Signature, List[GroupSpec]] = {}
        nmax = 2 * rank_bound + 4
        for rec in self.catalogue:
            if len(rec.params) == 0:
                grid = [()]
            elif len(rec.params) == 1:
                grid = [(n,) for n in range(1, nmax + 1)]
            else:
                grid = [(n + d, n) for n in range(1, nmax + 1) for d in range(mult_bound + 1)]
            for params in grid:
                sig = _record_signature(rec, params)
                if sig is not None:
                    table.setdefault(sig, []).append(make_spec(rec.family, *params))
        self.table = table
        self.rank_bound, self.mult_bound = rank_bound, mult_bound

    def lookup(self, sig: Signature) -> Tuple[GroupSpec, ...]:
        rank, top = sig[1], max(sig[2])
        if rank > self.rank_bound or top > self.mult_bound:
            self._rebuild(max(rank, 2 * self.rank_bound, 8), max(top, 2 * self.mult_bound, 8))
        return tuple(self.table.get(sig, ()))


@lru_cache(maxsize=8)
def _index_for(catalogue: Catalogue) -> _SignatureIndex:
    return _SignatureIndex(catalogue)


def identify_subalgebra(desc: GroupDescriptor, delta: Iterable[int], catalogue: Optional[Catalogue] = None) -> Tuple[GroupSpec, ...]:
    """Catalogued forms whose restricted root data matches g_Delta."""
    return identify_subalgebra_by_signature(subalgebra_signature(desc, delta), catalogue or default_catalogue())


@lru_cache(maxsize=None)
def _n_for_signature(sig: Signature, catalogue: Catalogue) -> int:
    values = []
    for spec in identify_subalgebra_by_signature(sig, catalogue):
        try:
            values.append(catalogue.tabulated(spec, "n_G"))
        except NotTabulatedError:
            values.append(min_real_rep(spec, catalogue))
    return min(values)


def identify_subalgebra_by_signature(sig: Signature, catalogue: Catalogue) -> Tuple[GroupSpec, ...]:
    found = _index_for(catalogue).lookup(sig)
    if not found:
        raise IdentificationError(f"no catalogued real form has restricted data {sig}")
    return found


def n_of_subalgebra(desc: GroupDescriptor, delta: Iterable[int], catalogue: Optional[Catalogue] = None) -> int:
    """n(g_Delta) for a connected Delta with at least two simple roots.

    Isomorphic catalogue entries can carry different stored values (the
    published value for SO+(3,2) is 5 while sp(4,R) = so(3,2) has a
    4-dimensional representation); the smallest is used.
    """
    return _n_for_signature(subalgebra_signature(desc, delta), catalogue or default_catalogue())
