"""Finite (possibly non-reduced) root systems with integer coordinates.

Classical systems live in the usual e_i coordinates (A_l in Z^(l+1)); F4 and
E6/E7/E8 use the standard half-integral models scaled by 2 so that every
coordinate is an integer. Simple roots follow Bourbaki numbering, with
alpha_i = e_i - e_(i+1) for i < n and the last simple root e_n (B, BC),
2e_n (C) or e_(n-1) + e_n (D).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import exact
from .errors import ConstructionError, DomainError, PreconditionError, UnsupportedInputError

Root = Tuple[int, ...]

TYPE_LABELS = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2", "BC")
_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "BC": 1}

_LENGTH_NAMES = {1: ("root",), 2: ("short", "long"), 3: ("short", "middle", "long")}


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _neg(v: Root) -> Root:
    return tuple(-x for x in v)


@dataclass(frozen=True)
class RootSystem:
    """An irreducible root system together with a fixed base.

    ``gram`` is the Gram matrix of the simple roots under the ambient dot
    product; it is integral and positive definite.
    """

    type_label: str
    rank: int
    roots: Tuple[Root, ...]
    simple_roots: Tuple[Root, ...]
    gram: Tuple[Tuple[int, ...], ...]
    _coeffs: Mapping[Root, Tuple[int, ...]] = field(repr=False, compare=False, hash=False)

    def __hash__(self) -> int:
        # the base determines the system; hashing every root is wasted work in caches
        return hash((self.type_label, self.rank, self.simple_roots))

    @property
    def label(self) -> str:
        if self.type_label in _FIXED_RANK:
            return self.type_label
        return f"{self.type_label}{self.rank}"

    @property
    def ambient_dim(self) -> int:
        return len(self.simple_roots[0])

    def __contains__(self, v: object) -> bool:
        return v in self._coeffs

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._coeffs

    def coefficients(self, beta: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates of ``beta`` in the basis of simple roots."""
        try:
            return self._coeffs[tuple(beta)]
        except KeyError:
            raise DomainError(f"{tuple(beta)} is not a root of {self.label}") from None

    def support(self, beta: Sequence[int]) -> int:
        """Bitmask of simple roots (bit i <-> alpha_(i+1)) with nonzero coefficient."""
        try:
            return self._supports[tuple(beta)]
        except KeyError:
            raise DomainError(f"{tuple(beta)} is not a root of {self.label}") from None

    @cached_property
    def _supports(self) -> Dict[Root, int]:
        out = {}
        for r, c in self._coeffs.items():
            mask = 0
            for i, x in enumerate(c):
                if x:
                    mask |= 1 << i
            out[r] = mask
        return out

    @cached_property
    def profile(self) -> Tuple[Tuple[int, str, Optional[str], bool, int], ...]:
        """Positive roots grouped by (support, length class, class of 2*beta, indivisible).

        Each entry carries the number of roots in its group; invariants that
        depend only on supports and multiplicities can be summed over this.
        """
        counts: Dict[Tuple[int, str, Optional[str], bool], int] = {}
        for beta in self.positive_roots:
            double = tuple(2 * x for x in beta)
            key = (
                self._supports[beta],
                self.length_class(beta),
                self.length_class(double) if double in self._coeffs else None,
                self.is_indivisible(beta),
            )
            counts[key] = counts.get(key, 0) + 1
        return tuple((*k, v) for k, v in sorted(counts.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2] or "", kv[0][3])))

    def is_positive(self, beta: Sequence[int]) -> bool:
        return sum(self.coefficients(beta)) > 0

    @cached_property
    def positive_roots(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.roots if sum(self._coeffs[r]) > 0)

    def norm2(self, v: Sequence[int]) -> int:
        return dot(v, v)

    def reflect(self, alpha: Sequence[int], beta: Sequence[int]) -> Root:
        """Image of ``beta`` under the reflection in the hyperplane orthogonal to ``alpha``."""
        num = 2 * dot(alpha, beta)
        den = dot(alpha, alpha)
        if num % den:
            raise DomainError("reflection leaves the integer lattice")
        c = num // den
        return tuple(b - c * a for a, b in zip(alpha, beta))

    @cached_property
    def is_reduced(self) -> bool:
        return not any(tuple(2 * x for x in r) in self._coeffs for r in self.roots)

    def is_indivisible(self, beta: Sequence[int]) -> bool:
        b = tuple(beta)
        if any(x % 2 for x in b):
            return True
        return tuple(x // 2 for x in b) not in self._coeffs

    @cached_property
    def length_values(self) -> Tuple[int, ...]:
        return tuple(sorted({dot(r, r) for r in self.roots}))

    @property
    def length_classes(self) -> Tuple[str, ...]:
        """Names of the root-length classes, shortest first."""
        return _LENGTH_NAMES[len(self.length_values)]

    def length_class(self, beta: Sequence[int]) -> str:
        n2 = dot(beta, beta)
        try:
            return self.length_classes[self.length_values.index(n2)]
        except ValueError:
            raise DomainError(f"{tuple(beta)} is not a root of {self.label}") from None

    @cached_property
    def adjacency(self) -> Tuple[int, ...]:
        """Per simple root, bitmask of the simple roots joined to it in the Dynkin diagram."""
        adj = []
        for i in range(self.rank):
            mask = 0
            for j in range(self.rank):
                if i != j and self.gram[i][j] < 0:
                    mask |= 1 << j
            adj.append(mask)
        return tuple(adj)

    def is_irreducible(self) -> bool:
        return len(components_of_mask(self.adjacency, (1 << self.rank) - 1)) == 1


def components_of_mask(adjacency: Sequence[int], mask: int) -> Tuple[int, ...]:
    """Connected components of the induced subgraph on ``mask``, ordered by lowest bit."""
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            nbrs = adjacency[bit.bit_length() - 1] & mask & ~comp
            comp |= nbrs
            frontier |= nbrs
        comps.append(comp)
        rest &= ~comp
    return tuple(comps)


def mask_to_indices(mask: int) -> Tuple[int, ...]:
    """1-based simple-root indices in a bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i + 1)
        mask >>= 1
        i += 1
    return tuple(out)


def indices_to_mask(indices: Iterable[int], rank: int) -> int:
    mask = 0
    for i in indices:
        if not 1 <= i <= rank:
            raise DomainError(f"simple-root index {i} outside 1..{rank}")
        mask |= 1 << (i - 1)
    return mask


# --- construction -----------------------------------------------------------


def _unit(n: int, i: int, scale: int = 1) -> List[int]:
    v = [0] * n
    v[i] = scale
    return v


def _classical(label: str, n: int) -> Tuple[List[Root], List[Root]]:
    roots: set = set()
    if label == "A":
        dim = n + 1
        for i, j in product(range(dim), repeat=2):
            if i != j:
                v = [0] * dim
                v[i], v[j] = 1, -1
                roots.add(tuple(v))
        simple = []
        for i in range(n):
            v = [0] * dim
            v[i], v[i + 1] = 1, -1
            simple.append(tuple(v))
        return sorted(roots), simple
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [0] * n
            v[i], v[j] = si, sj
            roots.add(tuple(v))
    for i in range(n):
        for s in (1, -1):
            if label in ("B", "BC"):
                roots.add(tuple(_unit(n, i, s)))
            if label in ("C", "BC"):
                roots.add(tuple(_unit(n, i, 2 * s)))
    simple = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        simple.append(tuple(v))
    last = [0] * n
    if label in ("B", "BC"):
        last[n - 1] = 1
    elif label == "C":
        last[n - 1] = 2
    else:  # D
        last[n - 2], last[n - 1] = 1, 1
    simple.append(tuple(last))
    return sorted(roots), simple


def _e8() -> Tuple[List[Root], List[Root]]:
    roots = set()
    for i, j in combinations(range(8), 2):
        for si, sj in product((2, -2), repeat=2):
            v = [0] * 8
            v[i], v[j] = si, sj
            roots.add(tuple(v))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.add(signs)
    simple = [(1, -1, -1, -1, -1, -1, -1, 1), (2, 2, 0, 0, 0, 0, 0, 0)]
    for i in range(6):
        v = [0] * 8
        v[i], v[i + 1] = -2, 2
        simple.append(tuple(v))
    return sorted(roots), simple


def _f4() -> Tuple[List[Root], List[Root]]:
    roots = set()
    for i in range(4):
        for s in (2, -2):
            roots.add(tuple(_unit(4, i, s)))
    for i, j in combinations(range(4), 2):
        for si, sj in product((2, -2), repeat=2):
            v = [0] * 4
            v[i], v[j] = si, sj
            roots.add(tuple(v))
    for signs in product((1, -1), repeat=4):
        roots.add(signs)
    simple = [(0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 0, 2), (1, -1, -1, -1)]
    return sorted(roots), simple


def _g2() -> Tuple[List[Root], List[Root]]:
    roots = set()
    for i, j in product(range(3), repeat=2):
        if i != j:
            v = [0, 0, 0]
            v[i], v[j] = 1, -1
            roots.add(tuple(v))
    for i in range(3):
        v = [-1, -1, -1]
        v[i] = 2
        roots.add(tuple(v))
        roots.add(_neg(tuple(v)))
    simple = [(1, -1, 0), (-2, 1, 1)]
    return sorted(roots), simple


def simple_coordinates_by_gram(roots: Iterable[Root], simple: Sequence[Root]) -> Dict[Root, Tuple[int, ...]]:
    """Simple coordinates via the inverse Gram matrix (slow, exact; used as a cross-check)."""
    gram = [[dot(a, b) for b in simple] for a in simple]
    ginv = exact.inverse(gram)
    out = {}
    for r in roots:
        b = [dot(r, a) for a in simple]
        c = [sum(ginv[i][j] * b[j] for j in range(len(b))) for i in range(len(b))]
        if any(x.denominator != 1 for x in c):
            raise ConstructionError(f"root {r} is not an integer combination of simple roots")
        out[r] = tuple(int(x) for x in c)
    return out


def _chain_coordinates(roots: Iterable[Root], simple: Sequence[Root]) -> Dict[Root, Tuple[int, ...]]:
    """Simple coordinates by growing positive roots from the simple ones.

    Every positive root is reached by repeatedly adding simple roots, so a
    breadth-first pass assigns each one its coefficient vector exactly.
    """
    rootset = set(roots)
    n = len(simple)
    coeffs: Dict[Root, Tuple[int, ...]] = {}
    queue = []
    for i, a in enumerate(simple):
        c = [0] * n
        c[i] = 1
        coeffs[a] = tuple(c)
        queue.append(a)
    sparse = [[(k, x) for k, x in enumerate(a) if x] for a in simple]
    for beta in queue:
        cb = coeffs[beta]
        for i, nz in enumerate(sparse):
            g = list(beta)
            for k, x in nz:
                g[k] += x
            gamma = tuple(g)
            if gamma in rootset and gamma not in coeffs:
                c = list(cb)
                c[i] += 1
                coeffs[gamma] = tuple(c)
                queue.append(gamma)
    for beta in list(coeffs):
        neg = _neg(beta)
        if neg not in rootset:
            raise ConstructionError(f"root set is not closed under negation at {beta}")
        coeffs[neg] = tuple(-x for x in coeffs[beta])
    if len(coeffs) != len(rootset):
        raise ConstructionError("some roots are not integer combinations of the simple roots of one sign")
    return coeffs


def _normalize(type_label: str, rank: Optional[int]) -> Tuple[str, int]:
    label = str(type_label).strip().upper()
    if label in ("E", "F", "G") and rank is not None:
        label = f"{label}{rank}"
    if label not in TYPE_LABELS:
        raise ConstructionError(f"unknown root-system type {type_label!r}; expected one of {TYPE_LABELS}")
    if label in _FIXED_RANK:
        fixed = _FIXED_RANK[label]
        if rank is not None and rank != fixed:
            raise ConstructionError(f"type {label} has rank {fixed}, not {rank}")
        return label, fixed
    if rank is None:
        raise ConstructionError(f"type {label} needs an explicit rank")
    if not isinstance(rank, int) or rank < _MIN_RANK[label]:
        raise ConstructionError(f"type {label} needs rank >= {_MIN_RANK[label]}, got {rank}")
    return label, rank


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: Optional[int] = None) -> RootSystem:
    """Construct the root system of the given type and rank.

    >>> len(build_root_system("BC", 2).roots)
    12
    """
    label, n = _normalize(type_label, rank)
    if label in ("A", "B", "C", "D", "BC"):
        roots, simple = _classical(label, n)
    elif label == "G2":
        roots, simple = _g2()
    elif label == "F4":
        roots, simple = _f4()
    else:
        roots, simple = _e8()
        if label != "E8":
            coeffs = _chain_coordinates(roots, simple)
            roots = [r for r in roots if not any(coeffs[r][n:])]
            simple = simple[:n]
    coeffs = _chain_coordinates(roots, simple)
    gram = tuple(tuple(dot(a, b) for b in simple) for a in simple)
    return RootSystem(
        type_label=label,
        rank=n,
        roots=tuple(sorted(roots)),
        simple_roots=tuple(tuple(s) for s in simple),
        gram=gram,
        _coeffs=coeffs,
    )


# --- heights and the u_k filtration ------------------------------------------


def height(rs: RootSystem, beta: Sequence[int]) -> int:
    """Sum of the simple-root coefficients of ``beta``."""
    return sum(rs.coefficients(beta))


@lru_cache(maxsize=None)
def positive_roots_by_height(rs: RootSystem) -> Tuple[Root, ...]:
    """Positive roots by non-increasing height; ties go to the lexicographically larger vector."""
    return tuple(sorted(rs.positive_roots, key=lambda r: (-height(rs, r), _neg(r))))


def filtration_is_ideal(rs: RootSystem, k: int) -> bool:
    """Whether the span of the k highest positive root spaces is an ideal of n."""
    ordered = positive_roots_by_height(rs)
    if not 0 <= k <= len(ordered):
        raise DomainError(f"k={k} outside 0..{len(ordered)}")
    head = set(ordered[:k])
    for bi in ordered[:k]:
        for bj in ordered:
            s = tuple(a + b for a, b in zip(bi, bj))
            if s in rs and s not in head:
                return False
    return True


# --- coarse classes ----------------------------------------------------------


@dataclass(frozen=True)
class CoarseClass:
    """The roots positively proportional to an indivisible root."""

    representative: Root
    members: Tuple[Root, ...]

    def __contains__(self, beta: object) -> bool:
        return beta in self.members


def coarse_class_of(rs: RootSystem, beta: Sequence[int]) -> CoarseClass:
    b = tuple(beta)
    rs.coefficients(b)
    rep = b if rs.is_indivisible(b) else tuple(x // 2 for x in b)
    double = tuple(2 * x for x in rep)
    members = (rep, double) if double in rs else (rep,)
    return CoarseClass(rep, members)


@lru_cache(maxsize=None)
def coarse_classes(rs: RootSystem) -> Tuple[CoarseClass, ...]:
    reps = [r for r in rs.roots if rs.is_indivisible(r)]
    reps.sort(key=lambda r: (-height(rs, r), _neg(r)))
    return tuple(coarse_class_of(rs, r) for r in reps)


# --- subspaces and the root-span lemma ---------------------------------------


@dataclass(frozen=True)
class RootSubspace:
    """A rational subspace of the span of the roots, given by a basis."""

    basis: Tuple[Root, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(tuple(v) for v in self.basis))
        if self.basis and exact.rank(self.basis) != len(self.basis):
            raise ConstructionError("RootSubspace basis is linearly dependent")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        return exact.in_span(self.basis, v)

    def is_orthogonal_to(self, v: Sequence[int]) -> bool:
        return all(dot(w, v) == 0 for w in self.basis)

    @classmethod
    def spanned_by(cls, vectors: Iterable[Sequence[int]]) -> "RootSubspace":
        """Subspace spanned by ``vectors`` (a basis is extracted)."""
        chosen: List[Root] = []
        for v in vectors:
            cand = chosen + [tuple(v)]
            if exact.rank(cand) == len(cand):
                chosen.append(tuple(v))
        return cls(tuple(chosen))


def span_complement_rank(rs: RootSystem, W: RootSubspace) -> int:
    """Rank of the span of the roots lying in neither W nor its orthogonal complement."""
    if not rs.is_irreducible():
        raise UnsupportedInputError("span_complement_rank needs an irreducible root system")
    if W.dimension == 0:
        raise PreconditionError("W must be a nontrivial subspace (got {0})")
    if W.dimension >= rs.rank:
        raise PreconditionError("W must be a proper subspace of the root span")
    for w in W.basis:
        if len(w) != rs.ambient_dim or not exact.in_span(rs.simple_roots, w):
            raise DomainError(f"basis vector {w} does not lie in the span of the roots")
    outside = [r for r in rs.roots if not W.contains(r) and not W.is_orthogonal_to(r)]
    return exact.rank(outside) if outside else 0


# --- Dynkin diagram identification ---------------------------------------------


def cartan_matrix(gram: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """a_ij = 2<a_i, a_j>/<a_j, a_j>, the Dynkin label j of simple root i."""
    n = len(gram)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            num = 2 * gram[i][j]
            if num % gram[j][j]:
                raise ConstructionError("Gram matrix does not define a crystallographic system")
            row.append(num // gram[j][j])
        out.append(tuple(row))
    return tuple(out)


def identify_type(gram: Sequence[Sequence[int]]) -> Tuple[str, int]:
    """Cartan type (label, rank) of a connected reduced simple system.

    Rank-2 double bonds are reported as C2 (B2 and C2 coincide).
    """
    n = len(gram)
    if n == 0:
        raise ConstructionError("empty diagram")
    bonds: Dict[Tuple[int, int], int] = {}
    degree = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i][j]:
                mult = Fraction(4 * gram[i][j] ** 2, gram[i][i] * gram[j][j])
                if mult.denominator != 1 or mult not in (1, 2, 3):
                    raise ConstructionError("not a Dynkin diagram")
                bonds[(i, j)] = int(mult)
                degree[i] += 1
                degree[j] += 1
    if len(bonds) != n - 1:
        raise ConstructionError("diagram is disconnected or has a cycle")
    if n == 1:
        return "A", 1
    mults = sorted(bonds.values())
    if mults[-1] == 3:
        return "G2", 2
    doubles = [e for e, m in bonds.items() if m == 2]
    if len(doubles) > 1:
        raise ConstructionError("not a Dynkin diagram")
    branch = [i for i in range(n) if degree[i] >= 3]
    if not doubles:
        if not branch:
            return "A", n
        if len(branch) > 1 or degree[branch[0]] != 3:
            raise ConstructionError("not a Dynkin diagram")
        arms = sorted(_arm_length(bonds, branch[0], nb) for nb in _neighbours(bonds, branch[0]))
        if arms[0] == 1 and arms[1] == 1:
            return "D", n
        if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            return f"E{n}", n
        raise ConstructionError("not a Dynkin diagram")
    if branch:
        raise ConstructionError("not a Dynkin diagram")
    if n == 2:
        return "C", 2
    i, j = doubles[0]
    leaves = [v for v in range(n) if degree[v] == 1]
    if i in leaves or j in leaves:
        leaf = i if i in leaves else j
        other = j if leaf == i else i
        return ("B" if gram[leaf][leaf] < gram[other][other] else "C"), n
    if n == 4:
        return "F4", 4
    raise ConstructionError("not a Dynkin diagram")


def _neighbours(bonds, v):
    return [b if a == v else a for (a, b) in bonds if v in (a, b)]


def _arm_length(bonds, centre, start):
    length, prev, cur = 1, centre, start
    while True:
        nxt = [w for w in _neighbours(bonds, cur) if w != prev]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1
