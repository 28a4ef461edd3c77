"""Loading and querying the family catalogue.

Each line of the catalogue file is a JSON object describing one family::

    {"family": "SU", "params": ["m", "n"], "constraints": ["m >= n", "n >= 2"],
     "complex": false, "table1": ["m >= n"], "eps_G": "2",
     "restricted": [{"when": "m == n", "type": "C", "rank": "n",
                     "mult": {"short": "2", "long": "1"}}, ...],
     "n_G": [{"when": "...", "value": "..."}, {"value": "2*m + 2*n"}],
     "v_cpt": [...], "table_v": [...], "table_r": [...],
     "provenance": {"n_G": "published table", ...}}

``constraints`` define where the family is valid; ``table1`` (absent for
auxiliary records) narrows that to the range covered by the published table,
which is also where ``v_cpt``, ``table_v`` and ``table_r`` apply. Piecewise
fields are tried in order, the first entry whose ``when`` holds wins.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from ..errors import CatalogueSchemaError, NotTabulatedError
from ..rootkit import RootSystem, build_root_system
from .expr import Expr, ExpressionError, compile_expr
from .groupspec import FAMILY_PARAMS, GroupSpec

LENGTH_CLASS_NAMES = {
    "A": ("root",),
    "D": ("root",),
    "E6": ("root",),
    "E7": ("root",),
    "E8": ("root",),
    "B": ("short", "long"),
    "C": ("short", "long"),
    "F4": ("short", "long"),
    "G2": ("short", "long"),
    "BC": ("short", "middle", "long"),
}

# Row order of the published table, then the families that are not rows of it.
FAMILY_ORDER = (
    "SL_C", "Sp_C", "SO_C", "SL_H", "SOplus", "SU", "Sp_pq", "SOstar",
    "E6", "E7", "E8", "F4", "G2", "EII", "SL_R", "Sp_R",
)

INVARIANT_FIELDS = ("n_G", "v_cpt", "table_v", "table_r")
_KNOWN_KEYS = {"family", "params", "constraints", "complex", "table1", "restricted", "eps_G", "provenance", *INVARIANT_FIELDS}


@dataclass(frozen=True)
class Piece:
    when: Optional[Expr]
    value: Expr


@dataclass(frozen=True)
class RestrictedPiece:
    when: Optional[Expr]
    type_label: str
    rank: Expr
    mult: Tuple[Tuple[str, Expr], ...]


@dataclass(frozen=True)
class FamilyRecord:
    family: str
    params: Tuple[str, ...]
    constraints: Tuple[Expr, ...]
    complex: bool
    table1: Optional[Tuple[Expr, ...]]
    restricted: Tuple[RestrictedPiece, ...]
    eps_G: Optional[Expr]
    invariants: Mapping[str, Tuple[Piece, ...]]
    provenance: Mapping[str, str]

    def valid(self, env: Mapping[str, int]) -> bool:
        return all(c(env) for c in self.constraints)

    def in_table1(self, env: Mapping[str, int]) -> bool:
        return self.table1 is not None and self.valid(env) and all(c(env) for c in self.table1)


@dataclass(frozen=True)
class GroupDescriptor:
    """A group family at fixed parameters with its restricted root data."""

    spec: GroupSpec
    restricted_type: Tuple[str, int]
    mult: Mapping[str, int]
    complex: bool
    eps_G: Optional[int] = None
    n_G: Optional[int] = None
    v_cpt: Optional[int] = None
    in_table1: bool = False
    provenance: Mapping[str, str] = field(default_factory=dict, compare=False)

    @property
    def family(self) -> str:
        return self.spec.family

    @property
    def params(self) -> Tuple[int, ...]:
        return self.spec.params

    @property
    def rank(self) -> int:
        return self.restricted_type[1]

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(*self.restricted_type)

    def mult_of(self, beta) -> int:
        """dim g_beta for a restricted root beta."""
        return self.mult[self.root_system.length_class(beta)]

    def __str__(self) -> str:
        return str(self.spec)

    def __hash__(self) -> int:
        return hash((self.spec, self.restricted_type, tuple(sorted(self.mult.items()))))


class Catalogue:
    """Immutable collection of family records."""

    def __init__(self, records: Mapping[str, FamilyRecord], source: str = "<memory>"):
        self._records = dict(records)
        self.source = source

    def __contains__(self, family: str) -> bool:
        return family in self._records

    def __iter__(self) -> Iterator[FamilyRecord]:
        for fam in FAMILY_ORDER:
            if fam in self._records:
                yield self._records[fam]

    def __len__(self) -> int:
        return len(self._records)

    def record(self, family: str) -> FamilyRecord:
        try:
            return self._records[family]
        except KeyError:
            raise NotTabulatedError(f"family {family} is not in the catalogue {self.source}") from None

    def describe(self, spec: GroupSpec) -> GroupDescriptor:
        return _describe_cached(self, spec)

    def tabulated(self, spec: GroupSpec, which: str) -> int:
        """Evaluate a stored invariant (``n_G``, ``v_cpt``, ``table_v`` or ``table_r``)."""
        if which not in INVARIANT_FIELDS:
            raise ValueError(f"unknown invariant {which!r}; expected one of {INVARIANT_FIELDS}")
        rec = self.record(spec.family)
        env = spec.env
        if not rec.valid(env):
            raise NotTabulatedError(f"{spec} is outside the validity range of {spec.family}")
        pieces = rec.invariants.get(which)
        if not pieces:
            raise NotTabulatedError(f"{which} is not stored for {spec.family}")
        if which != "n_G" and not rec.in_table1(env):
            raise NotTabulatedError(f"{which} for {spec} lies outside the tabulated range")
        value = _pick(pieces, env)
        if value is None:
            raise NotTabulatedError(f"no branch of {which} applies to {spec}")
        return value


def _pick(pieces, env) -> Optional[int]:
    for p in pieces:
        if p.when is None or p.when(env):
            return p.value(env)
    return None


@lru_cache(maxsize=4096)
def _describe_cached(cat: Catalogue, spec: GroupSpec) -> GroupDescriptor:
    rec = cat.record(spec.family)
    env = spec.env
    if not rec.valid(env):
        raise NotTabulatedError(f"{spec} is outside the validity range of {spec.family}")
    for piece in rec.restricted:
        if piece.when is None or piece.when(env):
            break
    else:
        raise NotTabulatedError(f"no restricted-root branch applies to {spec}")
    mult = {name: e(env) for name, e in piece.mult}
    for name, value in mult.items():
        if value <= 0:
            raise NotTabulatedError(f"multiplicity of {name} roots is {value} for {spec}")

    def optional(which):
        try:
            return cat.tabulated(spec, which)
        except NotTabulatedError:
            return None

    return GroupDescriptor(
        spec=spec,
        restricted_type=(piece.type_label, piece.rank(env)),
        mult=mult,
        complex=rec.complex,
        eps_G=rec.eps_G(env) if rec.eps_G is not None else None,
        n_G=optional("n_G"),
        v_cpt=optional("v_cpt"),
        in_table1=rec.in_table1(env),
        provenance=dict(rec.provenance),
    )


# --- parsing -------------------------------------------------------------------


def _expr(src, names, path):
    try:
        return compile_expr(src, names)
    except ExpressionError as exc:
        raise CatalogueSchemaError(path, str(exc)) from None


def _require(obj, key, path):
    if key not in obj:
        raise CatalogueSchemaError(f"{path}.{key}", "missing field")
    return obj[key]


def _pieces(raw, names, path) -> Tuple[Piece, ...]:
    if not isinstance(raw, list) or not raw:
        raise CatalogueSchemaError(path, "expected a non-empty list of {when, value} entries")
    out = []
    for i, item in enumerate(raw):
        p = f"{path}[{i}]"
        if not isinstance(item, dict):
            raise CatalogueSchemaError(p, "expected an object")
        when = _expr(item["when"], names, f"{p}.when") if "when" in item else None
        out.append(Piece(when, _expr(_require(item, "value", p), names, f"{p}.value")))
    return tuple(out)


def _record(obj, path) -> FamilyRecord:
    if not isinstance(obj, dict):
        raise CatalogueSchemaError(path, "expected a JSON object")
    family = _require(obj, "family", path)
    if family not in FAMILY_PARAMS:
        raise CatalogueSchemaError(f"{path}.family", f"unknown family key {family!r}")
    extra = set(obj) - _KNOWN_KEYS
    if extra:
        raise CatalogueSchemaError(f"{path}.{sorted(extra)[0]}", "unknown field")
    params = tuple(_require(obj, "params", path))
    if params != FAMILY_PARAMS[family]:
        raise CatalogueSchemaError(f"{path}.params", f"expected {list(FAMILY_PARAMS[family])}")
    names = set(params)
    constraints = tuple(_expr(c, names, f"{path}.constraints[{i}]") for i, c in enumerate(_require(obj, "constraints", path)))
    table1 = None
    if "table1" in obj:
        table1 = tuple(_expr(c, names, f"{path}.table1[{i}]") for i, c in enumerate(obj["table1"]))
    restricted_raw = _require(obj, "restricted", path)
    if not isinstance(restricted_raw, list) or not restricted_raw:
        raise CatalogueSchemaError(f"{path}.restricted", "expected a non-empty list")
    restricted = []
    for i, item in enumerate(restricted_raw):
        p = f"{path}.restricted[{i}]"
        tlabel = _require(item, "type", p)
        if tlabel not in LENGTH_CLASS_NAMES:
            raise CatalogueSchemaError(f"{p}.type", f"unknown root-system type {tlabel!r}")
        mult_raw = _require(item, "mult", p)
        if not isinstance(mult_raw, dict):
            raise CatalogueSchemaError(f"{p}.mult", "expected an object")
        wanted = LENGTH_CLASS_NAMES[tlabel]
        for cls in wanted:
            if cls not in mult_raw:
                raise CatalogueSchemaError(f"{p}.mult.{cls}", f"missing multiplicity for {cls} roots")
        for cls in mult_raw:
            if cls not in wanted:
                raise CatalogueSchemaError(f"{p}.mult.{cls}", f"type {tlabel} has no {cls} roots")
        mult = tuple((cls, _expr(mult_raw[cls], names, f"{p}.mult.{cls}")) for cls in wanted)
        when = _expr(item["when"], names, f"{p}.when") if "when" in item else None
        restricted.append(RestrictedPiece(when, tlabel, _expr(_require(item, "rank", p), names, f"{p}.rank"), mult))
    invariants = {}
    for key in INVARIANT_FIELDS:
        if key in obj:
            invariants[key] = _pieces(obj[key], names, f"{path}.{key}")
    eps = _expr(obj["eps_G"], names, f"{path}.eps_G") if "eps_G" in obj else None
    complex_flag = obj.get("complex", False)
    if not isinstance(complex_flag, bool):
        raise CatalogueSchemaError(f"{path}.complex", "expected true or false")
    provenance = obj.get("provenance", {})
    if not isinstance(provenance, dict) or not all(isinstance(v, str) for v in provenance.values()):
        raise CatalogueSchemaError(f"{path}.provenance", "expected an object of strings")
    return FamilyRecord(family, params, constraints, complex_flag, table1, tuple(restricted), eps, invariants, provenance)


def parse_catalogue(text: str, source: str = "<string>") -> Catalogue:
    records: Dict[str, FamilyRecord] = {}
    index = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        path = f"record[{index}]"
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CatalogueSchemaError(f"{path} (line {lineno})", f"invalid JSON: {exc.msg}") from None
        rec = _record(obj, path)
        if rec.family in records:
            raise CatalogueSchemaError(f"{path}.family", f"duplicate family {rec.family}")
        records[rec.family] = rec
        index += 1
    if not records:
        raise CatalogueSchemaError("record[0]", f"no records in {source}")
    return Catalogue(records, source)


def load_catalogue(path: Union[str, Path, None] = None) -> Catalogue:
    """Read a catalogue file; ``None`` loads the bundled default."""
    if path is None:
        return default_catalogue()
    p = Path(path)
    return parse_catalogue(p.read_text(encoding="utf-8"), str(p))


@lru_cache(maxsize=1)
def default_catalogue() -> Catalogue:
    text = resources.files("liebounds.catalogue").joinpath("data/catalogue.jsonl").read_text(encoding="utf-8")
    return parse_catalogue(text, "bundled catalogue")


def describe(spec: Union[GroupSpec, str], catalogue: Optional[Catalogue] = None) -> GroupDescriptor:
    from .groupspec import parse_group_spec

    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    return (catalogue or default_catalogue()).describe(spec)


def tabulated_invariant(spec: Union[GroupSpec, str], which: str, catalogue: Optional[Catalogue] = None) -> int:
    from .groupspec import parse_group_spec

    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    return (catalogue or default_catalogue()).tabulated(spec, which)
