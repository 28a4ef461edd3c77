"""Group-spec strings such as ``SU(4,2)``, ``SL(5,H)`` or ``SO*(12)``.

Grammar (case-insensitive, whitespace allowed between tokens)::

    spec   ::= name [ "(" arg { "," arg } ")" ]
    name   ::= "SL" | "SP" | "SO" | "SO+" | "SO*" | "SU"
             | "E6" | "E7" | "E8" | "F4" | "G2" | "EII"
    arg    ::= integer | "C" | "H" | "R"

Canonical forms: SL(n,C), SL(n,H), SL(n,R), Sp(2n,C), Sp(2n,R), SO(n,C),
SO+(m,n), SU(m,n), Sp(m,n), SO*(2n), E6, E7, E8, F4, G2, EII.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple, Union

from ..errors import ArityError, ParameterRangeError, ParityError, SpecSyntaxError, UnknownFamilyError

# family key -> (parameter names, validity check, message)
FAMILY_PARAMS = {
    "SL_C": ("n",),
    "Sp_C": ("n",),
    "SO_C": ("n",),
    "SL_H": ("n",),
    "SL_R": ("n",),
    "Sp_R": ("n",),
    "SOplus": ("m", "n"),
    "SU": ("m", "n"),
    "Sp_pq": ("m", "n"),
    "SOstar": ("n",),
    "E6": (),
    "E7": (),
    "E8": (),
    "F4": (),
    "G2": (),
    "EII": (),
}

_RANGES = {
    "SL_C": (lambda n: n >= 2, "SL(n,C) requires n >= 2"),
    "Sp_C": (lambda n: n >= 2, "Sp(2n,C) requires n >= 2"),
    "SO_C": (lambda n: n >= 5, "SO(n,C) requires n >= 5"),
    "SL_H": (lambda n: n >= 2, "SL(n,H) requires n >= 2"),
    "SL_R": (lambda n: n >= 2, "SL(n,R) requires n >= 2"),
    "Sp_R": (lambda n: n >= 2, "Sp(2n,R) requires n >= 2"),
    "SOplus": (lambda m, n: m >= n >= 2 and m + n >= 5, "SO+(m,n) requires m >= n >= 2 and (m,n) != (2,2)"),
    "SU": (lambda m, n: m >= n >= 2, "SU(m,n) requires m >= n >= 2"),
    "Sp_pq": (lambda m, n: m >= n >= 2, "Sp(m,n) requires m >= n >= 2"),
    "SOstar": (lambda n: n >= 4, "SO*(2n) requires n >= 4"),
}

_EXCEPTIONAL = {"E6", "E7", "E8", "F4", "G2", "EII"}
_FIELDS = {"C", "H", "R"}


@dataclass(frozen=True, order=True)
class GroupSpec:
    family: str
    params: Tuple[int, ...] = ()

    def __str__(self) -> str:
        p = self.params
        f = self.family
        if f in _EXCEPTIONAL:
            return f
        if f == "SL_C":
            return f"SL({p[0]},C)"
        if f == "SL_H":
            return f"SL({p[0]},H)"
        if f == "SL_R":
            return f"SL({p[0]},R)"
        if f == "Sp_C":
            return f"Sp({2 * p[0]},C)"
        if f == "Sp_R":
            return f"Sp({2 * p[0]},R)"
        if f == "SO_C":
            return f"SO({p[0]},C)"
        if f == "SOplus":
            return f"SO+({p[0]},{p[1]})"
        if f == "SU":
            return f"SU({p[0]},{p[1]})"
        if f == "Sp_pq":
            return f"Sp({p[0]},{p[1]})"
        if f == "SOstar":
            return f"SO*({2 * p[0]})"
        raise ValueError(f"unknown family {f!r}")

    @property
    def env(self) -> dict:
        return dict(zip(FAMILY_PARAMS[self.family], self.params))


def make_spec(family: str, *params: int) -> GroupSpec:
    """Build a spec from a family key and its stored parameters, checking ranges."""
    if family not in FAMILY_PARAMS:
        raise UnknownFamilyError(f"unknown family {family!r}", family, 0, sorted(FAMILY_PARAMS))
    names = FAMILY_PARAMS[family]
    if len(params) != len(names):
        raise ArityError(f"{family} takes {len(names)} parameter(s)", family, 0)
    spec = GroupSpec(family, tuple(int(x) for x in params))
    if family in _RANGES:
        ok, msg = _RANGES[family]
        if not ok(*spec.params):
            raise ParameterRangeError(msg, str(spec), 0)
    return spec


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z][A-Za-z0-9]*[+*]?)|(?P<punct>[(),]))")


def _tokens(text: str) -> List[Tuple[str, Union[str, int], int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise SpecSyntaxError(f"unexpected character {text[start]!r}", text, start, ["name", "integer", "(", ")", ","])
        start = m.start(m.lastgroup)
        if m.lastgroup == "int":
            out.append(("int", int(m.group("int")), start))
        else:
            out.append((m.lastgroup, m.group(m.lastgroup).upper(), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a group-spec string into its canonical form.

    >>> str(parse_group_spec("sl(5, h)"))
    'SL(5,H)'
    """
    toks = _tokens(text)
    kind, name, off = toks[0]
    if kind != "word":
        raise SpecSyntaxError("expected a family name", text, off, ["SL", "Sp", "SO", "SO+", "SO*", "SU", "E6", "E7", "E8", "F4", "G2", "EII"])
    args: List[Tuple[Union[int, str], int]] = []
    i = 1
    if toks[i][0] == "punct" and toks[i][1] == "(":
        i += 1
        while True:
            k, v, o = toks[i]
            if k == "int" or (k == "word" and v in _FIELDS):
                args.append((v, o))
            else:
                raise SpecSyntaxError("expected a parameter", text, o, ["integer", "C", "H", "R"])
            i += 1
            k, v, o = toks[i]
            if k == "punct" and v == ",":
                i += 1
                continue
            if k == "punct" and v == ")":
                i += 1
                break
            raise SpecSyntaxError("expected ',' or ')'", text, o, [",", ")"])
    if toks[i][0] != "end":
        raise SpecSyntaxError("trailing input", text, toks[i][2], ["end of input"])
    return _resolve(text, name, off, args)


def _resolve(text, name, off, args) -> GroupSpec:
    ints = [a for a, _ in args if isinstance(a, int)]
    fields = [a for a, _ in args if isinstance(a, str)]

    def need(n_args):
        if len(args) != n_args:
            raise ArityError(f"{name} takes {n_args} parameter(s), got {len(args)}", text, off)

    def build(family, *params):
        spec = GroupSpec(family, params)
        ok, msg = _RANGES[family]
        if not ok(*params):
            raise ParameterRangeError(msg, text, args[0][1] if args else off)
        return spec

    if name in _EXCEPTIONAL:
        need(0)
        return GroupSpec(name)
    if name in ("SL", "SP", "SO"):
        need(2)
        if len(ints) < 1 or not isinstance(args[0][0], int):
            raise SpecSyntaxError("expected an integer", text, args[0][1], ["integer"])
        first = args[0][0]
        second, second_off = args[1]
        if name == "SP" and isinstance(second, int):
            return build("Sp_pq", first, second)
        if isinstance(second, int):
            if name == "SO":
                raise UnknownFamilyError("indefinite orthogonal groups are written SO+(m,n)", text, off, ["SO+", "SO*"])
            raise SpecSyntaxError("expected a field letter", text, second_off, sorted(_FIELDS))
        allowed = {"SL": ("C", "H", "R"), "SP": ("C", "R"), "SO": ("C",)}[name]
        if second not in allowed:
            raise SpecSyntaxError(f"field {second} not available for {name}", text, second_off, list(allowed))
        if name == "SL":
            return build({"C": "SL_C", "H": "SL_H", "R": "SL_R"}[second], first)
        if name == "SO":
            return build("SO_C", first)
        if first % 2:
            raise ParityError(f"Sp(2n,{second}) requires an even argument", text, args[0][1])
        return build({"C": "Sp_C", "R": "Sp_R"}[second], first // 2)
    if name in ("SO+", "SU"):
        need(2)
        if fields:
            raise SpecSyntaxError("expected an integer", text, [o for a, o in args if isinstance(a, str)][0], ["integer"])
        return build("SOplus" if name == "SO+" else "SU", ints[0], ints[1])
    if name == "SO*":
        need(1)
        if fields:
            raise SpecSyntaxError("expected an integer", text, args[0][1], ["integer"])
        if ints[0] % 2:
            raise ParityError("SO*(2n) requires an even argument", text, args[0][1])
        return build("SOstar", ints[0] // 2)
    raise UnknownFamilyError(f"unknown family {name!r}", text, off, ["SL", "Sp", "SO", "SO+", "SO*", "SU", "E6", "E7", "E8", "F4", "G2", "EII"])
