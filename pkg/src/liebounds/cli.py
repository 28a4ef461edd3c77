"""Command-line front end.

    liebounds invariants SU(4,2)
    liebounds table --family SO* --n 4..8 --format csv
    liebounds parabolics SL(3,C)
    liebounds verify s-formulas --max 12
    liebounds weyl-dim A4 0,1,0,0
    liebounds min-rep SO*(12)

Exit codes: 0 success, 1 failed verification, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import sys
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .bounds import MAX_ENUMERATION_RANK, s_lower, s_lower_value
from .catalogue import FAMILY_ORDER, Catalogue, GroupDescriptor, default_catalogue, load_catalogue, make_spec
from .catalogue import parse_group_spec
from .errors import GroupSpecError, LieBoundsError, NotTabulatedError, ScaleLimitError
from .flagcalc import r0_of_group, r_of_group, v_of_group
from .repdim import DominantWeight, freudenthal_dim, real_rep_report, weyl_dim
from .verify import CHECKS, run_check

COLUMNS = ("group", "v", "v_cpt", "n", "r", "r0", "s_lower")

FAMILY_ALIASES = {"SO*": "SOstar", "SO+": "SOplus", "SP(M,N)": "Sp_pq"}


@dataclass(frozen=True)
class TableRow:
    group: str
    v: int
    v_cpt: Optional[int]
    n: Optional[int]
    r: int
    r0: int
    s_lower: Optional[int]
    provenance: Dict[str, str] = field(default_factory=dict, compare=False)

    def cells(self) -> List[str]:
        return [self.group] + ["" if getattr(self, c) is None else str(getattr(self, c)) for c in COLUMNS[1:]]

    def provenance_cell(self) -> str:
        return ";".join(f"{c}:{self.provenance[c]}" for c in COLUMNS[1:] if c in self.provenance)

    @classmethod
    def from_cells(cls, cells: Sequence[str], provenance: str = "") -> "TableRow":
        values = [cells[0]] + [int(x) if x else None for x in cells[1:len(COLUMNS)]]
        prov = dict(p.split(":", 1) for p in provenance.split(";") if p)
        return cls(*values, provenance=prov)


def table_row(desc: GroupDescriptor, catalogue: Catalogue) -> TableRow:
    prov = {"v": "computed", "r": "computed", "r0": "computed"}
    n = desc.n_G
    if n is not None:
        prov["n"] = "catalogue"
    else:
        try:
            n = real_rep_report(desc.spec, catalogue).value
            prov["n"] = "computed"
        except LieBoundsError:
            n = None
    if desc.v_cpt is not None:
        prov["v_cpt"] = "catalogue"
    try:
        s = s_lower_value(desc)
        prov["s_lower"] = "computed"
    except ScaleLimitError:
        s = None
    return TableRow(str(desc), v_of_group(desc), desc.v_cpt, n, r_of_group(desc), r0_of_group(desc), s, prov)


def render(rows: Iterable[TableRow], fmt: str) -> str:
    rows = list(rows)
    header = list(COLUMNS) + ["provenance"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow(row.cells() + [row.provenance_cell()])
        return buf.getvalue()
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(row.cells() + [row.provenance_cell()]) + " |")
    return "\n".join(lines) + "\n"


def parse_table_csv(text: str) -> List[TableRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header[: len(COLUMNS)]) != COLUMNS:
        raise ValueError(f"unexpected header {header}")
    return [TableRow.from_cells(cells, cells[len(COLUMNS)] if len(cells) > len(COLUMNS) else "") for cells in reader]


def parse_range(text: str) -> Tuple[int, int]:
    """'4..8' or '5' -> inclusive bounds."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def resolve_family(name: str) -> str:
    key = FAMILY_ALIASES.get(name.upper())
    if key:
        return key
    for fam in FAMILY_ORDER:
        if fam.upper() == name.upper():
            return fam
    raise argparse.ArgumentTypeError(f"unknown family {name!r}; known: {', '.join(FAMILY_ORDER)}, SO*, SO+")


def _default_families(catalogue: Catalogue) -> List[str]:
    return [rec.family for rec in catalogue if rec.table1 is not None or rec.family == "EII"]


def table_rows(
    catalogue: Catalogue,
    families: Optional[Sequence[str]] = None,
    n_range: Optional[Tuple[int, int]] = None,
    m_range: Optional[Tuple[int, int]] = None,
) -> List[TableRow]:
    """Rows in family order, then by parameters.

    Without ranges each family contributes its smallest parameters inside
    the tabulated range.
    """
    wanted = set(families) if families else set(_default_families(catalogue))
    rows = []
    for rec in catalogue:
        if rec.family not in wanted:
            continue
        points: List[Tuple[int, ...]] = []
        if not rec.params:
            points = [()]
        elif n_range is None and m_range is None:
            cands = [(n,) for n in range(2, 40)] if len(rec.params) == 1 else [
                (m, n) for n in range(2, 20) for m in range(n, 40)
            ]
            ok = [p for p in cands if rec.in_table1(dict(zip(rec.params, p)))]
            if not ok:
                ok = [p for p in cands if rec.valid(dict(zip(rec.params, p)))]
            points = [min(ok)] if ok else []
        else:
            nlo, nhi = n_range or (2, 12)
            if len(rec.params) == 1:
                points = [(n,) for n in range(nlo, nhi + 1)]
            else:
                mlo, mhi = m_range or (nlo, max(nhi, 12))
                points = [(m, n) for m in range(mlo, mhi + 1) for n in range(nlo, nhi + 1)]
        for p in sorted(points):
            if not rec.valid(dict(zip(rec.params, p))):
                continue
            try:
                desc = catalogue.describe(make_spec(rec.family, *p))
            except NotTabulatedError:
                continue
            rows.append(table_row(desc, catalogue))
    return rows


# --- verbs ---------------------------------------------------------------------------


def _catalogue(args) -> Catalogue:
    return load_catalogue(args.catalogue) if args.catalogue else default_catalogue()


def cmd_invariants(args, out) -> int:
    cat = _catalogue(args)
    rows = [table_row(cat.describe(parse_group_spec(s)), cat) for s in args.spec]
    out.write(render(rows, args.format))
    return 0


def cmd_table(args, out) -> int:
    cat = _catalogue(args)
    families = [resolve_family(f) for f in args.family] if args.family else None
    out.write(render(table_rows(cat, families, args.n, args.m), args.format))
    return 0


def _fmt_set(indices: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in indices) + "}"


def cmd_parabolics(args, out) -> int:
    cat = _catalogue(args)
    desc = cat.describe(parse_group_spec(args.spec))
    if desc.rank > MAX_ENUMERATION_RANK:
        raise ScaleLimitError(f"{desc} has rank {desc.rank}; subset listing is capped at rank {MAX_ENUMERATION_RANK}")
    report = s_lower(desc)
    if not args.quiet:
        for e in report.entries:
            parts = [f"Pi_Q={_fmt_set(e.pi_Q)}", f"r0={e.r0_bound}"]
            parts += [f"SR{_fmt_set(d)}={v}" for d, v in e.superrigidity_bounds]
            if e.refined_bound is not None:
                parts.append(f"refined={e.refined_bound}")
            parts.append(f"effective={e.effective}")
            out.write("  ".join(parts) + "\n")
    argmin = " ".join(_fmt_set(p) for p in report.argmin)
    out.write(f"{report.group}: s_lower = {report.s_lower} ({report.kind}); argmin {argmin}\n")
    return 0


def cmd_verify(args, out) -> int:
    cat = _catalogue(args)
    kind = CHECKS[args.check][1]
    bound = args.max if kind == "param" else args.max_rank
    if bound is None:
        bound = args.max if args.max is not None else args.max_rank
    res = run_check(args.check, bound, cat)
    if not args.quiet:
        for f in res.failures:
            out.write(f"FAIL {f}\n")
    status = "PASS" if res.passed else "FAIL"
    out.write(f"{status} {res.name}: {res.checked} checked, {len(res.failures)} failed\n")
    return 0 if res.passed else 1


def _parse_type(text: str) -> Tuple[str, int]:
    t = text.upper()
    if t in ("E6", "E7", "E8", "F4", "G2"):
        return t, int(t[1])
    label = t.rstrip("0123456789")
    digits = t[len(label):]
    if label not in ("A", "B", "C", "D") or not digits:
        raise argparse.ArgumentTypeError(f"expected a Cartan type such as A4, C3, E6; got {text!r}")
    return label, int(digits)


def cmd_weyl_dim(args, out) -> int:
    ctype = _parse_type(args.type)
    try:
        labels = tuple(int(x) for x in args.weight.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated Dynkin labels, got {args.weight!r}") from None
    lam = DominantWeight(labels)
    d = weyl_dim(ctype, lam)
    line = f"{args.type} {','.join(map(str, labels))}: {d}"
    if args.oracle:
        line += f" (Freudenthal {freudenthal_dim(ctype, lam)})"
    out.write(line + "\n")
    return 0


def cmd_min_rep(args, out) -> int:
    cat = _catalogue(args)
    spec = parse_group_spec(args.spec)
    rep = real_rep_report(spec, cat)
    out.write(f"{spec}: n = {rep.value} [{rep.source}]\n")
    if rep.minimizers and not args.quiet:
        out.write("minimizers: " + " ".join("(" + ",".join(map(str, m)) + ")" for m in rep.minimizers) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--catalogue", default=argparse.SUPPRESS, help="catalogue file (JSON lines)")
    common.add_argument("--format", choices=("md", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--max", type=int, default=argparse.SUPPRESS, help="parameter bound for grid checks")
    common.add_argument("--max-rank", type=int, default=argparse.SUPPRESS, help="rank bound for rank-indexed checks")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="liebounds", description="Invariants behind lower bounds for s(G).", allow_abbrev=False)
    p.add_argument("--catalogue", default=None)
    p.add_argument("--format", choices=("md", "csv"), default="md")
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--quiet", action="store_true", default=False)
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("invariants", parents=[common], allow_abbrev=False, help="one table row per group")
    s.add_argument("spec", nargs="+")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("table", parents=[common], allow_abbrev=False, help="invariant table over families and parameter ranges")
    s.add_argument("--family", action="append", help="family key (repeatable), e.g. SU, SOstar, SO*")
    s.add_argument("--n", type=parse_range, help="range A..B for n")
    s.add_argument("--m", type=parse_range, help="range A..B for m")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("parabolics", parents=[common], allow_abbrev=False, help="bounds at every proper parabolic")
    s.add_argument("spec")
    s.set_defaults(func=cmd_parabolics)

    s = sub.add_parser("verify", parents=[common], allow_abbrev=False, help="run a named check")
    s.add_argument("check", choices=list(CHECKS))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("weyl-dim", parents=[common], allow_abbrev=False, help="Weyl dimension of a highest weight")
    s.add_argument("type", help="Cartan type, e.g. A4, C3, E6")
    s.add_argument("weight", help="Dynkin labels, e.g. 0,1,0,0")
    s.add_argument("--oracle", action="store_true", help="also run the Freudenthal recursion")
    s.set_defaults(func=cmd_weyl_dim)

    s = sub.add_parser("min-rep", parents=[common], allow_abbrev=False, help="minimal real representation")
    s.add_argument("spec")
    s.set_defaults(func=cmd_min_rep)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except GroupSpecError as exc:
        err.write(f"error: {exc}\n  {exc.text}\n  {' ' * exc.offset}^\n")
        return 2
    except (LieBoundsError, LookupError, ValueError, OSError, argparse.ArgumentTypeError) as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
