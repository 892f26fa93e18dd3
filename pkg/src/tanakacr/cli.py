"""Command-line front end: ``tanakacr <verb> ...``.

Exit status 0 means success, 1 a verification mismatch, 2 a usage or input error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import catalog, cohomology, rootsys
from .cr import (
    CostGuardError,
    CRFlag,
    brute_force_symmetry_algebra,
    flag_from_complex_structure,
    integrability_check,
    is_cr_symmetry,
    is_distribution_symmetry,
)
from .eds import ComplexForm, PfaffianSystem, PolyVectorField, format_form, parse_form
from .exact import Matrix, fmt_rat, rat
from .nilpotent import GradedNilpotent, growth_vector, heavy_substitution, symbol_algebra
from .tanaka import (
    Prolongation,
    commutant,
    compute_n0,
    find_complex_structure,
    invariant_symmetric_form,
    prolong,
    proportional,
)


class UsageError(Exception):
    pass


# --------------------------------------------------------------- inputs


@dataclass
class Target:
    label: str
    system: PfaffianSystem
    flag: Optional[CRFlag] = None
    fields: Dict[str, PolyVectorField] = field(default_factory=dict)
    entry: Optional[catalog.CatalogEntry] = None


def parse_params(items: Optional[Sequence[str]]) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep or not key:
            raise UsageError(f"parameter {item!r} is not of the form key=value")
        if key == "variant":
            out[key] = val
            continue
        try:
            q = Fraction(val)
        except ValueError:
            raise UsageError(f"parameter {key} needs a rational value, got {val!r}") from None
        out[key] = int(q) if q.denominator == 1 else q
    return out


def load_file(path: str) -> Target:
    """JSON with ``chart``, ``forms`` and either ``weights`` or ``heavy``; optional ``mu`` and ``fields``."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise UsageError(f"{path}: top level must be an object")
    try:
        chart = [str(c) for c in data["chart"]]
        if "weights" in data:
            weights = {c: int(data["weights"][c]) for c in chart}
        else:
            heavy = set(data.get("heavy", []))
            weights = {c: (2 if c in heavy else 1) for c in chart}
        forms = [parse_form(t, chart) for t in data["forms"]]
        sys_ = PfaffianSystem(chart, weights, forms)
        flag = None
        if "mu" in data:
            mu = [ComplexForm(parse_form(re, chart), parse_form(im, chart)) for re, im in data["mu"]]
            flag = CRFlag(sys_, mu)
        fields = {}
        for name, comps in data.get("fields", {}).items():
            fields[name] = PolyVectorField.from_dict(chart, {c: parse_form(t, chart).terms.get((), None) or _zero(chart) for c, t in comps.items()})
    except KeyError as exc:
        raise UsageError(f"{path}: missing key {exc}") from None
    except (ValueError, TypeError, SyntaxError) as exc:
        raise UsageError(f"{path}: {exc}") from None
    return Target(path, sys_, flag, fields)


def _zero(chart):
    from .exact import Poly

    return Poly.zero(tuple(chart))


def resolve(args) -> Target:
    if bool(args.entry) == bool(args.file):
        raise UsageError("give exactly one of --entry or --file")
    if args.file:
        return load_file(args.file)
    try:
        e = catalog.build(args.entry, parse_params(args.params))
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{args.entry}: {exc}") from None
    return Target(args.entry, e.pfaffian, e.flag, dict(e.extras.get("fields", {})), e)


# ---------------------------------------------------------- verification


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    ok: bool
    provenance: str

    def line(self) -> str:
        mark = "✓" if self.ok else "✗"
        if self.ok:
            return f"{self.name}: {_show(self.computed)} {mark} [{self.provenance}]"
        return f"{self.name}: expected {_show(self.expected)}, computed {_show(self.computed)} {mark} [{self.provenance}]"


def _show(v) -> str:
    if isinstance(v, dict) and v and all(isinstance(k, int) for k in v):
        dims = [v[k] for k in sorted(v)]
        return "+".join(map(str, dims)) + f" = {sum(dims)}"
    if isinstance(v, Fraction):
        return fmt_rat(v)
    if isinstance(v, list) and v and isinstance(v[0], list):
        return f"{len(v)}x{len(v[0])} matrix"
    return str(v)


def _jsonable(v):
    if isinstance(v, Fraction):
        return fmt_rat(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _nonzero(dims: Dict[int, int]) -> Dict[int, int]:
    return {d: v for d, v in dims.items() if v}


class _Lazy:
    """Shared intermediate results for one entry."""

    def __init__(self, entry: catalog.CatalogEntry, max_degree: int):
        self.entry = entry
        self.max_degree = max_degree
        self._cache: Dict[str, Any] = {}

    def get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def symbol(self) -> GradedNilpotent:
        return self.get("symbol", lambda: symbol_algebra(self.entry.pfaffian))

    @property
    def prolongation(self) -> Prolongation:
        return self.get("prolong", lambda: prolong(self.symbol, self.max_degree))

    @property
    def n0(self):
        return self.get("n0", lambda: compute_n0(self.symbol))

    @property
    def low(self) -> List[int]:
        return self.symbol.indices(-1)

    @property
    def heavy(self) -> List[int]:
        return [i for i in range(self.symbol.dim) if self.symbol.grading[i] != -1]

    @property
    def commutant(self):
        return self.get("comm", lambda: commutant(self.n0.restrict(self.low)))

    @property
    def J(self):
        return self.get("J", lambda: find_complex_structure(self.commutant))

    @property
    def flag(self) -> Optional[CRFlag]:
        if self.entry.flag is not None:
            return self.entry.flag
        if self.J is None:
            return None
        return self.get("flag", lambda: flag_from_complex_structure(self.entry.pfaffian, self.J[0]))


def _sign_match(a: Matrix, b: Matrix) -> bool:
    s = proportional(a, b)
    return s is not None and abs(s) == 1


def verify_entry(entry: catalog.CatalogEntry, max_degree: int = 4, skip: Sequence[str] = ()) -> List[Check]:
    """Recompute every expected value of an entry."""
    L = _Lazy(entry, max_degree)
    checks: List[Check] = []
    for key, exp in entry.expected.items():
        if key in skip:
            continue
        v = exp.value
        if key == "growth":
            got = growth_vector(entry.pfaffian)
            checks.append(Check("growth", v, got, got == list(v), exp.provenance))
        elif key == "layers":
            got = _nonzero(L.prolongation.dims())
            ok = got == v and L.prolongation.terminated
            checks.append(Check("layers", v, got, ok, exp.provenance))
        elif key == "total":
            got = L.prolongation.total_dim if L.prolongation.terminated else None
            checks.append(Check("total", v, got, got == v, exp.provenance))
        elif key == "n0":
            got = len(L.prolongation.layer(0))
            checks.append(Check("n0", v, got, got == v, exp.provenance))
        elif key == "commutant":
            got = L.commutant.dim
            checks.append(Check("commutant on n-1", v, got, got == v, exp.provenance))
        elif key == "complex_structure":
            got = None if L.J is None else "found"
            checks.append(Check("complex structure", v, got, got == v, exp.provenance))
        elif key == "J":
            got = None if L.J is None else L.J[0]
            ok = got is not None and _sign_match(got, v)
            name = "J = " + ("E25 - E26" if entry.name == "e2" else "E~29") + " up to sign"
            checks.append(Check(name, v, got, ok, exp.provenance))
        elif key == "g":
            forms = invariant_symmetric_form(L.n0, L.heavy)
            ok = len(forms) == 1 and proportional(forms[0], v) is not None
            got = forms[0] if len(forms) == 1 else f"{len(forms)}-dimensional solution space"
            checks.append(Check("invariant form up to scale", v, got, ok, exp.provenance))
        elif key == "killing_signature":
            got = L.prolongation.killing_signature() if L.prolongation.terminated else None
            checks.append(Check("Killing signature", tuple(v), got, got == tuple(v), exp.provenance))
        elif key == "integrable":
            flag = L.flag
            got = None if flag is None else integrability_check(flag)
            checks.append(Check("integrable", v, got, got == v, exp.provenance))
        elif key == "dim_n_k":
            sys_ = entry.pfaffian
            k = len(sys_.forms)
            got = (len(sys_.chart), (len(sys_.chart) - k) // 2, k)
            checks.append(Check("(dim M, n, k)", tuple(v), got, got == tuple(v), exp.provenance))
        elif key == "pq":
            p = entry.params["t"] + entry.params["s"]
            q = p + entry.params["r"]
            checks.append(Check("(p, q)", tuple(v), (p, q), (p, q) == tuple(v), exp.provenance))
        elif key == "symmetry_dim":
            got = brute_force_symmetry_algebra(entry.pfaffian, 4).dimension
            checks.append(Check("distribution symmetries (bound 4)", v, got, got == v, exp.provenance))
        elif key == "cr_symmetry_dim":
            got = brute_force_symmetry_algebra(entry.flag, 4).dimension
            checks.append(Check("CR symmetries (bound 4)", v, got, got == v, exp.provenance))
        elif key == "cr_symmetry_dim_at_most":
            got = brute_force_symmetry_algebra(entry.flag, 4).dimension
            checks.append(Check("CR symmetries (bound 4) at most", v, got, got <= v, exp.provenance))
        elif key == "cr_symmetry":
            got = {n: is_cr_symmetry(entry.extras["fields"][n], entry.flag) for n in v}
            checks.append(Check("CR symmetry of printed fields", v, got, got == v, exp.provenance))
        elif key == "forms":
            printed = [parse_form(t, entry.pfaffian.chart) for t in v]
            got = [format_form(f) for f in entry.pfaffian.forms]
            checks.append(Check("forms", v, got, printed == list(entry.pfaffian.forms), exp.provenance))
        elif key == "symbol_matches":
            ref = symbol_algebra(catalog.build(v).pfaffian)
            S = heavy_substitution(L.symbol, ref)
            got = None if S is None else "heavy substitution " + str([fmt_rat(S[i][i]) for i in range(len(S))])
            checks.append(Check(f"symbol matches {v}", v, got, S is not None, exp.provenance))
        else:
            checks.append(Check(key, v, "no checker", False, exp.provenance))
    if "structure" in entry.extras:
        ok = L.symbol == entry.extras["structure"]
        checks.append(Check("symbol equals printed structure equations", True, ok, ok, catalog.PAPER))
    return checks


# ------------------------------------------------------------------ verbs


def _emit(args, obj, text: Optional[str] = None):
    if args.json or text is None:
        print(json.dumps(_jsonable(obj), indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def cmd_growth(args) -> int:
    t = resolve(args)
    gv = growth_vector(t.system)
    _emit(args, {"growth": gv}, str(gv))
    return 0


def cmd_symbol(args) -> int:
    t = resolve(args)
    _emit(args, symbol_algebra(t.system).to_json())
    return 0


def cmd_prolong(args) -> int:
    t = resolve(args)
    P = prolong(symbol_algebra(t.system), args.max_degree)
    note = "" if P.terminated else f" (not terminated by degree {args.max_degree})"
    _emit(args, P.to_json(), P.dimension_string() + note)
    return 0


def _need_flag(t: Target) -> CRFlag:
    if t.flag is None:
        raise UsageError(f"{t.label} carries no CR flag")
    return t.flag


def cmd_check_integrable(args) -> int:
    t = resolve(args)
    ok = integrability_check(_need_flag(t))
    _emit(args, {"ok": ok}, "integrable" if ok else "not integrable")
    return 0


def cmd_check_symmetry(args) -> int:
    t = resolve(args)
    if args.field not in t.fields:
        raise UsageError(f"unknown field {args.field!r}; available: {', '.join(sorted(t.fields)) or 'none'}")
    Y = t.fields[args.field]
    out = {"field": args.field, "distribution": is_distribution_symmetry(Y, t.system)}
    if t.flag is not None:
        out["cr"] = is_cr_symmetry(Y, t.flag)
    out["ok"] = out.get("cr", out["distribution"]) if args.cr else out["distribution"]
    _emit(args, out, ", ".join(f"{k}: {v}" for k, v in out.items() if k != "field"))
    return 0


def cmd_solve_symmetries(args) -> int:
    t = resolve(args)
    target = _need_flag(t) if args.cr else t.system
    try:
        alg = brute_force_symmetry_algebra(target, args.bound)
    except CostGuardError as exc:
        raise UsageError(str(exc)) from None
    out = {"ok": alg.closed, "dimension": alg.dimension, "bound": args.bound, "closed": alg.closed, "jacobi": alg.jacobi}
    _emit(args, out, f"dimension {alg.dimension} (bound {args.bound}, closed: {alg.closed}, Jacobi: {alg.jacobi})")
    return 0


def cmd_find_j(args) -> int:
    t = resolve(args)
    n = symbol_algebra(t.system)
    comm = commutant(compute_n0(n).restrict(n.indices(-1)))
    res = find_complex_structure(comm)
    out = {"commutant_dim": comm.dim, "J": None if res is None else res[0], "unique_up_to_sign": None if res is None else res[1]}
    if res is None:
        text = f"commutant dimension {comm.dim}; no complex structure"
    else:
        text = f"commutant dimension {comm.dim}; J found" + (" (unique up to sign)" if res[1] else "")
    _emit(args, out, text)
    return 0


def cmd_classify(args) -> int:
    rows = rootsys.enumerate_depth2(args.max_rank)
    text = "\n".join(
        f"{r.family:6s} {r.algebra:10s} {'{' + ', '.join(f'α{i}' for i in r.crossing) + '}':18s} (dim M, n, k) = ({r.dim_M}, {r.n}, {r.k})"
        for r in rows
    )
    _emit(args, [r.to_json() for r in rows], text)
    return 0


def cmd_rigidity(args) -> int:
    t = resolve(args)
    P = prolong(symbol_algebra(t.system), args.max_degree)
    if not P.terminated:
        raise UsageError("prolongation did not terminate; raise --max-degree")
    kw = {}
    if args.mode == "exact":
        kw["exact_limit"] = 10**9
    elif args.mode == "modular":
        kw["exact_limit"] = 0
    try:
        r = cohomology.rigidity(P, threshold=args.threshold, **kw)
    except cohomology.CohomologyCostError as exc:
        raise UsageError(str(exc)) from None
    text = ", ".join(f"H2_{w} = {d}" for w, d in sorted(r.weights.items())) + f"; rigid: {r.rigid} ({r.mode})"
    _emit(args, r.to_json(), text)
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        names = catalog.list_entries()
        _emit(args, names, "\n".join(names))
        return 0
    if not args.name:
        raise UsageError("catalog show needs an entry name")
    try:
        e = catalog.build(args.name, parse_params(args.params))
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{args.name}: {exc}") from None
    obj = {
        "name": e.name,
        "params": e.params,
        "chart": list(e.pfaffian.chart),
        "forms": [format_form(f) for f in e.pfaffian.forms],
        "expected": {k: {"value": x.value, "provenance": x.provenance, "note": x.note} for k, x in e.expected.items()},
    }
    if e.flag is not None:
        obj["mu"] = [[format_form(m.re), format_form(m.im)] for m in e.flag.mu]
    lines = [f"{e.name} {e.params or ''}".rstrip()]
    lines += [f"  λ{i} = {format_form(f)}" for i, f in enumerate(e.pfaffian.forms, start=1)]
    lines += [f"  {k}: {_show(x.value)} [{x.provenance}]" for k, x in e.expected.items()]
    _emit(args, obj, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    try:
        e = catalog.build(args.name, parse_params(args.params))
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{args.name}: {exc}") from None
    if not e.expected and "structure" not in e.extras:
        print(f"{e.name}: no expected values", file=sys.stderr)
        return 0
    checks = verify_entry(e, args.max_degree)
    ok = all(c.ok for c in checks)
    obj = {
        "entry": e.name,
        "ok": ok,
        "checks": [
            {"name": c.name, "ok": c.ok, "provenance": c.provenance, "expected": c.expected, "computed": c.computed} for c in checks
        ],
    }
    _emit(args, obj, "\n".join(c.line() for c in checks))
    if not ok:
        for c in checks:
            if not c.ok:
                print(f"mismatch in {c.name}: expected {_show(c.expected)}, computed {_show(c.computed)}", file=sys.stderr)
    return 0 if ok else 1


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tanakacr", description="Tanaka prolongation and accidental CR structures.")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, fn, source=True, help_=None):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if source:
            sp.add_argument("--entry", help="catalog entry name")
            sp.add_argument("--file", help="JSON system file")
            sp.add_argument("--params", nargs="*", metavar="KEY=VALUE", help="catalog parameters")
        return sp

    add("growth", cmd_growth, help_="growth vector")
    add("symbol", cmd_symbol, help_="symbol algebra as JSON")
    sp = add("prolong", cmd_prolong, help_="Tanaka prolongation")
    sp.add_argument("--max-degree", type=int, default=4)
    add("check-integrable", cmd_check_integrable, help_="integrability of the CR flag")
    sp = add("check-symmetry", cmd_check_symmetry, help_="test a named vector field")
    sp.add_argument("--field", required=True)
    sp.add_argument("--cr", action="store_true", help="report the CR verdict as ok")
    sp = add("solve-symmetries", cmd_solve_symmetries, help_="polynomial symmetry algebra")
    sp.add_argument("--bound", type=int, default=4)
    sp.add_argument("--cr", action="store_true", help="restrict to CR symmetries")
    add("find-j", cmd_find_j, help_="complex structure commuting with n0")
    sp = add("classify", cmd_classify, source=False, help_="depth-2 accidental CR gradings")
    sp.add_argument("--max-rank", type=int, default=7)
    sp = add("rigidity", cmd_rigidity, help_="weighted H^2 and rigidity")
    sp.add_argument("--max-degree", type=int, default=4)
    sp.add_argument("--mode", choices=("exact", "modular", "auto"), default="auto")
    sp.add_argument("--threshold", type=int, default=0, help="lowest weight that breaks rigidity")
    sp = add("catalog", cmd_catalog, source=False, help_="list or show entries")
    sp.add_argument("action", choices=("list", "show"))
    sp.add_argument("name", nargs="?")
    sp.add_argument("--params", nargs="*", metavar="KEY=VALUE")
    sp = add("verify", cmd_verify, source=False, help_="recompute an entry's expected values")
    sp.add_argument("name")
    sp.add_argument("--params", nargs="*", metavar="KEY=VALUE")
    sp.add_argument("--max-degree", type=int, default=4)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "verb", None) == "classify" and args.max_rank < 4:
        print("error: --max-rank must be at least 4", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
