"""Command-line interface: ``relstab surface ...`` and ``relstab quiver ...``.

Exit status: 0 when a verdict was decided (negative verdicts included),
2 when a search gave up or a finite check refused, 1 on input errors.
Output is JSON on stdout, except ``surface scan`` which streams CSV.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .charge import ActionParam, ComplexExact, KahlerParam, line_bundle_ch
from .dhym import f_derived, twisted_ampleness
from .picard import DivisorClass, Surface, parse_class
from .quadratic import QuadraticNumber, format_fraction, to_fraction
from .search import HorizonExhausted, SearchParams, find_counterexample
from .stability import bridgeland_stable, classify, g_derived

EXIT_DECIDED, EXIT_INPUT, EXIT_GAVE_UP = 0, 1, 2

SCAN_COLUMNS = ["k", "l", "f_derived", "g_derived", "in_heart", "dhym", "stable", "class"]


class InputError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"invalid value for '{field}': {message}")
        self.field = field


# ---------------------------------------------------------------- parsing helpers


def _rational(value, field: str) -> Fraction:
    if value is None:
        raise InputError(field, "missing")
    try:
        return to_fraction(value if not isinstance(value, str) else value.strip())
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(field, f"expected a rational 'p/q', got {value!r} ({exc})") from None


def _quadratic(value, field: str) -> QuadraticNumber:
    if isinstance(value, dict):
        try:
            return QuadraticNumber.from_json(value)
        except (ValueError, TypeError) as exc:
            raise InputError(field, str(exc)) from None
    return QuadraticNumber(_rational(value, field))


def _int(value, field: str) -> int:
    try:
        return int(value)
    except (ValueError, TypeError):
        raise InputError(field, f"expected an integer, got {value!r}") from None


def _complex(value, field: str) -> ComplexExact:
    if isinstance(value, dict):
        if "re" not in value or "im" not in value:
            raise InputError(field, "complex values need 're' and 'im'")
        return ComplexExact(_quadratic(value["re"], field), _quadratic(value["im"], field))
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return ComplexExact(_quadratic(value[0], field), _quadratic(value[1], field))
    parts = str(value).split(",")
    if len(parts) != 2:
        raise InputError(field, f"expected 're,im', got {value!r}")
    return ComplexExact(_rational(parts[0], field), _rational(parts[1], field))


def _complex_list(value, field: str) -> list[ComplexExact]:
    if value is None:
        raise InputError(field, "missing")
    if isinstance(value, list):
        return [_complex(v, field) for v in value]
    return [_complex(p, field) for p in str(value).split(";") if p.strip()]


def _range(value, field: str) -> range:
    if isinstance(value, (list, tuple)) and len(value) == 2:
        lo, hi = value
    else:
        parts = str(value).split(":")
        if len(parts) != 2:
            raise InputError(field, f"expected 'lo:hi', got {value!r}")
        lo, hi = parts
    lo, hi = _int(lo, field), _int(hi, field)
    if hi < lo:
        raise InputError(field, "empty range")
    return range(lo, hi + 1)


def _divisor(value, surface: Surface, field: str) -> DivisorClass:
    if isinstance(value, dict):
        try:
            return DivisorClass(_quadratic(value["a"], field), _quadratic(value["b"], field), surface)
        except KeyError as exc:
            raise InputError(field, f"missing coordinate {exc.args[0]!r}") from None
    try:
        return parse_class(str(value), surface)
    except (ValueError, TypeError) as exc:
        raise InputError(field, str(exc)) from None


# ---------------------------------------------------------------- surface commands


def _surface_setup(a):
    r = _int(a.r, "r")
    if r < 0:
        raise InputError("r", "must be >= 0")
    surface = Surface(r)
    if a.omega is not None:
        omega = _divisor(a.omega, surface, "omega")
        try:
            kahler = KahlerParam(omega)
        except ValueError as exc:
            raise InputError("omega", str(exc)) from None
    else:
        alpha2 = _rational(a.alpha2, "alpha2")
        s = _rational(a.s, "s")
        if alpha2 <= 0:
            raise InputError("alpha2", "must be positive")
        if s <= 0:
            raise InputError("s", "must be positive")
        try:
            kahler = KahlerParam.proportional(alpha2, s, surface)
        except ValueError as exc:
            raise InputError("s", str(exc)) from None
    B = None if a.B is None else _divisor(a.B, surface, "B")
    curves = None
    if a.curves is not None:
        items = a.curves if isinstance(a.curves, list) else [c for c in str(a.curves).split(";") if c.strip()]
        curves = [_divisor(c, surface, "curves") for c in items]
    return surface, kahler, B, curves


def _inputs_json(a, kahler, B):
    return {"r": _int(a.r, "r"), "omega": kahler.to_json(), "B": None if B is None else B.to_json()}


def cmd_dhym_check(a, out):
    surface, kahler, B, curves = _surface_setup(a)
    L = _divisor(a.L, surface, "L")
    v = twisted_ampleness(line_bundle_ch(L), kahler, B, curves)
    res = dict(v.to_json(), L=L.to_json(), inputs=_inputs_json(a, kahler, B))
    return EXIT_DECIDED, res


def cmd_bstab_check(a, out):
    surface, kahler, B, curves = _surface_setup(a)
    L = _divisor(a.L, surface, "L")
    v = bridgeland_stable(line_bundle_ch(L), kahler, B, curves)
    res = dict(v.to_json(), L=L.to_json(), inputs=_inputs_json(a, kahler, B))
    return EXIT_DECIDED, res


def cmd_scan(a, out):
    surface, kahler, B, curves = _surface_setup(a)
    ks, ls = _range(a.k_range, "k_range"), _range(a.l_range, "l_range")
    closed = kahler.alpha2 is not None and B is None and curves is None and surface.r >= 1
    w = csv.writer(out, lineterminator="\n")
    w.writerow(SCAN_COLUMNS)
    for k in ks:
        for l in ls:
            L = line_bundle_ch(DivisorClass(k, l, surface))
            dv = twisted_ampleness(L, kahler, B, curves)
            sv = bridgeland_stable(L, kahler, B, curves)
            if closed:
                f = format_fraction(f_derived(k, l, surface.r, kahler.s, kahler.alpha2))
                g = format_fraction(g_derived(k, l, surface.r, kahler.s, kahler.alpha2))
            else:
                f = g = ""
            w.writerow([k, l, f, g, sv.in_heart, dv.solvable, sv.stable, classify(dv.solvable, sv.stable)])
    return EXIT_DECIDED, None


def cmd_find_counterexample(a, out):
    r = _int(a.r, "r")
    s = _rational(a.s, "s")
    alpha2 = _rational(a.alpha2, "alpha2")
    try:
        params = SearchParams(r, s, alpha2, _int(a.l_max, "l_max"), _int(a.n_max, "n_max"))
    except ValueError as exc:
        raise InputError("r" if "r >=" in str(exc) else "s/alpha2/horizon", str(exc)) from None
    try:
        w = find_counterexample(params)
    except HorizonExhausted as exc:
        return EXIT_GAVE_UP, {"horizon_exhausted": True, "message": str(exc), "best": exc.best, "trace": exc.trace}
    return EXIT_DECIDED, w.to_json()


# ---------------------------------------------------------------- quiver commands


def _n(a) -> int:
    n = _int(a.n, "n")
    if not 1 <= n <= 6:
        raise InputError("n", "supported range is 1..6")
    return n


def _sub(value, n, field: str):
    from .quiver.thick import parse_thick

    if value is None:
        return None
    try:
        if isinstance(value, list):
            value = ";".join(",".join(str(x) for x in g[:2]) for g in value)
        return parse_thick(str(value), n)
    except (ValueError, TypeError) as exc:
        raise InputError(field, str(exc)) from None


def _heart(value, n, sub, field: str):
    from .quiver.hearts import HeartError, parse_heart, standard_heart

    if value is None:
        return standard_heart(n, sub)
    if isinstance(value, list):
        value = ";".join(",".join(str(x) for x in o) for o in value)
    try:
        return parse_heart(str(value), n, sub)
    except (ValueError, HeartError) as exc:
        raise InputError(field, str(exc)) from None


def _stab(heart, charges, field: str):
    from .relative.conditions import StabCondition

    try:
        return StabCondition(heart, charges)
    except ValueError as exc:
        raise InputError(field, str(exc)) from None


def _objects(value, n, field: str):
    from .quiver.category import DGObject, parse_objects

    try:
        if isinstance(value, list):
            objs = [_indec_from(o) for o in value]
        else:
            objs = parse_objects(str(value))
    except (ValueError, TypeError) as exc:
        raise InputError(field, str(exc)) from None
    for o in objs:
        if o.b > n:
            raise InputError(field, f"{o} does not live on A_{n}")
    if not objs:
        raise InputError(field, "no objects given")
    return DGObject(objs)


def _indec_from(o):
    from .quiver.category import IndecObject

    return IndecObject(*[int(x) for x in o])


def cmd_hearts(a, out):
    from .quiver.hearts import exchange_graph

    n = _n(a)
    sub = _sub(a.sub, n, "sub")
    if a.lo is not None or a.hi is not None:
        lo = _int(a.lo if a.lo is not None else 0, "lo")
        hi = _int(a.hi if a.hi is not None else a.window, "hi")
        if hi < lo:
            raise InputError("hi", "must be >= lo")
        g = exchange_graph(n, lo=lo, hi=hi, sub=sub, max_hearts=_int(a.max_hearts, "max_hearts"))
    else:
        w = _int(a.window, "window")
        if w < 1:
            raise InputError("window", "must be >= 1")
        g = exchange_graph(n, w, sub=sub, max_hearts=_int(a.max_hearts, "max_hearts"))
    res = dict(g.to_json(), n=n, count=len(g.hearts))
    return (EXIT_DECIDED if g.complete else EXIT_GAVE_UP), res


def cmd_thick(a, out):
    from .quiver.thick import is_left_admissible, orthogonal, thick_subcategories

    n = _n(a)
    subs = thick_subcategories(n)
    entries = []
    for T in subs:
        entries.append({
            "generators": T.to_json(),
            "rank": T.rank,
            "left_orthogonal": orthogonal(T, "left").to_json(),
            "right_orthogonal": orthogonal(T, "right").to_json(),
            "left_admissible": is_left_admissible(T),
        })
    return EXIT_DECIDED, {"n": n, "count": len(subs), "thick_subcategories": entries}


def cmd_tilt(a, out):
    from .quiver.category import parse_object
    from .quiver.hearts import HeartError, simple_tilt

    n = _n(a)
    sub = _sub(a.sub, n, "sub")
    H = _heart(a.heart, n, sub, "heart")
    try:
        S = parse_object(str(a.simple)) if not isinstance(a.simple, list) else _indec_from(a.simple)
    except (ValueError, TypeError) as exc:
        raise InputError("simple", str(exc)) from None
    try:
        H2 = simple_tilt(H, S, a.direction)
    except HeartError as exc:
        raise InputError("simple", str(exc)) from None
    except ValueError as exc:
        raise InputError("direction", str(exc)) from None
    return EXIT_DECIDED, {"heart": H.to_json(), "simple": S.to_json(), "direction": a.direction, "tilted": H2.to_json()}


def cmd_hn(a, out):
    from .relative.conditions import WindowError, support_check

    n = _n(a)
    sub = _sub(a.sub, n, "sub")
    H = _heart(a.heart, n, sub, "heart")
    sigma = _stab(H, _complex_list(a.charges, "charges"), "charges")
    X = _objects(a.object, n, "object")
    try:
        r = sigma.hn(X)
    except WindowError as exc:
        return EXIT_GAVE_UP, {"window_violation": str(exc)}
    res = {"sigma": sigma.to_json(), "object": X.to_json(), "hn": r.to_json(),
           "charge_of_object": sigma.charge_of(X).to_json(),
           "mass_exceeds_modulus": r.mass.compare_modulus(sigma.charge_of(X)) > 0}
    if a.support:
        res["support"] = support_check(sigma).to_json()
    return EXIT_DECIDED, res


def _sigma1(a, n):
    sub = _sub(a.sub, n, "sub")
    if sub is None:
        raise InputError("sub", "missing (generators 'a,b;c,d', 'full' or 'zero')")
    return sub


def cmd_glue(a, out):
    from .quiver.thick import orthogonal
    from .relative.conditions import shifted
    from .relative.gluing import glue, required_shift

    n = _n(a)
    D1 = _sigma1(a, n)
    D2 = orthogonal(D1, "left")
    s1 = _stab(_heart(a.heart1, n, D1, "heart1"), _complex_list(a.charges1, "charges1"), "charges1")
    s2 = _stab(_heart(a.heart2, n, D2, "heart2"), _complex_list(a.charges2, "charges2"), "charges2")
    if a.shift2 is not None:
        s2 = shifted(s2, _int(a.shift2, "shift2"))
    res = glue(s1, s2)
    body = res.to_json()
    body["sigma1"], body["sigma2"] = s1.to_json(), s2.to_json()
    body["least_m_for_shift_-2m"] = required_shift(s1, s2)
    return (EXIT_DECIDED if res.ok else EXIT_GAVE_UP), body


def cmd_relstab_check(a, out):
    from .relative.conditions import StabCondition
    from .relative.relative import relative_extend

    n = _n(a)
    D1 = _sigma1(a, n)
    Z = _complex_list(a.Z, "Z")
    if len(Z) != n:
        raise InputError("Z", f"need {n} values")
    H1 = _heart(a.heart1, n, D1, "heart1")
    try:
        s1 = StabCondition.from_class_charge(H1, Z)
    except ValueError as exc:
        raise InputError("Z", str(exc)) from None
    res = relative_extend(Z, s1, _int(a.m_max, "m_max"), _int(a.window, "window"))
    return (EXIT_DECIDED if res.ok else EXIT_GAVE_UP), res.to_json()


def cmd_charts(a, out):
    from .quiver.thick import ThickSubcat
    from .relative.relative import relative_charts

    n = _n(a)
    D1 = _sub(a.sub, n, "sub") or ThickSubcat.full(n)
    w = _int(a.window, "window")
    convs = ["subcategory", "ambient"] if a.convention == "both" else [a.convention]
    res = {"n": n, "sub": D1.to_json(), "window": w}
    for c in convs:
        charts = relative_charts(n, D1, w, c)
        res[c] = {"count": len(charts), "charts": [ch.to_json() for ch in charts]}
    return EXIT_DECIDED, res


def cmd_dr(a, out):
    from .relative.conditions import StabCondition
    from .relative.relative import RelStabCondition, relative_metric

    n = _n(a)
    D1 = _sigma1(a, n)
    conds = []
    for tag in ("a", "b"):
        Z = _complex_list(getattr(a, f"Z_{tag}"), f"Z_{tag}")
        if len(Z) != n:
            raise InputError(f"Z_{tag}", f"need {n} values")
        H = _heart(getattr(a, f"heart_{tag}"), n, D1, f"heart_{tag}")
        try:
            conds.append(RelStabCondition(Z, StabCondition.from_class_charge(H, Z)))
        except ValueError as exc:
            raise InputError(f"Z_{tag}", str(exc)) from None
    m = relative_metric(conds[0], conds[1], dps=_int(a.digits, "digits") + 10)
    return EXIT_DECIDED, dict(m.to_json(_int(a.digits, "digits")), sigma_a=conds[0].to_json(), sigma_b=conds[1].to_json())


def cmd_act(a, out):
    from .relative.conditions import act_C

    n = _n(a)
    sub = _sub(a.sub, n, "sub")
    H = _heart(a.heart, n, sub, "heart")
    sigma = _stab(H, _complex_list(a.charges, "charges"), "charges")
    act = ActionParam(_rational(a.a, "a"), _rational(a.log2_b, "log2_b"))
    try:
        s2 = act_C(sigma, act)
    except ValueError as exc:
        raise InputError("a", str(exc)) from None
    return EXIT_DECIDED, {"sigma": sigma.to_json(), "acted": s2.to_json()}


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relstab", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="JSON file with field values (or a 'jobs' list)")
    p.add_argument("--output", help="write to this path instead of stdout")
    p.add_argument("--digits", default=30, help="decimal digits for non-exact output")
    top = p.add_subparsers(dest="group")

    surf = top.add_parser("surface", help="line bundles on Hirzebruch surfaces")
    ss = surf.add_subparsers(dest="command")

    def surface_args(q, need_L=True):
        q.add_argument("--r", help="Hirzebruch index r >= 0")
        q.add_argument("--alpha2", help="alpha^2 (rational) for omega = alpha (D1 + s D4)")
        q.add_argument("--s", help="s (rational) for omega = alpha (D1 + s D4)")
        q.add_argument("--omega", help="explicit Kahler class 'a,b' in the (D1, D2) basis")
        q.add_argument("--B", help="B-field 'a,b' (default 0)")
        q.add_argument("--curves", help="curve classes 'a,b;c,d' replacing the negative-curve reduction")
        if need_L:
            q.add_argument("--L", help="line bundle class 'a,b' meaning O(a D1 + b D2)")

    surface_args(ss.add_parser("dhym-check", help="twisted ampleness (dHYM solvability)"))
    surface_args(ss.add_parser("bstab-check", help="Bridgeland stability of a line bundle"))
    q = ss.add_parser("scan", help="CSV grid: columns " + ",".join(SCAN_COLUMNS))
    surface_args(q, need_L=False)
    q.add_argument("--k-range", dest="k_range", default="-5:5", help="k range 'lo:hi' (inclusive)")
    q.add_argument("--l-range", dest="l_range", default="-5:5", help="l range 'lo:hi' (inclusive)")
    q = ss.add_parser("find-counterexample", help="stable but not dHYM line bundle")
    q.add_argument("--r")
    q.add_argument("--s")
    q.add_argument("--alpha2")
    q.add_argument("--l-max", dest="l_max", default=10_000)
    q.add_argument("--n-max", dest="n_max", default=10_000)

    quiv = top.add_parser("quiver", help="D^b(A_n) for the linearly oriented A_n quiver")
    qs = quiv.add_subparsers(dest="command")

    def nsub(q):
        q.add_argument("--n", help="number of vertices (1..6)")
        q.add_argument("--sub", help="thick subcategory generators 'a,b;c,d', 'full' or 'zero'")

    q = qs.add_parser("hearts", help="exchange graph of hearts")
    nsub(q)
    q.add_argument("--window", default=1, help="simples in shifts 0..window")
    q.add_argument("--lo", help="explicit lowest shift")
    q.add_argument("--hi", help="explicit highest shift")
    q.add_argument("--max-hearts", dest="max_hearts", default=100_000)
    q = qs.add_parser("thick", help="thick subcategories")
    q.add_argument("--n")
    q = qs.add_parser("tilt", help="simple tilt of a heart")
    nsub(q)
    q.add_argument("--heart", help="simples 'a,b,t;...' (default: standard heart)")
    q.add_argument("--simple", help="the simple 'a,b,t'")
    q.add_argument("--direction", default="forward", choices=["forward", "backward"])
    q = qs.add_parser("hn", help="Harder-Narasimhan filtration")
    nsub(q)
    q.add_argument("--heart")
    q.add_argument("--charges", help="charges of the simples 're,im;re,im;...'")
    q.add_argument("--object", help="object as 'a,b,t;...' (direct sum)")
    q.add_argument("--support", action="store_true", help="also report the support constant")
    q = qs.add_parser("glue", help="glue conditions on D1 and its left orthogonal")
    nsub(q)
    q.add_argument("--heart1")
    q.add_argument("--charges1")
    q.add_argument("--heart2")
    q.add_argument("--charges2")
    q.add_argument("--shift2", help="shift the second heart by this integer first")
    q = qs.add_parser("relstab-check", help="relative extension search")
    nsub(q)
    q.add_argument("--Z", help="charge on the vertex basis 're,im;...'")
    q.add_argument("--heart1", help="heart of D1 (default: standard)")
    q.add_argument("--m-max", dest="m_max", default=3)
    q.add_argument("--window", default=1)
    q = qs.add_parser("charts", help="hearts indexing the chart union")
    nsub(q)
    q.add_argument("--window", default=1)
    q.add_argument("--convention", default="both", choices=["subcategory", "ambient", "both"])
    q = qs.add_parser("dr", help="relative metric between two conditions")
    nsub(q)
    q.add_argument("--Z-a", dest="Z_a")
    q.add_argument("--heart-a", dest="heart_a")
    q.add_argument("--Z-b", dest="Z_b")
    q.add_argument("--heart-b", dest="heart_b")
    q = qs.add_parser("act", help="action of a + i b with b = log2_b * log(2)/pi")
    nsub(q)
    q.add_argument("--heart")
    q.add_argument("--charges")
    q.add_argument("--a", default="0")
    q.add_argument("--log2-b", dest="log2_b", default="0")
    return p


COMMANDS = {
    ("surface", "dhym-check"): cmd_dhym_check,
    ("surface", "bstab-check"): cmd_bstab_check,
    ("surface", "scan"): cmd_scan,
    ("surface", "find-counterexample"): cmd_find_counterexample,
    ("quiver", "hearts"): cmd_hearts,
    ("quiver", "thick"): cmd_thick,
    ("quiver", "tilt"): cmd_tilt,
    ("quiver", "hn"): cmd_hn,
    ("quiver", "glue"): cmd_glue,
    ("quiver", "relstab-check"): cmd_relstab_check,
    ("quiver", "charts"): cmd_charts,
    ("quiver", "dr"): cmd_dr,
    ("quiver", "act"): cmd_act,
}


def _apply_config(args, cfg: dict, explicit: set):
    for key, value in cfg.items():
        dest = key.replace("-", "_")
        if dest in ("command", "jobs", "output", "config"):
            continue
        if dest not in vars(args):
            raise InputError(key, "unknown field for this command")
        if dest not in explicit:
            setattr(args, dest, value)


def _explicit_dests(parser, argv) -> set:
    """Destinations given on the command line (so config values do not override them)."""
    probe = build_parser()
    for action in _all_actions(probe):
        if action.default is not argparse.SUPPRESS and action.dest != "help":
            action.default = _Missing
    ns = probe.parse_args(argv)
    return {k for k, v in vars(ns).items() if v is not _Missing}


class _Missing:
    pass


def _all_actions(parser):
    for action in parser._actions:
        yield action
        if isinstance(action, argparse._SubParsersAction):
            for sub in action.choices.values():
                yield from _all_actions(sub)


def _run_one(argv: list[str], cfg: dict | None, out) -> tuple[int, object]:
    parser = build_parser()
    args = parser.parse_args(argv)
    if cfg:
        _apply_config(args, cfg, _explicit_dests(parser, argv))
    key = (args.group, getattr(args, "command", None))
    if key not in COMMANDS:
        raise InputError("command", f"unknown command {' '.join(x for x in key if x)!r}")
    return COMMANDS[key](args, out)


def _emit(obj, out):
    json.dump(obj, out, indent=2)
    out.write("\n")


def run(argv: list[str] | None = None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = sys.stdout if out is None else out
    try:
        pre = build_parser().parse_known_args(argv)[0]
        cfg = None
        if pre.config:
            try:
                with open(pre.config) as fh:
                    cfg = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise InputError("config", str(exc)) from None
            if not isinstance(cfg, dict):
                raise InputError("config", "top level must be an object")
        target = open(pre.output, "w") if pre.output else out
        try:
            if cfg and "jobs" in cfg:
                return _run_jobs(argv, cfg, target)
            if cfg and "command" in cfg and pre.group is None:
                argv = argv + list(cfg["command"])
            code, res = _run_one(argv, cfg, target)
            if res is not None:
                _emit(res, target)
            return code
        finally:
            if target is not out:
                target.close()
    except InputError as exc:
        print(f"relstab: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _run_jobs(argv, cfg, out) -> int:
    results, worst = [], EXIT_DECIDED
    for i, job in enumerate(cfg["jobs"]):
        if not isinstance(job, dict) or "command" not in job:
            raise InputError(f"jobs[{i}].command", "each job needs a 'command' list")
        buf = io.StringIO()
        code, res = _run_one(list(job["command"]), job, buf)
        if res is None:
            res = {"csv": buf.getvalue()}
        results.append({"command": list(job["command"]), "exit": code, "result": res})
        worst = max(worst, code)
    _emit(results, out)
    return worst


def main() -> None:
    try:
        code = run()
    except BrokenPipeError:
        code = 0
    sys.exit(code)


if __name__ == "__main__":
    main()
