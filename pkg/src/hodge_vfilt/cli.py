"""Command-line interface: JSON in, JSON out.

Exit codes: 0 success, 1 I/O or schema error, 2 validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Callable

from . import bfunction, koszul, spectra, whci
from .exactq import Flag, QMat, Subspace, fmt_rat, rat
from .model import GradedPiece, MonodromicModel, Slope, delta_module_model, validate

PREFIX = "hodge-vfilt/v1/"
KINDS = {"model", "delta-model", "spectrum", "cyclic", "specialize", "bfunction", "whci", "order-bound", "homogeneity", "batch"}


class SchemaError(ValueError):
    def __init__(self, pointer: str, message: str):
        self.pointer = pointer or "/"
        super().__init__(f"schema error at {self.pointer}: {message}")


class ValidationFailed(Exception):
    def __init__(self, payload: dict):
        self.payload = payload
        super().__init__("validation failed")


# --- reading ---------------------------------------------------------------

def _ptr(base: str, key) -> str:
    return f"{base}/{str(key).replace('~', '~0').replace('/', '~1')}"


def field(doc: dict, key: str, ptr: str, default: Any = ..., kind=None):
    if not isinstance(doc, dict):
        raise SchemaError(ptr, "expected an object")
    if key not in doc:
        if default is ...:
            raise SchemaError(_ptr(ptr, key), "missing")
        return default
    v = doc[key]
    if kind is not None and not isinstance(v, kind) or isinstance(v, bool) and kind is int:
        raise SchemaError(_ptr(ptr, key), f"expected {getattr(kind, '__name__', kind)}")
    return v


def as_rat(v, ptr: str) -> Fraction:
    try:
        return rat(v)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise SchemaError(ptr, f"not an exact rational ({e})") from None


def as_int(v, ptr: str, minimum=None) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(ptr, "expected an integer")
    if minimum is not None and v < minimum:
        raise SchemaError(ptr, f"expected an integer >= {minimum}")
    return v


def as_int_list(v, ptr: str, minimum=None) -> list[int]:
    if not isinstance(v, list):
        raise SchemaError(ptr, "expected an array")
    return [as_int(x, _ptr(ptr, i), minimum) for i, x in enumerate(v)]


def check_schema(doc, ptr: str, kind: str) -> None:
    if not isinstance(doc, dict):
        raise SchemaError(ptr, "expected an object")
    tag = doc.get("schema")
    if tag is None:
        return
    if not isinstance(tag, str) or not tag.startswith(PREFIX) or tag[len(PREFIX):] not in KINDS:
        raise SchemaError(_ptr(ptr, "schema"), f"unknown schema {tag!r}")
    if tag[len(PREFIX):] != kind:
        raise SchemaError(_ptr(ptr, "schema"), f"expected {PREFIX}{kind}, got {tag!r}")


def read_matrix(v, rows: int, cols: int, ptr: str) -> QMat:
    if not isinstance(v, list) or len(v) != rows:
        raise SchemaError(ptr, f"expected {rows} rows")
    data = []
    for i, row in enumerate(v):
        if not isinstance(row, list) or len(row) != cols:
            raise SchemaError(_ptr(ptr, i), f"expected {cols} entries")
        data.append([as_rat(x, _ptr(_ptr(ptr, i), j)) for j, x in enumerate(row)])
    return QMat(rows, cols, data)


def read_flag(v, dim: int, ptr: str) -> Flag:
    if v is None:
        return Flag.trivial(dim, 0)
    if not isinstance(v, list):
        raise SchemaError(ptr, "expected an array of [index, basis] pairs")
    steps = {}
    for n, entry in enumerate(v):
        p = _ptr(ptr, n)
        if not isinstance(entry, list) or len(entry) != 2:
            raise SchemaError(p, "expected [index, basis]")
        k = as_int(entry[0], _ptr(p, 0))
        basis = entry[1]
        if not isinstance(basis, list):
            raise SchemaError(_ptr(p, 1), "expected a list of vectors")
        vecs = []
        for b, vec in enumerate(basis):
            if not isinstance(vec, list) or len(vec) != dim:
                raise SchemaError(_ptr(_ptr(p, 1), b), f"expected a vector of length {dim}")
            vecs.append([as_rat(x, _ptr(_ptr(_ptr(p, 1), b), j)) for j, x in enumerate(vec)])
        steps[k] = Subspace(dim, vecs)
    if not steps:
        return Flag.trivial(dim, 0)
    return Flag(dim, steps)


def read_model(doc, ptr: str = "") -> MonodromicModel:
    check_schema(doc, ptr, "model")
    slope = Slope(tuple(as_int_list(field(doc, "slope", ptr), _ptr(ptr, "slope"), 0)))
    win = field(doc, "window", ptr, kind=dict)
    wp = _ptr(ptr, "window")
    window = (as_rat(field(win, "lo", wp), _ptr(wp, "lo")), as_rat(field(win, "hi", wp), _ptr(wp, "hi")))
    if window[0] > window[1]:
        raise SchemaError(wp, "lo exceeds hi")
    pieces, dims = [], {}
    for n, pd in enumerate(field(doc, "pieces", ptr, [], list)):
        p = _ptr(_ptr(ptr, "pieces"), n)
        g = as_rat(field(pd, "grade", p), _ptr(p, "grade"))
        dim = as_int(field(pd, "dim", p), _ptr(p, "dim"), 0)
        if g in dims:
            raise SchemaError(_ptr(p, "grade"), f"duplicate grade {fmt_rat(g)}")
        dims[g] = dim
        pieces.append(GradedPiece(g, dim, read_flag(pd.get("hodge"), dim, _ptr(p, "hodge")),
                                  read_flag(pd.get("weight"), dim, _ptr(p, "weight"))))
    acts = []
    for name, sign in (("t_actions", 1), ("d_actions", -1)):
        table = {}
        for n, ad in enumerate(field(doc, name, ptr, [], list)):
            p = _ptr(_ptr(ptr, name), n)
            i = as_int(field(ad, "i", p), _ptr(p, "i"), 0)
            if i >= slope.r:
                raise SchemaError(_ptr(p, "i"), f"variable index {i} out of range")
            g = as_rat(field(ad, "grade", p), _ptr(p, "grade"))
            tgt = g + sign * slope[i]
            table[(i, g)] = read_matrix(field(ad, "matrix", p), dims.get(tgt, 0), dims.get(g, 0), _ptr(p, "matrix"))
        acts.append(table)
    return MonodromicModel(slope, window, pieces, *acts)


def read_model_input(doc, args, ptr: str = "") -> MonodromicModel:
    if isinstance(doc, dict) and doc.get("schema") == PREFIX + "delta-model":
        slope = Slope(tuple(as_int_list(field(doc, "slope", ptr), _ptr(ptr, "slope"), 1)))
        depth = args.depth if args.depth is not None else as_int(field(doc, "depth", ptr, 2), _ptr(ptr, "depth"), 0)
        m = delta_module_model(slope, depth)
    else:
        m = read_model(doc, ptr)
    if args.window:
        try:
            lo, hi = (rat(x) for x in args.window.split(":"))
        except (TypeError, ValueError, ZeroDivisionError):
            raise SchemaError("/", f"bad --window {args.window!r}, expected LO:HI") from None
        a = m.slope.coeffs
        m = MonodromicModel(m.slope, (lo, hi), [p for g, p in m.pieces.items() if lo <= g <= hi],
                            {(i, g): v for (i, g), v in m.t_actions.items() if lo <= g and g + a[i] <= hi},
                            {(i, g): v for (i, g), v in m.d_actions.items() if g <= hi and lo <= g - a[i]})
    return m


def read_spectrum(doc, ptr: str) -> spectra.JumpSpectrum:
    check_schema(doc, ptr, "spectrum")
    entries = []
    for n, j in enumerate(field(doc, "jumps", ptr, kind=list)):
        p = _ptr(_ptr(ptr, "jumps"), n)
        entries.append((as_rat(field(j, "index", p), _ptr(p, "index")), j.get("label")))
    per = doc.get("periodic_above")
    return spectra.JumpSpectrum.of(entries, None if per is None else as_rat(per, _ptr(ptr, "periodic_above")))


def read_roots(doc, ptr: str) -> bfunction.RootMultiset:
    check_schema(doc, ptr, "bfunction")
    roots = field(doc, "roots", ptr, kind=dict)
    rp = _ptr(ptr, "roots")
    return bfunction.RootMultiset({as_rat(k, _ptr(rp, k)): as_int(v, _ptr(rp, k), 1) for k, v in roots.items()})


# --- writing ---------------------------------------------------------------

def write_flag(f: Flag) -> list:
    return [[k, [[fmt_rat(x) for x in v] for v in s.basis]] for k, s in f.items()]


def write_matrix(m: QMat) -> list:
    return [[fmt_rat(x) for x in row] for row in m.data]


def write_model(m: MonodromicModel) -> dict:
    return {
        "schema": PREFIX + "model",
        "slope": list(m.slope.coeffs),
        "window": {"lo": fmt_rat(m.window[0]), "hi": fmt_rat(m.window[1])},
        "pieces": [{"grade": fmt_rat(g), "dim": p.dim, "hodge": write_flag(p.hodge), "weight": write_flag(p.weight)}
                   for g, p in m.pieces.items()],
        "t_actions": [{"i": i, "grade": fmt_rat(g), "matrix": write_matrix(mat)} for (i, g), mat in sorted(m.t_actions.items())],
        "d_actions": [{"i": i, "grade": fmt_rat(g), "matrix": write_matrix(mat)} for (i, g), mat in sorted(m.d_actions.items())],
    }


def write_roots(b: bfunction.RootMultiset) -> dict:
    return {"roots": {fmt_rat(g): m for g, m in b.roots}}


def write_spectrum(s: spectra.JumpSpectrum) -> dict:
    out = {"jumps": [{"index": fmt_rat(k), "labels": list(ls)} for k, ls in s.jumps]}
    if s.periodic_above is not None:
        out["periodic_above"] = fmt_rat(s.periodic_above)
    return out


def _pairs(d: dict) -> list:
    return [[i, k, v] for (i, k), v in sorted(d.items())]


def write_cohomology(res: koszul.CohomologyResult) -> dict:
    out = {
        "total_dims": [res.total_dims[i] for i in sorted(res.total_dims)],
        "hodge_dims": _pairs(res.hodge_dims),
        "weight_graded_dims": _pairs(res.weight_graded_dims),
        "strict": res.strict,
        "weight_strict": res.weight_strict,
        "acyclic": res.acyclic,
        "filtered_acyclic": res.filtered_acyclic,
    }
    if res.propagated_weight_graded_dims:
        out["propagated_weight_graded_dims"] = _pairs(res.propagated_weight_graded_dims)
    return out


def write_report(rep) -> dict:
    return {
        "ok": rep.ok,
        "violations": [{"rule": v.rule, "grade": fmt_rat(v.grade), "coords": [str(c) for c in v.coords]} for v in rep.violations],
        "unchecked": [{"rule": r, "grade": fmt_rat(g), "coords": [str(c) for c in cs]} for r, g, cs in rep.unchecked],
    }


# --- commands --------------------------------------------------------------

def cmd_classify(doc, args) -> dict:
    check_schema(doc, "", "whci")
    n = as_int(field(doc, "n", ""), "/n", 1)
    r = as_int(field(doc, "r", ""), "/r", 1)
    w = as_int_list(field(doc, "weights", ""), "/weights", 1)
    d = as_int_list(field(doc, "degrees", ""), "/degrees", 1)
    polys = field(doc, "polynomials", "", None, list)
    names = field(doc, "variables", "", None, list)
    try:
        inp = whci.WHCIInput.make(n, r, w, d, polys, names)
    except (whci.PolynomialSyntaxError, whci.UnknownVariable) as e:
        raise SchemaError("/polynomials", str(e)) from None
    except (whci.LengthMismatch, ValueError) as e:
        raise SchemaError("/", str(e)) from None
    try:
        rep = whci.classify(inp)
    except whci.NotHomogeneous as e:
        raise ValidationFailed({"ok": False, "error": "not weighted homogeneous",
                                "degrees": {k: v for k, v in e.degrees.items()}}) from None
    if not args.quiet:
        print("assuming: " + "; ".join(rep.hypotheses_assumed), file=sys.stderr)
    return rep.as_json()


def cmd_bfun_rescale(doc, args) -> dict:
    b = read_roots(doc, "")
    a = args.factor if args.factor is not None else as_int(field(doc, "a", ""), "/a", 1)
    return write_roots(bfunction.rescale(b, a))


def cmd_bfun_ts(docs, args) -> dict:
    parts = [read_roots(d, f"/{n}") for n, d in enumerate(docs)]
    if len(parts) < 2:
        raise SchemaError("/", "bfun-ts needs at least two inputs")
    acc = parts[0]
    try:
        for p in parts[1:]:
            acc = bfunction.thom_sebastiani(acc, p)
    except bfunction.EmptyInput as e:
        raise SchemaError("/", str(e)) from None
    return write_roots(acc)


def cmd_model_validate(doc, args) -> dict:
    rep = validate(read_model_input(doc, args))
    out = write_report(rep)
    if not rep.ok:
        raise ValidationFailed(out)
    return out


def _require_valid(m: MonodromicModel) -> None:
    rep = validate(m)
    if not rep.ok:
        raise ValidationFailed(write_report(rep))


def cmd_model_koszul(doc, args) -> dict:
    m = read_model_input(doc, args)
    _require_valid(m)
    if args.at is not None:
        lam = as_rat(args.at, "/--at")
        out = {"index": fmt_rat(lam)}
        for kind, build in (("A", koszul.build_A), ("B", koszul.build_B)):
            try:
                c = build(m, lam)
            except koszul.WindowTooSmall as e:
                out[kind] = {"window_too_small": [fmt_rat(g) for g in e.missing]}
                continue
            out[kind] = dict(write_cohomology(koszul.cohomology(c)), term_dims=c.dims)
        return out
    return {kind: {fmt_rat(l): s for l, s in koszul.acyclicity_scan(m, kind).items()} for kind in ("A", "B")}


def cmd_model_sigma(doc, args) -> dict:
    m = read_model_input(doc, args)
    _require_valid(m)
    try:
        res = koszul.sigma_shriek(m)
    except koszul.WindowTooSmall as e:
        raise ValidationFailed({"ok": False, "window_too_small": [fmt_rat(g) for g in e.missing]}) from None
    except koszul.RelativeMonodromyMissing as e:
        raise ValidationFailed({"ok": False, "no_relative_monodromy": {"grade": fmt_rat(e.grade), "k": e.failure.k, "i": e.failure.i}}) from None
    out = write_cohomology(res)
    out["weight_ladder_mismatches"] = [list(x) for x in koszul.weight_ladder_mismatches(res)]
    if args.local:
        try:
            p, ell = (int(x) for x in args.local.split(":"))
        except ValueError:
            raise SchemaError("/", f"bad --local {args.local!r}, expected P:ELL") from None
        out["local_cohomology"] = {"p": p, "ell": ell, "dim": koszul.local_cohomology_filtration(m, p, ell)}
    return out


def cmd_transform_cyclic(doc, args) -> dict:
    check_schema(doc, "", "cyclic")
    s = read_spectrum(field(doc, "spectrum", ""), "/spectrum")
    a = as_int_list(field(doc, "a", ""), "/a", 1)
    ell = as_int_list(field(doc, "ell", ""), "/ell", 0)
    try:
        g = spectra.cyclic_pullback(s, a, ell)
    except spectra.DimensionMismatch as e:
        raise SchemaError("/a", str(e)) from None
    return {"components": [dict(write_spectrum(g.components[b]), beta=list(b)) for b in sorted(g.components)]}


def cmd_transform_specialize(doc, args) -> dict:
    check_schema(doc, "", "specialize")
    lam = as_rat(field(doc, "lambda", ""), "/lambda")
    k = as_int(field(doc, "k", ""), "/k")
    L = as_int_list(field(doc, "slope", ""), "/slope", 1)
    return {"index": fmt_rat(spectra.specialization_index(lam, k, L))}


def cmd_order_bound(doc, args) -> dict:
    check_schema(doc, "", "order-bound")
    vals = [as_int_list(field(doc, key, ""), "/" + key, m) for key, m in
            (("alpha", 0), ("beta", 0), ("weights", 1), ("degrees", 1))]
    try:
        return {"bound": fmt_rat(whci.element_order_bound(*vals))}
    except whci.LengthMismatch as e:
        raise SchemaError("/", str(e)) from None


def cmd_check_homog(doc, args) -> dict:
    check_schema(doc, "", "homogeneity")
    text = field(doc, "polynomial", "", kind=str)
    names = field(doc, "variables", "", kind=list)
    w = as_int_list(field(doc, "weights", ""), "/weights", 1)
    try:
        f = whci.parse(text, names)
        return {"degree": whci.check_weighted_homogeneous(f, w), "polynomial": str(f)}
    except (whci.PolynomialSyntaxError, whci.UnknownVariable) as e:
        raise SchemaError("/polynomial", str(e)) from None
    except whci.LengthMismatch as e:
        raise SchemaError("/weights", str(e)) from None
    except whci.NotHomogeneous as e:
        raise ValidationFailed({"ok": False, "degrees": e.degrees}) from None


def selftest(seed: int, count: int) -> dict:
    """Run the model properties over a seeded population."""
    from .random_models import model_population

    failures = []
    for n, m in enumerate(model_population(seed, count)):
        if not validate(m).ok:
            failures.append([n, "invalid"])
            continue
        for kind in ("A", "B"):
            for lam, s in koszul.acyclicity_scan(m, kind).items():
                if lam > 0 and s not in ("filtered_acyclic", "skipped"):
                    failures.append([n, f"{kind} not filtered acyclic at {fmt_rat(lam)}"])
        res = koszul.sigma_shriek(m)
        if not res.strict:
            failures.append([n, "restriction not strict"])
        if not koszul.restriction_agrees(m):
            failures.append([n, "A0 and B0 differ"])
        if koszul.weight_ladder_mismatches(res):
            failures.append([n, "weight ladder"])
    return {"seed": seed, "models": count, "failures": failures, "ok": not failures}


COMMANDS: dict[str, Callable] = {
    "classify": cmd_classify,
    "bfun-rescale": cmd_bfun_rescale,
    "model-validate": cmd_model_validate,
    "model-koszul": cmd_model_koszul,
    "model-sigma": cmd_model_sigma,
    "transform-cyclic": cmd_transform_cyclic,
    "transform-specialize": cmd_transform_specialize,
    "order-bound": cmd_order_bound,
    "check-homog": cmd_check_homog,
}


def _load(path: str):
    def no_float(text):
        raise ValueError(f"floating point number {text} not allowed, use a \"p/q\" string")

    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        raise SchemaError("/", f"cannot read {path}: {e.strerror}") from None
    try:
        return json.loads(text, parse_float=no_float)
    except ValueError as e:
        raise SchemaError("/", f"invalid JSON in {path}: {e}") from None


def _run_one(command: str, doc, args) -> tuple[int, dict]:
    try:
        return 0, COMMANDS[command](doc, args)
    except ValidationFailed as e:
        return 2, e.payload
    except SchemaError as e:
        return 1, {"error": str(e), "pointer": e.pointer}


def _batch_entry(payload):
    command, doc, ns = payload
    return _run_one(command, doc, argparse.Namespace(**ns))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render_table(obj, prefix: str = "") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            lines.extend(render_table(obj[k], f"{prefix}.{k}" if prefix else str(k)))
        return lines
    if isinstance(obj, list) and obj and all(isinstance(x, (dict, list)) for x in obj):
        lines = []
        for n, x in enumerate(obj):
            lines.extend(render_table(x, f"{prefix}[{n}]"))
        return lines
    value = json.dumps(obj, sort_keys=True, separators=(",", ":")) if not isinstance(obj, str) else obj
    return [f"{prefix}\t{value}"]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hodge-vfilt", description="Exact invariants of generalized V-filtrations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, multi=False):
        if multi:
            p.add_argument("--input", action="append", required=True, help="JSON file, or - for stdin (repeatable)")
        else:
            p.add_argument("--input", default="-", help="JSON file, or - for stdin")
        p.add_argument("--output", default="-", help="output file (default stdout)")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for batch documents")
        p.add_argument("--quiet", action="store_true", help="suppress notes on stderr")
        return p

    common(sub.add_parser("classify", help="k-Du Bois / k-rational classification"))
    common(sub.add_parser("bfun-rescale", help="multiply b-function roots by a")).add_argument("--factor", type=int)
    common(sub.add_parser("bfun-ts", help="Thom-Sebastiani combination of root multisets"), multi=True)
    for name in ("model-validate", "model-koszul", "model-sigma"):
        p = common(sub.add_parser(name))
        p.add_argument("--window", help="restrict to LO:HI")
        p.add_argument("--depth", type=int, help="depth for delta-model documents")
        if name == "model-koszul":
            p.add_argument("--at", help="a single index lambda instead of a scan")
        if name == "model-sigma":
            p.add_argument("--local", help="also evaluate the local cohomology filtration at P:ELL")
    common(sub.add_parser("transform-cyclic"))
    common(sub.add_parser("transform-specialize"))
    common(sub.add_parser("order-bound"))
    common(sub.add_parser("check-homog"))
    st = sub.add_parser("selftest", help="randomized model properties")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--count", type=int, default=120)
    st.add_argument("--output", default="-")
    st.add_argument("--format", choices=("json", "table"), default="json")
    return ap


def _namespace_dict(args) -> dict:
    return {k: v for k, v in vars(args).items() if k != "input"}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for attr, default in (("factor", None), ("window", None), ("depth", None), ("at", None), ("local", None), ("quiet", False)):
        if not hasattr(args, attr):
            setattr(args, attr, default)
    code = 0
    try:
        if args.command == "selftest":
            result = selftest(args.seed, args.count)
            code = 0 if result["ok"] else 2
        elif args.command == "bfun-ts":
            docs = [_load(p) for p in args.input]
            code, result = _run_one_multi(docs, args)
        else:
            doc = _load(args.input)
            if isinstance(doc, dict) and doc.get("schema") == PREFIX + "batch":
                code, result = _run_batch(args.command, doc, args)
            else:
                code, result = _run_one(args.command, doc, args)
    except SchemaError as e:
        code, result = 1, {"error": str(e), "pointer": e.pointer}
    if code == 1 and "error" in result:
        print(result["error"], file=sys.stderr)
    text = dumps(result) if args.format == "json" else "\n".join(render_table(result))
    try:
        if args.output == "-":
            sys.stdout.write(text + "\n")
        else:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    except OSError as e:
        print(f"cannot write {args.output}: {e.strerror}", file=sys.stderr)
        return 1
    return code


def _run_one_multi(docs, args) -> tuple[int, dict]:
    try:
        return 0, cmd_bfun_ts(docs, args)
    except SchemaError as e:
        return 1, {"error": str(e), "pointer": e.pointer}


def _run_batch(command: str, doc: dict, args) -> tuple[int, dict]:
    jobs = field(doc, "jobs", "", kind=list)
    ns = _namespace_dict(args)
    ns["quiet"] = True
    payloads = [(command, j, ns) for j in jobs]
    if args.jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            outcomes = list(ex.map(_batch_entry, payloads))
    else:
        outcomes = [_batch_entry(p) for p in payloads]
    results = []
    for n, (code, res) in enumerate(outcomes):
        if code == 1 and "pointer" in res:
            inner = res["pointer"] if res["pointer"] != "/" else ""
            where = f"/jobs/{n}{inner}"
            res = {"error": res["error"].replace(f"at {res['pointer']}:", f"at {where}:", 1), "pointer": where}
        results.append({"exit": code, "result": res})
    return max((c for c, _ in outcomes), default=0), {"results": results}


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
