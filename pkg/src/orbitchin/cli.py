"""Command-line front end.

Every command produces a list of records (plain dicts with a ``kind`` key).
Human mode prints a heading plus ``key: value`` lines; machine mode
(``--machine`` or ``ORBITCHIN_MACHINE=1``) prints one JSON object per line
with rationals encoded as ``{"num": p, "den": q}``.

Exit codes: 0 success, 2 usage error, 3 domain error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from . import bundles, curve, hitchin, local_model, spectral
from .curve import CoverData, CurveSignature, PicClass, QDivisor
from .errors import OrbitchinError

PROG = "orbitchin"
EXAMPLES = ("elliptic5", "p14222", "p132222")


class UsageError(Exception):
    pass


# --- encoding ----------------------------------------------------------------

def encode(value: Any) -> Any:
    """Make a record JSON-ready: Fractions become ``{"num", "den"}``."""
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, dict):
        return {k: encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return value


def decode(value: Any) -> Any:
    if isinstance(value, dict):
        if set(value) == {"num", "den"}:
            return Fraction(value["num"], value["den"])
        return {k: decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode(v) for v in value]
    return value


def dump_machine(record: dict) -> str:
    return json.dumps(encode(record), sort_keys=True, separators=(",", ":"))


def _fmt(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(_fmt(v) for v in value) + ")"
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_fmt(v)}" for k, v in value.items()) or "0"
    return str(value)


def _table(rows: list[dict]) -> list[str]:
    cols = list(rows[0])
    cells = [[_fmt(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    out = ["  " + "  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    out += ["  " + "  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return out


def render_human(record: dict) -> str:
    lines = [f"== {record['kind']}: {record.get('summary', '')}".rstrip()]
    for key, value in record.items():
        if key in ("kind", "summary"):
            continue
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"  {key}:")
            lines += ["  " + line for line in _table(value)]
        else:
            lines.append(f"  {key}: {_fmt(value)}")
    return "\n".join(lines)


# --- records -------------------------------------------------------------------

def _curve_fields(sig: CurveSignature) -> dict:
    return {"genus": sig.genus, "labels": list(sig.labels), "orders": list(sig.orders)}


def curve_record(sig: CurveSignature) -> dict:
    deg = curve.canonical_degree(sig)
    frac = " + ".join(f"{r - 1}/{r}*{l}" for l, r in sig.points)
    normal_form = f"pi^*K_X (x) O({frac})" if frac else "pi^*K_X"
    return {
        "kind": "curve",
        "summary": f"deg K = {deg}, {'hyperbolic' if deg > 0 else 'not hyperbolic'}",
        **_curve_fields(sig),
        "canonical_degree": deg,
        "hyperbolic": deg > 0,
        "K_normal_form": normal_form,
        "K_pic_coarse_degree": 2 * sig.genus - 2,
        "K_pic_indices": [r - 1 for r in sig.orders],
    }


def h0_record(sig: CurveSignature, r: int) -> dict:
    rows = [{"j": j, "deg_pushforward": spectral.pushforward_K_power(sig, j),
             "h0": spectral.h0_K_power(sig, j)} for j in range(1, r + 1)]
    return {"kind": "h0", "summary": f"sections of K^j for j = 1..{r}",
            **_curve_fields(sig), "rank": r, "rows": rows}


def classify_record(sig: CurveSignature, r: int, traceless: bool) -> dict:
    v = spectral.classify_spectral(sig, r, traceless)
    return {
        "kind": "classify",
        "summary": f"{v.outcome} (branch={v.branch}, clause={v.fired_condition or '-'})",
        **_curve_fields(sig),
        "rank": r, "traceless": traceless,
        "outcome": str(v.outcome), "branch": v.branch, "fired_condition": v.fired_condition,
        "q_r": list(v.q_r), "q_r_minus_1": list(v.q_r_minus_1),
        "sum_h_tilde_r": v.sum_h_tilde_r, "sum_h_tilde_r_minus_1": v.sum_h_tilde_r_minus_1,
        "h0": list(v.h0), "integrality_condition": v.integrality,
    }


def _dims_fields(rep: hitchin.DimensionReport) -> dict:
    return {"moduli_gl": rep.moduli_gl, "moduli_sl": rep.moduli_sl,
            "base_gl": rep.base_gl, "base_sl": rep.base_sl,
            "fiber_gl": rep.fiber_gl, "fiber_sl": rep.fiber_sl,
            "gamma0_order": rep.gamma0_order}


def dims_record(sig: CurveSignature, r: int, d: int) -> dict:
    rep = hitchin.dimension_report(sig, r, d)
    e = bundles.balanced_class(sig, r, d)
    return {"kind": "dims",
            "summary": f"dim M_GL = {rep.moduli_gl}, dim M_SL = {rep.moduli_sl}",
            **_curve_fields(sig), "rank": r, "degree": d,
            "balanced_mult": [list(row) for row in e.mult],
            **_dims_fields(rep),
            "integrable": hitchin.integrable_check(sig, r, d)}


def syz_record(sig: CurveSignature, r: int, d: int) -> dict:
    v = hitchin.syz_check(sig, r, d)
    sc = v.spectral_curve
    return {"kind": "syz",
            "summary": f"{v.outcome} (branch={v.branch}, clause={v.fired_condition or '-'})",
            **_curve_fields(sig), "rank": r, "degree": d,
            "outcome": str(v.outcome), "branch": v.branch, "fired_condition": v.fired_condition,
            "generic_weight": v.generic_weight,
            **_dims_fields(v.dims),
            "spectral_genus": sc.genus if sc else None,
            "spectral_orders": list(sc.orders) if sc else None}


def local_record(order: int, mults: Sequence[int]) -> dict:
    t = local_model.LocalType(order, tuple(mults))
    v = local_model.classify_local(t)
    return {"kind": "local",
            "summary": f"case {v.case}, conjugate {_fmt(v.conjugate)}",
            "order": order, "mults": list(t.mults), "n": t.n, "m_max": t.m_max,
            "case": v.case, "conjugate": list(v.conjugate),
            "coarse_orders": list(v.coarse_orders), "orbifold_orders": list(v.orbifold_orders)}


def bundle_record(e: bundles.BundleClass, name: str) -> dict:
    pol = bundles.default_polarization(e.curve)
    par = bundles.parabolic_data(e, pol)
    rank, d = bundles.pushforward_class(e)
    return {"kind": "bundle", "summary": name, **_curve_fields(e.curve),
            "rank": rank, "degree": e.degree, "mult": [list(row) for row in e.mult],
            "pushforward_degree": d, "euler_char": bundles.euler_char(e),
            "par_degree": par.par_degree, "par_slope": par.par_slope,
            "modified_slope": bundles.modified_slope(e, pol),
            "generic_weight": bundles.generic_weight_exists(e)}


def example_curve(name: str) -> tuple[CurveSignature, int]:
    return {
        "elliptic5": (CurveSignature.from_orders(1, [5]), 2),
        "p14222": (CurveSignature.from_orders(0, [4, 2, 2, 2]), 6),
        "p132222": (CurveSignature.from_orders(0, [3, 2, 2, 2, 2]), 3),
    }[name]


def examples_records(name: str) -> list[dict]:
    sig, r = example_curve(name)
    recs = [curve_record(sig), h0_record(sig, r), classify_record(sig, r, False),
            classify_record(sig, r, True), dims_record(sig, r, 0), syz_record(sig, r, 0)]
    if name == "p132222":
        table_mult = [(1, 1, 1), (1, 2), (2, 1), (2, 1), (2, 1)]
        e = bundles.from_pushforward(sig, 0, table_mult)
        recs.append(bundle_record(e, "rank-3 pushforward from the genus-3 spectral curve"))
    return recs


def norm_records(cover: CoverData, divisor: Optional[dict], pic: Optional[tuple]) -> list[dict]:
    recs = []
    if divisor is not None:
        a = QDivisor.of(cover.source, divisor)
        b = curve.norm_pushforward(cover, a)
        recs.append({"kind": "norm_divisor", "summary": f"{a} -> {b}",
                     "source": {k: v for k, v in a.coeffs}, "image": {k: v for k, v in b.coeffs},
                     "degree": curve.divisor_degree(b)})
    if pic is not None:
        p = PicClass(cover.source, pic[0], tuple(pic[1]))
        q = curve.norm_component(cover, p)
        recs.append({"kind": "norm_pic", "summary": f"{p} -> {q}",
                     "coarse_degree": q.coarse_degree, "source_indices": list(p.indices),
                     "indices": list(q.indices), "total_degree": q.total_degree})
    return recs


# --- argument parsing ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nat(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {v}")
    return v


def _label_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _pairs(text: str) -> list[tuple[str, str]]:
    out = []
    for item in _label_list(text):
        if "=" not in item:
            raise argparse.ArgumentTypeError(f"expected key=value pairs, got {item!r}")
        k, v = item.split("=", 1)
        out.append((k.strip(), v.strip()))
    return out


def _divisor(text: str) -> dict:
    try:
        return {k: Fraction(v) for k, v in _pairs(text)}
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational coefficient in {text!r}")


def _pic(text: str) -> tuple[int, list[int]]:
    d, _, idx = text.partition(":")
    try:
        return int(d), _int_list(idx)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected D:i1,i2,..., got {text!r}")


def read_curve_file(path: str) -> dict:
    fields: dict = {}
    with open(path, encoding="ascii") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise UsageError(f"--curve: malformed line {raw.strip()!r}")
            fields[key.strip()] = value.strip()
    return fields


def curve_from_args(args, prefix: str = "") -> CurveSignature:
    dest = prefix.replace("-", "_")
    genus = getattr(args, f"{dest}genus")
    orders = getattr(args, f"{dest}orders")
    labels = getattr(args, f"{dest}labels")
    flag = f"--{prefix}"
    path = getattr(args, f"{dest}curve", None)
    if path:
        try:
            fields = read_curve_file(path)
        except OSError as exc:
            raise UsageError(f"--curve: cannot read {path}: {exc.strerror}")
        try:
            genus = int(fields["genus"]) if "genus" in fields else genus
            orders = _int_list(fields["orders"]) if "orders" in fields else orders
        except (ValueError, argparse.ArgumentTypeError):
            raise UsageError(f"--curve: malformed genus/orders in {path}")
        if "labels" in fields:
            labels = _label_list(fields["labels"])
    if genus is None:
        raise UsageError(f"{flag}genus is required")
    try:
        return CurveSignature.from_orders(genus, orders or [], labels)
    except OrbitchinError as exc:
        bad = f"{flag}labels" if "label" in str(exc) else f"{flag}orders"
        raise UsageError(f"{bad}: {exc}")


def _add_curve(p: argparse.ArgumentParser, prefix: str = ""):
    p.add_argument(f"--{prefix}genus", type=_nat)
    p.add_argument(f"--{prefix}orders", type=_int_list, default=[])
    p.add_argument(f"--{prefix}labels", type=_label_list)
    if not prefix:
        p.add_argument("--curve", metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Invariants of Higgs bundle moduli on stacky curves.")
    parser.add_argument("--machine", action="store_true", help="emit JSON lines")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--machine", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("curve", parents=[common], help="canonical degree, hyperbolicity, K normal form")
    _add_curve(p)
    p = sub.add_parser("h0", parents=[common], help="pushforward degrees and h0 of K^j for j = 1..rank")
    _add_curve(p)
    p.add_argument("--rank", type=_nat, required=True)
    p = sub.add_parser("classify", parents=[common], help="classify a general spectral curve")
    _add_curve(p)
    p.add_argument("--rank", type=_nat, required=True)
    p.add_argument("--traceless", action="store_true")
    for name, hlp in (("dims", "moduli/base/fiber dimensions"), ("syz", "SYZ mirror check")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        _add_curve(p)
        p.add_argument("--rank", type=_nat, required=True)
        p.add_argument("--degree", type=int, default=0)
    p = sub.add_parser("local", parents=[common], help="local type at a stacky point")
    p.add_argument("--order", type=_nat, required=True)
    p.add_argument("--mults", type=_int_list, required=True)
    p = sub.add_parser("norm", parents=[common], help="transport a divisor or Picard component along a cover")
    _add_curve(p, "source-")
    _add_curve(p, "target-")
    p.add_argument("--cover-degree", type=_nat, required=True)
    p.add_argument("--match", type=_pairs, default=[], help="target=source stacky pairs")
    p.add_argument("--label-map", type=_pairs, default=[], help="source=target ordinary labels")
    p.add_argument("--divisor", type=_divisor, help="label=coef,... on the source")
    p.add_argument("--pic", type=_pic, help="D:i1,i2,... component on the source")
    p = sub.add_parser("examples", parents=[common], help="golden output for a worked example")
    p.add_argument("name", choices=EXAMPLES)
    return parser


def run(args) -> list[dict]:
    cmd = args.command
    if cmd is None:
        raise UsageError("a command is required")
    if cmd == "local":
        return [local_record(args.order, args.mults)]
    if cmd == "examples":
        return examples_records(args.name)
    if cmd == "norm":
        src = curve_from_args(args, "source-")
        tgt = curve_from_args(args, "target-")
        if args.divisor is None and args.pic is None:
            raise UsageError("one of --divisor or --pic is required")
        try:
            cover = CoverData(src, tgt, args.cover_degree, tuple(args.match), tuple(args.label_map))
        except OrbitchinError as exc:
            raise UsageError(f"--match: {exc}")
        return norm_records(cover, args.divisor, args.pic)
    sig = curve_from_args(args)
    if cmd == "curve":
        return [curve_record(sig)]
    if cmd == "h0":
        return [h0_record(sig, args.rank)]
    if cmd == "classify":
        return [classify_record(sig, args.rank, args.traceless)]
    if cmd == "dims":
        return [dims_record(sig, args.rank, args.degree)]
    if cmd == "syz":
        return [syz_record(sig, args.rank, args.degree)]
    raise UsageError(f"unknown command {cmd!r}")


def render(records: Iterable[dict], machine: bool) -> str:
    if machine:
        return "\n".join(dump_machine(r) for r in records) + "\n"
    return "\n".join(render_human(r) for r in records) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        machine = args.machine or os.environ.get("ORBITCHIN_MACHINE") == "1"
        records = run(args)
    except UsageError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except OrbitchinError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(render(records, machine))
    return 0


if __name__ == "__main__":
    sys.exit(main())
