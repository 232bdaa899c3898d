"""Command-line interface.

    srara complex info PATH
    srara witness {cycle5|cone|family|example4} [...]
    srara verify (--witness PATH | --example NAME) [...]
    srara reproduce

Exit codes: 0 certified (or success), 1 refuted / golden mismatch,
2 inconclusive, 3 input or construction error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import groebner
from .groebner import TermOrder, certify_ara, flag_characteristic, verify_up_to_radical
from .monomial import MonomialIdeal, Variable
from .polyring import FieldSpec, Polynomial
from .simplicial import (
    ComplexError,
    SimplicialComplex,
    complex_from_ideal,
    dimension,
    height,
    is_cm_one_dimensional,
    is_pure,
    minimal_primes,
    stanley_reisner_ideal,
)
from .witness import (
    ConstructionError,
    SVPartition,
    WitnessSet,
    cone_lift,
    cycle5_witness,
    example4_witness,
    family_witness,
    ideal_from_dict,
    schmitt_vogel,
)

EXIT_OK, EXIT_REFUTED, EXIT_INCONCLUSIVE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    """Bad command-line input; reported on stderr with exit code 3."""


# ---------------------------------------------------------------------------
# input helpers


def data_path(name: str):
    return resources.files("srara") / "data" / name


def _read_json(path: str) -> dict:
    """Load JSON from ``path``, falling back to the bundled data directory."""
    p = Path(path)
    if p.exists():
        text = p.read_text()
    else:
        bundled = data_path(p.name)
        if not bundled.is_file():
            raise InputError(f"{path}: no such file")
        text = bundled.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def load_complex(path: str) -> SimplicialComplex:
    """A complex from JSON holding either ``facets`` or ideal ``generators``."""
    data = _read_json(path)
    try:
        if "facets" in data:
            return SimplicialComplex.from_dict(data)
        if "generators" in data:
            ideal, variables = ideal_from_dict(data)
            return complex_from_ideal(ideal, variables)
    except (ValueError, KeyError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    raise InputError(f"{path}: expected 'facets' (a complex) or 'generators' (an ideal)")


def load_witness(path: str) -> WitnessSet:
    data = _read_json(path)
    try:
        return WitnessSet.from_dict(data)
    except (ValueError, KeyError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_ideal(path: str) -> tuple[MonomialIdeal, tuple[int, ...]]:
    data = _read_json(path)
    if "target" in data:
        data = data["target"]
    try:
        return ideal_from_dict(data)
    except (ValueError, KeyError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def parse_facet(text: str) -> list[int]:
    try:
        return [Variable.parse(v).index for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise InputError(f"--facet: {exc}") from exc


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise InputError(f"--field: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# named witnesses


def example1_witness(verify_base: bool = True) -> WitnessSet:
    cx = load_complex("c5.json")
    base = load_witness("eqq.json")
    ws, _ = cone_lift(cx, [1, 2], base, apex=0, verify_base=verify_base)
    return ws


def sv_example_witness() -> WitnessSet:
    """The three-monomial layering ``x3x6 | x3x5, x4x6``."""
    part = SVPartition([["x3*x6"], ["x3*x5", "x4*x6"]])
    return schmitt_vogel(part)


def named_witness(name: str) -> WitnessSet:
    name = name.lower()
    if name in ("example1", "cone-c5"):
        return example1_witness()
    if name in ("example2", "family6"):
        return family_witness(6)
    if name in ("example3", "family7"):
        return family_witness(7)
    if name == "example4":
        return example4_witness()[0]
    if name == "cycle5":
        return cycle5_witness()
    if name == "sv":
        return sv_example_witness()
    if name.startswith("family"):
        try:
            n = int(name[len("family"):].lstrip(":="))
        except ValueError:
            raise InputError(f"bad example name {name!r}") from None
        return family_witness(n)
    raise InputError(
        f"unknown example {name!r}; try example1..example4, cycle5, sv or familyN"
    )


# ---------------------------------------------------------------------------
# complex info


def complex_summary(cx: SimplicialComplex) -> dict:
    ideal = stanley_reisner_ideal(cx)
    d = dimension(cx)
    pure = is_pure(cx)
    cm = is_cm_one_dimensional(cx) if pure and d == 1 else None
    return {
        "vertices": [f"x{v}" for v in cx.vertices],
        "facets": [[f"x{v}" for v in f] for f in cx.sorted_facets()],
        "dimension": d,
        "height": height(cx),
        "pure": pure,
        "cohen_macaulay_1d": cm,
        "ideal": [str(g) for g in ideal.sorted_generators()],
        "zero_ideal": ideal.is_zero(),
        "minimal_primes": [str(p) for p in minimal_primes(cx)],
    }


def _complex_text(info: dict) -> str:
    lines = [
        f"vertices: {', '.join(info['vertices'])}",
        "facets: " + "  ".join("{" + ", ".join(f) + "}" for f in info["facets"]),
        f"dimension: {info['dimension']}",
        f"height: {info['height']}",
        f"pure: {'yes' if info['pure'] else 'no'}",
    ]
    if info["cohen_macaulay_1d"] is not None:
        lines.append(f"Cohen-Macaulay (connected graph): {'yes' if info['cohen_macaulay_1d'] else 'no'}")
    if info["zero_ideal"]:
        lines.append("Stanley-Reisner ideal: zero ideal (the complex is a simplex)")
    else:
        lines.append(f"Stanley-Reisner ideal ({len(info['ideal'])} generators): {', '.join(info['ideal'])}")
    lines.append(f"minimal primes ({len(info['minimal_primes'])}): {'  '.join(info['minimal_primes'])}")
    return "\n".join(lines)


def cmd_complex_info(args) -> int:
    info = complex_summary(load_complex(args.path))
    _emit(json.dumps(info, indent=2) if args.json else _complex_text(info), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# witness


def _matrix_text(name: str, rows: list[list[str]]) -> list[str]:
    width = max((len(c) for r in rows for c in r), default=1)
    return [f"{name} ="] + ["  [ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in rows]


def _witness_text(ws: WitnessSet, trace: bool) -> str:
    lines = [
        f"provenance: {ws.provenance}",
        f"target: {len(ws.target)} generators on {', '.join(f'x{v}' for v in ws.variables)}",
        f"  {', '.join(str(g) for g in ws.target.sorted_generators())}",
        f"elements ({len(ws)}):",
    ]
    lines += [f"  {e}" for e in ws.elements]
    if trace and ws.trace:
        for key, val in ws.trace.items():
            if isinstance(val, list) and val and isinstance(val[0], list):
                lines += _matrix_text(key, val)
            elif isinstance(val, list):
                lines.append(f"{key}: {', '.join(map(str, val))}")
            else:
                lines.append(f"{key}: {val}")
    return "\n".join(lines)


def cmd_witness(args) -> int:
    kind = args.kind
    if kind == "cone":
        missing = [f for f in ("complex", "facet", "base") if getattr(args, f) is None]
        if missing:
            raise InputError("witness cone needs " + ", ".join(f"--{m}" for m in missing))
        cx = load_complex(args.complex)
        base = load_witness(args.base)
        apex = Variable.parse(args.x0).index if args.x0 else None
        ws, _ = cone_lift(cx, parse_facet(args.facet), base, apex=apex, verify_base=not args.no_verify_base)
    elif kind == "family":
        if args.n is None:
            raise InputError("witness family needs --n")
        ws = family_witness(args.n)
    elif kind == "example4":
        ws = example4_witness()[0]
    else:
        ws = cycle5_witness()
    if args.json or args.output:
        text = ws.to_json(with_trace=args.trace)
        if args.output:
            _emit(text, args.output)
            if not args.json:
                print(_witness_text(ws, args.trace))
            return EXIT_OK
        print(text)
    else:
        print(_witness_text(ws, args.trace))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _report_text(report) -> str:
    lines = [report.summary()]
    lines.append(f"J in I: {'proven' if report.inclusion_forward else 'FAILS'}")
    lines.append(f"I in sqrt(J): {'proven' if report.inclusion_backward else 'not proven'}")
    for cert in report.radical:
        mark = {"member": "ok", "not_member": "NOT in radical", "cap_exceeded": "cap exceeded"}[cert["status"]]
        extra = f", k = {cert['power']}" if "power" in cert else ""
        lines.append(f"  {cert['generator']}: {mark} (slack basis {cert['slack_basis_size']}{extra})")
    lines.append(
        f"height {report.height}, {'unmixed' if report.unmixed else 'not unmixed'}, "
        f"ara in [{report.ara_lower}, {report.ara_upper}]"
    )
    if report.characteristic:
        v = report.characteristic["verdicts"]
        lines.append("verdicts by field: " + ", ".join(f"{k}: {x}" for k, x in v.items()))
    return "\n".join(lines)


def cmd_verify(args) -> int:
    if bool(args.witness) == bool(args.example):
        raise InputError("verify needs exactly one of --witness and --example")
    ws = load_witness(args.witness) if args.witness else named_witness(args.example)
    if args.ideal:
        ideal, variables = load_ideal(args.ideal)
        ws = WitnessSet(ws.elements, ideal, ws.provenance, variables)
    fld = _field(args.field)
    try:
        order = TermOrder(args.order)
    except ValueError as exc:
        raise InputError(f"--order: {exc}") from exc
    if args.cap < 1:
        raise InputError("--cap must be positive")
    kwargs = dict(order=order, explicit_powers=args.explicit_powers, cap=args.cap)
    try:
        report = verify_up_to_radical(ws, field=fld, **kwargs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.ara:
        certify_ara(ws, report)
    if not fld.is_rational:
        flag_characteristic(report, ws, **kwargs)
    if args.json or args.output:
        text = report.to_json()
        if args.output:
            _emit(text, args.output)
        if args.json:
            print(text)
        else:
            print(_report_text(report))
    else:
        print(_report_text(report))
    return report.exit_code


# ---------------------------------------------------------------------------
# reproduce


@dataclass
class Row:
    label: str
    build: str
    golden: str | None = None


ROWS = [
    Row("C5, three layered sums", "cycle5"),
    Row("Example 1: cone over C5", "example1", "example1"),
    Row("layered sums x3x6 | x3x5, x4x6", "sv"),
    Row("Example 2: I_6", "family6", "family6"),
    Row("Example 3: I_7", "family7", "family7"),
    Row("I_8", "family8", "family8"),
    Row("I_9", "family9", "family9"),
    Row("Example 4", "example4", "example4"),
]

# expected (ara, SCI) for rows without golden entries
EXPECTED = {"cycle5": (3, True), "sv": (2, True)}


def _golden() -> dict:
    return json.loads(data_path("golden.json").read_text())


def _run_row(args) -> dict:
    row, field, workers = args
    t0 = time.perf_counter()
    ws = named_witness(row.build)
    golden = _golden().get(row.golden) if row.golden else None
    problems = []
    if golden and "elements" in golden:
        want = [str(Polynomial.parse(s)) for s in golden["elements"]]
        if [str(e) for e in ws.elements] != want:
            problems.append("witness differs from the printed polynomials")
    if golden and "det_C" in golden and ws.trace and ws.trace.get("det_C") != str(Polynomial.parse(golden["det_C"])):
        problems.append("det C differs")
    if golden and "A" in golden and ws.trace and ws.trace.get("A") != golden["A"]:
        problems.append("matrix A differs")
    report = certify_ara(ws, field=field, workers=workers)
    exp_ara, exp_sci = (golden["ara"], golden.get("sci")) if golden else EXPECTED[row.build]
    if report.ara != exp_ara:
        problems.append(f"ara {report.ara} != {exp_ara}")
    if exp_sci is not None and report.sci != exp_sci:
        problems.append(f"SCI {report.sci} != {exp_sci}")
    return {
        "example": row.label,
        "provenance": ws.provenance,
        "witness_size": len(ws),
        "height": report.height,
        "ara_lower": report.ara_lower,
        "ara_upper": report.ara_upper,
        "ara": report.ara,
        "sci": report.sci,
        "verdict": report.verdict,
        "problems": problems,
        "seconds": round(time.perf_counter() - t0, 2),
    }


def reproduce(max_n: int = 9, field: FieldSpec | str | None = None, workers: int | None = None) -> list[dict]:
    rows = [r for r in ROWS if not (r.build.startswith("family") and int(r.build[6:]) > max_n)]
    nw = groebner._workers(workers)
    if nw > 1:
        with ProcessPoolExecutor(max_workers=min(nw, len(rows))) as pool:
            return list(pool.map(_run_row, [(r, field, 1) for r in rows]))
    return [_run_row((r, field, workers)) for r in rows]


def _table(results: list[dict]) -> str:
    head = ["example", "size", "ara lo", "ara hi", "ara", "SCI", "verdict", "time"]
    body = [
        [
            r["example"],
            str(r["witness_size"]),
            str(r["ara_lower"]),
            str(r["ara_upper"]),
            "-" if r["ara"] is None else str(r["ara"]),
            "-" if r["sci"] is None else ("yes" if r["sci"] else "no"),
            r["verdict"] + (" MISMATCH" if r["problems"] else ""),
            f"{r['seconds']:.2f}s",
        ]
        for r in results
    ]
    widths = [max(len(x) for x in col) for col in zip(head, *body)]

    def fmt(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    return "\n".join([fmt(head), fmt(["-" * w for w in widths])] + [fmt(b) for b in body])


def cmd_reproduce(args) -> int:
    results = reproduce(args.max_n, _field(args.field))
    if args.json:
        for r in results:
            r.pop("seconds")
        print(json.dumps(results, indent=2))
    else:
        print(_table(results))
    bad = [r for r in results if r["problems"] or r["verdict"] != "certified"]
    for r in bad:
        print(f"mismatch in {r['example']}: {'; '.join(r['problems']) or r['verdict']}", file=sys.stderr)
    return EXIT_REFUTED if bad else EXIT_OK


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors, not the "inconclusive" code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="srara", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    cp = sub.add_parser("complex", help="simplicial complex tools")
    csub = cp.add_subparsers(dest="action", required=True)
    info = csub.add_parser("info", help="dimension, height, purity, minimal primes")
    info.add_argument("path", help="complex JSON (facets) or ideal JSON (generators)")
    info.add_argument("--json", action="store_true")
    info.add_argument("-o", "--output")
    info.set_defaults(func=cmd_complex_info)

    wp = sub.add_parser("witness", help="build a witness set")
    wp.add_argument("kind", choices=["cycle5", "cone", "family", "example4"])
    wp.add_argument("--n", type=int, help="family index (n >= 6)")
    wp.add_argument("--complex", help="complex JSON for cone")
    wp.add_argument("--facet", help="facet to cone off, e.g. x1,x2")
    wp.add_argument("--base", help="base witness JSON for cone")
    wp.add_argument("--x0", help="apex variable (default x0 or the next free index)")
    wp.add_argument("--no-verify-base", action="store_true", help="skip Groebner check of the base")
    wp.add_argument("--trace", action="store_true", help="include intermediate matrices")
    wp.add_argument("--json", action="store_true")
    wp.add_argument("-o", "--output")
    wp.set_defaults(func=cmd_witness)

    vp = sub.add_parser("verify", help="certify sqrt(J) = I")
    vp.add_argument("--witness", help="witness JSON")
    vp.add_argument("--example", help="built-in witness: example1..example4, cycle5, sv, familyN")
    vp.add_argument("--ideal", help="ideal JSON overriding the witness target")
    vp.add_argument("--field", default="q", help="q or fp:<p>")
    vp.add_argument("--order", default="degrevlex", choices=["degrevlex", "lex", "deglex"])
    vp.add_argument("--cap", type=int, default=64, help="largest power tried with --explicit-powers")
    vp.add_argument("--explicit-powers", action="store_true", help="also find k with g^k in J")
    vp.add_argument("--ara", action="store_true", help="require ara bounds to agree")
    vp.add_argument("--json", action="store_true")
    vp.add_argument("-o", "--output")
    vp.set_defaults(func=cmd_verify)

    rp = sub.add_parser("reproduce", help="run every worked example end to end")
    rp.add_argument("--max-n", type=int, default=9, help="largest I_n to include (default 9)")
    rp.add_argument("--field", default="q")
    rp.add_argument("--json", action="store_true")
    rp.set_defaults(func=cmd_reproduce)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ConstructionError, ComplexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
