"""Command-line front end.

Every subcommand prints plain text by default or, with ``--format json``,
one JSON record per line.  Bad input exits with status 2 and a JSON error
record on stderr; a census over budget exits with status 3.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import catalog, markings, oracle
from .combinatorics import (
    ColoredPartition,
    InvalidMarking,
    MarkedPartition,
    canonical_form,
    classify_marking,
    rep,
    signature,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3

SIGNS = {0: "+", 1: "-"}


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


# -- label documents -------------------------------------------------------------------


@dataclass(frozen=True)
class LabelDocument:
    """Serializable ``(n, rows, class_color)``; rows are (length, color, mark)."""

    n: int
    rows: tuple[tuple[int, int, int], ...]
    class_color: Optional[int] = None

    @classmethod
    def from_marked(cls, mcp: MarkedPartition, class_color: Optional[int] = None) -> "LabelDocument":
        return cls(mcp.n, tuple(mcp.rows()), class_color)

    def canonical(self) -> "LabelDocument":
        m = None if self.class_color is None else rep(self.class_color, self.n)
        return LabelDocument.from_marked(MarkedPartition.from_rows(self.rows, self.n), m)

    def to_marked(self) -> MarkedPartition:
        return MarkedPartition._unsorted(self.rows, self.n)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "rows": [{"length": lam, "color": eps, "mark": mu} for lam, eps, mu in self.rows],
        }
        if self.class_color is not None:
            out["class_color"] = self.class_color
        return out

    def serialize(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def parse(cls, text) -> "LabelDocument":
        doc = json.loads(text) if isinstance(text, (str, bytes)) else text
        try:
            n = int(doc["n"])
            rows = tuple(
                (int(r["length"]), int(r["color"]), int(r.get("mark", 0))) for r in doc["rows"]
            )
            m = doc.get("class_color")
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed label document: {exc}") from exc
        return cls(n, rows, None if m is None else int(m))


def _ints(text: Optional[str], flag: str) -> Optional[list[int]]:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise InputError(f"{flag} expects comma-separated integers, got {text!r}") from exc


def _colors(text: Optional[str], n: int) -> Optional[list[int]]:
    """Colors as integers, or '+'/'-' signs when n = 2."""
    if text is None:
        return None
    parts = [t.strip() for t in text.split(",") if t.strip()]
    if n == 2 and parts and all(t in "+-" for t in parts):
        return [0 if t == "+" else 1 for t in parts]
    return _ints(text, "--epsilon")


def read_label(args) -> MarkedPartition:
    """Label from ``--label`` (a LabelDocument or file) or ``--lambda/--epsilon/--mu``."""
    if getattr(args, "label", None):
        text = args.label
        if not text.lstrip().startswith("{"):
            with open(text) as fh:
                text = fh.read()
        return LabelDocument.parse(text).to_marked()
    if args.n is None or args.lam is None:
        raise InputError("need --n and --lambda (or --label)")
    lam = _ints(args.lam, "--lambda")
    eps = _colors(args.epsilon, args.n) if args.epsilon is not None else [0] * len(lam)
    mu = _ints(args.mu, "--mu") if args.mu is not None else [0] * len(lam)
    if not (len(lam) == len(eps) == len(mu)):
        raise InputError("--lambda, --epsilon and --mu need the same number of entries")
    if any(a < b for a, b in zip(lam, lam[1:])) or any(a <= 0 for a in lam):
        raise InputError("--lambda must be a weakly decreasing list of positive integers")
    return MarkedPartition(tuple(lam), tuple(eps), tuple(mu), args.n)


# -- output helpers -----------------------------------------------------------------------


class Output:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def record(self, rec: dict, text: str) -> None:
        if self.fmt == "json":
            print(json.dumps(rec, sort_keys=True), file=self.stream)
        else:
            print(text, file=self.stream)


def _label_text(mcp: MarkedPartition) -> str:
    lam = ",".join(map(str, mcp.shape))
    eps = ",".join(map(str, mcp.colors))
    mu = ",".join(map(str, mcp.marks))
    return f"lambda=({lam}) epsilon=({eps}) mu=({mu})"


def _cp_text(cp: ColoredPartition) -> str:
    return f"lambda=({','.join(map(str, cp.shape))}) epsilon=({','.join(map(str, cp.colors))})"


def _record_dict(rec: catalog.OrbitRecord) -> dict:
    label = rec.label
    if isinstance(label, markings.OrbitClass):
        doc = LabelDocument.from_marked(label.to_marked(), rec.class_color).to_dict()
    else:
        doc = LabelDocument.from_marked(label.with_marks((0,) * label.length)).to_dict()
        doc["rows"] = [{"length": r["length"], "color": r["color"]} for r in doc["rows"]]
    doc["dim"] = rec.dim
    doc["signature"] = list(rec.ambient)
    return doc


def _record_text(rec: catalog.OrbitRecord) -> str:
    label = rec.label
    if isinstance(label, markings.OrbitClass):
        text = _label_text(label.to_marked())
        m = "-" if rec.class_color is None else str(rec.class_color)
        return f"{text} class={m} dim={rec.dim}"
    return f"{_cp_text(label)} dim={rec.dim}"


# -- rendering ---------------------------------------------------------------------------------


def render(mcp, signs: bool = False, marked: Optional[bool] = None) -> str:
    """ASCII diagram: one character per box (its color), marks aligned on a wall.

    Each row is shifted so every mark sits on the same column, drawn as
    ``|``.  A row whose mark is ``mu <= 0`` starts ``-mu`` places right of
    the wall.  Unmarked partitions are drawn flush left without a wall.
    """
    if isinstance(mcp, ColoredPartition):
        mcp = mcp.with_marks((0,) * mcp.length)
        marked = False if marked is None else marked
    marked = True if marked is None else marked
    n = mcp.n
    if signs and n != 2:
        raise InputError("--signs only applies to n = 2")

    def glyph(c: int) -> str:
        return SIGNS[c] if signs else str(c)

    lines = []
    left = max([max(mu, 0) for mu in mcp.marks], default=0)
    for lam, eps, mu in mcp.rows():
        boxes = "".join(glyph(rep(eps + lam - j, n)) for j in range(1, lam + 1))
        if not marked:
            lines.append(boxes)
            continue
        head = max(mu, 0)
        gap = max(-mu, 0)
        line = " " * (left - head) + boxes[:head] + "|" + " " * gap + boxes[head:]
        lines.append(line.rstrip())
    return "\n".join(lines)


# -- subcommands ---------------------------------------------------------------------------------


def _signature(args) -> tuple[int, ...]:
    xi = _ints(args.signature, "--signature")
    if xi is None:
        raise InputError("--signature is required")
    n = len(xi) if args.n is None else args.n
    if len(xi) != n:
        raise InputError(f"signature {xi} has {len(xi)} entries but n = {n}")
    if any(d < 0 for d in xi):
        raise InputError("signature entries must be nonnegative")
    return tuple(xi)


def cmd_enumerate(args, out: Output) -> int:
    xi = _signature(args)
    n = len(xi)
    if args.nilpotent:
        records = catalog.nilpotent_orbit_records(xi, n)
    elif args.vector_color is not None:
        records = catalog.cqb_records(xi, n, args.vector_color)
    else:
        records = catalog.enumerate_orbit_classes(xi, n)
    for rec in records:
        out.record(_record_dict(rec), _record_text(rec))
    return EXIT_OK


def cmd_dim(args, out: Output) -> int:
    mcp = read_label(args)
    cp = mcp.base
    if args.mu is None and not getattr(args, "label", None):
        dim = catalog.dim_nilpotent_orbit(cp)
        rec = {"kind": "nilpotent", "dim": dim, "signature": list(signature(cp))}
        text = f"dim={dim}"
        if args.oracle:
            _, x, _ = oracle.build_representative(cp)
            rec["oracle"] = x.space.group_dim() - oracle.commutant_dims(x)[1]
            text += f" oracle={rec['oracle']}"
    else:
        try:
            dim = catalog.dim_enhanced_orbit(mcp)
        except catalog.NotColoredBipartition as exc:
            raise InputError(str(exc)) from exc
        rec = {"kind": "enhanced", "dim": dim, "signature": list(signature(cp))}
        text = f"dim={dim}"
        if args.oracle:
            v, x, _ = oracle.build_representative(mcp)
            rec["oracle"] = oracle.orbit_dimension_oracle(v, x)
            text += f" oracle={rec['oracle']}"
    out.record(rec, text)
    return EXIT_OK


def cmd_normalize(args, out: Output) -> int:
    mcp = read_label(args)
    if args.cls is None:
        raise InputError("normalize needs --class")
    try:
        result = markings.normalize(mcp, args.cls)
    except markings.ClassMismatch as exc:
        raise InputError(str(exc)) from exc
    doc = LabelDocument.from_marked(result, rep(args.cls, mcp.n))
    out.record(doc.to_dict(), _label_text(result))
    return EXIT_OK


def cmd_classify(args, out: Output) -> int:
    if args.matrix:
        try:
            with open(args.matrix) as fh:
                text = fh.read()
            p = args.field
            v, x = oracle.pair_from_json(text, p)
            label = oracle.classify_pair(v, x)
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read matrix document: {exc}") from exc
        m = label.class_color()
        doc = LabelDocument.from_marked(label.to_marked(), m).to_dict()
        doc["dim"] = catalog.dim_enhanced_orbit(label)
        out.record(doc, f"{_label_text(label.to_marked())} dim={doc['dim']}")
        return EXIT_OK
    mcp = read_label(args)
    flags = classify_marking(mcp)
    rec = {
        "is_bipartition": flags.is_bipartition,
        "is_k_bipartition": flags.is_k_bipartition,
        "is_colored_k_bipartition": flags.is_colored_k_bipartition,
        "is_generalized_k_bipartition": flags.is_generalized_k_bipartition,
        "class_color": flags.class_color,
    }
    text = " ".join(f"{k}={v}" for k, v in rec.items())
    if flags.is_colored_k_bipartition:
        oc = markings.class_canonical(mcp)
        rec["class"] = LabelDocument.from_marked(oc.to_marked()).to_dict()
        rec["dim"] = catalog.dim_enhanced_orbit(mcp)
        text += f" dim={rec['dim']}"
    out.record(rec, text)
    return EXIT_OK


def cmd_minimal(args, out: Output) -> int:
    mcp = read_label(args)
    try:
        result = markings.minimal_marking(mcp)
    except InvalidMarking as exc:
        raise InputError(str(exc)) from exc
    split = markings.characteristic_decomposition(result)
    rec = LabelDocument.from_marked(result).to_dict()
    rec["characteristic"] = LabelDocument.from_marked(split.characteristic).to_dict()
    plain = split.plain
    rec["plain"] = {"n": plain.n, "rows": [{"length": a, "color": b} for a, b in plain.rows()]}
    out.record(rec, f"{_label_text(result)}\ncharacteristic: {_label_text(split.characteristic)}"
                    f"\nplain: {_cp_text(plain)}")
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    xi = _signature(args)
    census = oracle.brute_force_orbits(xi, len(xi), args.field)
    verdict = "MATCH" if census.match else "MISMATCH"
    rec = {
        "signature": list(xi),
        "field": args.field,
        "orbits": census.orbits,
        "classes": census.classes,
        "match": census.match,
    }
    out.record(rec, f"orbits: {census.orbits}, classes: {census.classes}, {verdict}")
    return EXIT_OK if census.match else 1


def cmd_render(args, out: Output) -> int:
    mcp = read_label(args)
    marked = args.mu is not None or bool(getattr(args, "label", None))
    text = render(canonical_form(mcp) if args.canonical else mcp, signs=args.signs, marked=marked)
    out.record({"diagram": text.split("\n")}, text)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------------------


def _label_flags(p: argparse.ArgumentParser, mu_help: str = "marks") -> None:
    p.add_argument("--n", type=int, help="number of colors")
    p.add_argument("--lambda", dest="lam", help="row lengths, e.g. 5,4,4,2")
    p.add_argument("--epsilon", help="row colors (or +,- signs when n=2)")
    p.add_argument("--mu", help=mu_help)
    p.add_argument("--label", help="label document (JSON text or a file path)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="colored-quiver", description=__doc__)
    parser.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list orbit labels of a signature with dimensions")
    p.add_argument("--n", type=int)
    p.add_argument("--signature", required=True, help="dimension vector, e.g. 2,2")
    p.add_argument("--vector-color", type=int, help="only colored bipartitions of this class")
    p.add_argument("--nilpotent", action="store_true", help="colored partitions only (no vector)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dim", help="orbit dimension from the closed formulas")
    _label_flags(p, "marks (omit for the nilpotent orbit)")
    p.add_argument("--oracle", action="store_true", help="also compute it from stabilizers")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("normalize", help="normalize a marking to a colored bipartition")
    _label_flags(p)
    p.add_argument("--class", dest="cls", type=int, help="class color m")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("classify", help="classify a marking, or a matrix pair with --matrix")
    _label_flags(p)
    p.add_argument("--matrix", help="JSON file holding blocks and a vector")
    p.add_argument("--field", type=int, default=None, help="prime modulus (default: rationals)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("minimal", help="minimal marking and characteristic split")
    _label_flags(p)
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("verify", help="brute-force orbit census over a prime field")
    p.add_argument("--n", type=int)
    p.add_argument("--signature", required=True)
    p.add_argument("--field", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="ASCII diagram of a (marked) colored partition")
    _label_flags(p)
    p.add_argument("--signs", action="store_true", help="draw colors as +/- (n=2)")
    p.add_argument("--canonical", action="store_true", help="sort rows canonically first")
    p.set_defaults(func=cmd_render)
    return parser


def _error(kind: str, message: str, **extra) -> None:
    print(json.dumps({"error": kind, "message": message, **extra}, sort_keys=True), file=sys.stderr)


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, Output(args.format, stdout))
    except oracle.BudgetExceeded as exc:
        _error("budget", str(exc), needed=exc.needed, budget=exc.budget)
        return EXIT_BUDGET
    except (InputError, InvalidMarking, ValueError, IndexError) as exc:
        _error("input", str(exc))
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
