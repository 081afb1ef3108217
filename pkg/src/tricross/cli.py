"""Command-line front end.

Subcommands: ``invariants``, ``enumerate``, ``classify``, ``report``,
``tikz``.  Artifacts are JSON-lines files with a ``type`` field per record so
a later ``report`` can be regenerated from persisted runs alone.

Exit codes: 0 success, 1 error, 2 conjecture violation found, 3 budget
exhausted with partial artifacts (a resume token is written).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, TextIO

from .enumeration import (
    Budget,
    BudgetExceeded,
    ClassifyRun,
    KnotClass,
    classify,
    count_table,
    enumerate_projections,
)
from .homfly import BudgetError, homfly
from .laurent import IntLaurent, breadth, is_monic
from .maps import DiagramError, TripleDiagram
from .spd import parse_spd, serialize_spd
from .tables import conjecture_report, emit_table, emit_tikz, identify, load_reference
from .tangle import convert_to_double

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
EXIT_PARTIAL = 3


@dataclass
class RunConfig:
    command: str
    n: int = 4
    budget_secs: Optional[float] = None
    max_nodes: Optional[int] = None
    threads: int = 1
    fold_mirror: bool = True
    fmt: str = "json"
    out: Optional[str] = None
    resume: Optional[str] = None

    def validate(self) -> None:
        if not 1 <= self.n <= 6:
            raise DiagramError(f"--n must be within 1..6, got {self.n}")
        if self.budget_secs is not None and self.budget_secs <= 0:
            raise DiagramError("--budget-secs must be positive")
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise DiagramError("--max-nodes must be positive")
        if self.threads < 1:
            raise DiagramError("--threads must be at least 1")

    def budget(self) -> Optional[Budget]:
        if self.budget_secs is None and self.max_nodes is None:
            return None
        return Budget(wall_secs=self.budget_secs, max_nodes=self.max_nodes)


def _open_out(path: Optional[str]) -> TextIO:
    if path in (None, "-"):
        return sys.stdout
    return open(path, "w")


def _emit(out: TextIO, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")
    if out is not sys.stdout:
        out.close()


def _error(message: str) -> int:
    print(json.dumps({"error": message}), file=sys.stderr)
    return EXIT_ERROR


def cmd_invariants(cfg: RunConfig, spd_file: str) -> int:
    with open(spd_file) as f:
        text = f.read()
    obj = parse_spd(text)
    if not isinstance(obj, TripleDiagram):
        return _error("input is a bare projection; invariants need heights")
    from .jones import jones_triple

    from .alexander import alexander

    v = jones_triple(obj)
    dd = convert_to_double(obj)
    a = IntLaurent.from_int_coeffs({0: 1}) if dd.n == 0 else alexander(dd)
    record = {
        "jones": str(v),
        "alexander": str(a),
        "breadth": breadth(a),
        "monic": is_monic(a),
    }
    try:
        record["homfly"] = str(homfly(dd)) if dd.n else "1*a^0*z^0"
    except BudgetError:
        record["homfly"] = None
    _emit(_open_out(cfg.out), json.dumps(record))
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    resume_token = None
    if cfg.resume:
        with open(cfg.resume) as f:
            resume_token = f.read().strip() or None
    try:
        projections = enumerate_projections(
            cfg.n, cfg.fold_mirror, cfg.budget(), resume_token
        )
    except BudgetExceeded as exc:
        out = _open_out(cfg.out)
        lines = [
            json.dumps({"type": "projection", "n": cfg.n, "partial": True,
                        "spd": serialize_spd(__projection(code, cfg.n))})
            for code in exc.partial
        ]
        lines.append(json.dumps({"type": "resume", "n": cfg.n,
                                 "token": exc.resume_token}))
        _emit(out, "\n".join(lines))
        if cfg.resume:
            with open(cfg.resume, "w") as f:
                f.write(exc.resume_token)
        return EXIT_PARTIAL
    out = _open_out(cfg.out)
    lines = [
        json.dumps({"type": "projection", "n": cfg.n, "spd": serialize_spd(p)})
        for p in projections
    ]
    lines.append(json.dumps({"type": "count", "n": cfg.n,
                             "projections": len(projections)}))
    _emit(out, "\n".join(lines) if lines else "")
    return EXIT_OK


def __projection(code, n):
    from .maps import TripleProjection

    return TripleProjection(list(code), n)


def cmd_classify(cfg: RunConfig) -> int:
    try:
        run = classify(cfg.n, cfg.fold_mirror, cfg.budget(), threads=cfg.threads)
    except BudgetExceeded as exc:
        out = _open_out(cfg.out)
        _emit(out, json.dumps({"type": "resume", "n": cfg.n,
                               "token": exc.resume_token}))
        return EXIT_PARTIAL
    _emit(_open_out(cfg.out), "\n".join(_run_records(run)))
    return EXIT_OK


def _run_records(run: ClassifyRun) -> List[str]:
    lines = []
    for n, projections, knots in count_table(run):
        lines.append(json.dumps({"type": "row", "n": n,
                                 "projections": projections, "knots": knots}))
    for kc in sorted(run.classes.values(), key=lambda k: (k.c3, k.jones_folded)):
        lines.append(json.dumps({
            "type": "class",
            "c3": kc.c3,
            "jones": kc.jones_folded,
            "alexander": kc.alexander,
            "homfly": kc.homfly_folded,
            "witness": kc.witness_spd,
            "composite": kc.composite,
        }))
    return lines


def _read_run(path: str) -> tuple[List[dict], List[KnotClass]]:
    rows: List[dict] = []
    classes: List[KnotClass] = []
    with open(path) as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if rec.get("type") == "row":
                rows.append(rec)
            elif rec.get("type") == "class":
                classes.append(KnotClass(
                    jones_folded=rec["jones"],
                    alexander=rec["alexander"],
                    c3=rec["c3"],
                    witness_spd=rec["witness"],
                    homfly_folded=rec.get("homfly"),
                    composite=rec.get("composite", False),
                ))
    return rows, classes


def cmd_report(cfg: RunConfig, run_file: Optional[str]) -> int:
    refs = load_reference()
    if run_file is None:
        _emit(_open_out(cfg.out), json.dumps({"rows": [], "classes": []}))
        return EXIT_OK
    rows, classes = _read_run(run_file)
    for kc in classes:
        kc.name = identify(kc.fingerprint, refs)
    report = conjecture_report(classes, refs)
    if cfg.fmt == "json":
        payload = {
            "rows": [
                {"n": r["n"], "projections": r["projections"], "knots": r["knots"]}
                for r in sorted(rows, key=lambda r: r["n"])
            ],
            "conjecture": json.loads(report.to_json()),
        }
        _emit(_open_out(cfg.out), json.dumps(payload))
    else:
        _emit(_open_out(cfg.out), emit_table(classes, refs, cfg.fmt))
    return EXIT_VIOLATION if report.violated else EXIT_OK


def cmd_tikz(cfg: RunConfig, spd_file: str) -> int:
    with open(spd_file) as f:
        obj = parse_spd(f.read())
    if not isinstance(obj, TripleDiagram):
        return _error("tikz needs a diagram (heights), not a bare projection")
    _emit(_open_out(cfg.out), emit_tikz(obj))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricross",
        description="Triple-crossing knot diagrams: invariants, enumeration, "
        "classification, and reporting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", dest="fmt", default="json",
                       choices=["json", "csv", "latex"])
        p.add_argument("--threads", type=int, default=1)

    p_inv = sub.add_parser("invariants", help="invariants of one sPD diagram")
    p_inv.add_argument("spd_file")
    common(p_inv)

    p_enum = sub.add_parser("enumerate", help="enumerate projections")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--budget-secs", type=float, default=None)
    p_enum.add_argument("--max-nodes", type=int, default=None)
    p_enum.add_argument("--fold-mirror", dest="fold_mirror",
                        action=argparse.BooleanOptionalAction, default=True)
    p_enum.add_argument("--resume", default=None,
                        help="token file; read to resume, rewritten on budget stop")
    common(p_enum)

    p_cls = sub.add_parser("classify", help="classify knots for n=2..N")
    p_cls.add_argument("--n", type=int, required=True)
    p_cls.add_argument("--budget-secs", type=float, default=None)
    p_cls.add_argument("--max-nodes", type=int, default=None)
    p_cls.add_argument("--fold-mirror", dest="fold_mirror",
                       action=argparse.BooleanOptionalAction, default=True)
    common(p_cls)

    p_rep = sub.add_parser("report", help="count table and conjecture report")
    p_rep.add_argument("run_file", nargs="?", default=None,
                       help="JSONL artifact from classify")
    common(p_rep)

    p_tikz = sub.add_parser("tikz", help="TikZ picture of one sPD diagram")
    p_tikz.add_argument("spd_file")
    common(p_tikz)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        n=getattr(args, "n", 4),
        budget_secs=getattr(args, "budget_secs", None),
        max_nodes=getattr(args, "max_nodes", None),
        threads=args.threads,
        fold_mirror=getattr(args, "fold_mirror", True),
        fmt=args.fmt,
        out=args.out,
        resume=getattr(args, "resume", None),
    )
    try:
        cfg.validate()
        if args.command == "invariants":
            return cmd_invariants(cfg, args.spd_file)
        if args.command == "enumerate":
            return cmd_enumerate(cfg)
        if args.command == "classify":
            return cmd_classify(cfg)
        if args.command == "report":
            return cmd_report(cfg, args.run_file)
        if args.command == "tikz":
            return cmd_tikz(cfg, args.spd_file)
        raise DiagramError(f"unknown command {args.command!r}")
    except (DiagramError, OSError, json.JSONDecodeError) as exc:
        return _error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
