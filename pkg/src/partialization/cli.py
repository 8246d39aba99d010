"""Command-line front end: enumerate, verify and export."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

from .category import CategoryError
from .constructions import CONSTRUCTION_HELP, RunConfig, build_monoid, predicted_size
from .semigroup import DEFAULT_CAP, FiniteSemigroup, analyze
from .sets import CATEGORIES
from .suites import SUITES, run_suite


@dataclass
class ExportBundle:
    elements: list
    table: list
    idempotents: list
    green: dict
    verdicts: dict

    @classmethod
    def from_monoid(cls, S: FiniteSemigroup) -> "ExportBundle":
        report = analyze(S)
        return cls(
            elements=list(S.names),
            table=S.table.tolist(),
            idempotents=list(report.idempotents),
            green=S.green().as_dict(),
            verdicts=report.verdicts(),
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ExportBundle":
        return cls(**json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.elements)
        w.writerows(self.table)
        return buf.getvalue()

    @staticmethod
    def table_from_csv(text: str) -> tuple[list, list]:
        rows = list(csv.reader(io.StringIO(text)))
        return rows[0], [[int(v) for v in r] for r in rows[1:]]


def config_from_args(args) -> RunConfig:
    return RunConfig(args.category, args.construction, args.object_size, args.format, args.cap)


def cmd_enumerate(cfg: RunConfig) -> ExportBundle:
    return ExportBundle.from_monoid(build_monoid(cfg))


def cmd_export(cfg: RunConfig, path: str) -> ExportBundle:
    bundle = cmd_enumerate(cfg)
    text = bundle.to_json() if cfg.fmt == "json" else bundle.to_csv()
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return bundle


def _size_line(cfg: RunConfig, size: int) -> tuple[str, bool]:
    pred = predicted_size(cfg)
    head = f"{cfg.category} {cfg.construction} n={cfg.n}: {size} elements"
    if pred is None:
        return head + " (no closed form)", True
    ok = pred == size
    return head + f" (closed form {pred}{'' if ok else ', MISMATCH'})", ok


def _run_enumerate(args) -> int:
    cfg = config_from_args(args)
    bundle = cmd_enumerate(cfg)
    line, ok = _size_line(cfg, len(bundle.elements))
    print(line)
    print(f"idempotents: {len(bundle.idempotents)}")
    for name, val in bundle.verdicts.items():
        print(f"{name}: {'yes' if val else 'no'}")
    if args.list:
        for i, e in enumerate(bundle.elements):
            print(f"{i}\t{e}")
    if args.out:
        text = bundle.to_json() if cfg.fmt == "json" else bundle.to_csv()
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return 0 if ok else 1


def _run_export(args) -> int:
    cfg = config_from_args(args)
    if not args.out:
        bundle = cmd_enumerate(cfg)
        sys.stdout.write(bundle.to_json() if cfg.fmt == "json" else bundle.to_csv())
        return 0
    bundle = cmd_export(cfg, args.out)
    line, ok = _size_line(cfg, len(bundle.elements))
    print(line)
    print(f"wrote {args.out}")
    return 0 if ok else 1


def _run_verify(args) -> int:
    checks = run_suite(args.suite, args.max_n, args.max_k)
    for c in checks:
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"{args.suite}: {len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partialization",
        description="Enumerate and analyze endomorphism monoids of partialized categories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def monoid_flags(p):
        p.add_argument("--category", required=True, choices=sorted(CATEGORIES))
        p.add_argument("--construction", default="P", help=CONSTRUCTION_HELP)
        p.add_argument("--object-size", type=int, default=2, help="size n of the object {1..n}")
        p.add_argument("--format", default="json", choices=["json", "cayley-csv"])
        p.add_argument("--out", help="output file")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum monoid size")

    p = sub.add_parser("enumerate", help="enumerate an endomorphism monoid")
    monoid_flags(p)
    p.add_argument("--list", action="store_true", help="print every element")
    p.set_defaults(run=_run_enumerate)

    p = sub.add_parser("export", help="write the Cayley table and analysis")
    monoid_flags(p)
    p.set_defaults(run=_run_export)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-k", type=int)
    p.set_defaults(run=_run_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (CategoryError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
