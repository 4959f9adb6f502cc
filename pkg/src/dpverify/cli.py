"""Command-line scenario runner.

    dpverify verify --all
    dpverify verify --type E6a1 --format markdown
    dpverify verify my_surface.json --out report.json

Exit status: 0 every claim passed, 1 some claim failed, 2 some claim was
inconclusive and none failed, 3 usage or schema error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dfield
from pathlib import Path

from . import __version__
from .polyalg import DEFAULT_BUDGET
from .scenario import file_stem, load_path, shipped_scenarios
from .scenario_io import SchemaError
from .verify import FAIL, INCONC, PASS, Options, run_claim

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


@dataclass
class VerificationReport:
    scenario: str
    source: str
    claims: list
    version: str = __version__
    summary: dict = dfield(default_factory=dict)

    def __post_init__(self):
        if not self.summary:
            self.summary = {k: sum(1 for c in self.claims if c.result == k)
                            for k in (PASS, FAIL, INCONC)}

    @property
    def status(self) -> str:
        if self.summary[FAIL]:
            return FAIL
        if self.summary[INCONC]:
            return INCONC
        return PASS

    def as_dict(self):
        return {"scenario": self.scenario, "source": self.source, "toolkit_version": self.version,
                "status": self.status, "summary": self.summary,
                "claims": [c.as_dict() for c in self.claims]}


def resolve(name: str) -> Path:
    """A shipped scenario by type id or file stem, or a path to a scenario file."""
    p = Path(name)
    if p.suffix == ".json" and p.exists():
        return p
    for f in shipped_scenarios():
        stem = f.name[:-5]
        if name in (stem, f"{stem}.json") or file_stem(name) == stem:
            return Path(str(f))
    raise SchemaError(f"unknown scenario {name!r}")


def run_scenario(path, options: Options | None = None) -> VerificationReport:
    options = options or Options()
    path = resolve(str(path)) if not Path(str(path)).exists() else Path(str(path))
    sc = load_path(path)
    results = [run_claim(sc, i, c, options) for i, c in enumerate(sc.claims)]
    return VerificationReport(sc.type_id, path.name, results)


def _run_one(args):
    path, options = args
    return run_scenario(path, options)


def run_many(paths, options: Options | None = None, jobs: int = 1) -> list:
    options = options or Options()
    work = [(p, options) for p in paths]
    if jobs <= 1 or len(work) <= 1:
        return [_run_one(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_run_one, work))


def verify_all(options: Options | None = None, jobs: int = 1) -> list:
    return run_many([Path(str(f)) for f in shipped_scenarios()], options, jobs)


def exit_status(reports) -> int:
    states = {r.status for r in reports}
    if FAIL in states:
        return EXIT_FAIL
    if INCONC in states:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ---------------------------------------------------------------- rendering

def render_json(reports, options: Options) -> str:
    doc = {"toolkit": "dpverify", "toolkit_version": __version__, "seed": options.seed,
           "reports": [r.as_dict() for r in reports]}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _short(v, limit=60):
    s = json.dumps(v, sort_keys=True)
    return s if len(s) <= limit else s[:limit - 3] + "..."


def render_markdown(reports, options: Options) -> str:
    out = [f"# dpverify {__version__} report (seed {options.seed})", ""]
    for r in reports:
        s = r.summary
        out.append(f"## {r.scenario} ({r.source}): {r.status}")
        out.append("")
        out.append(f"{s[PASS]} passed, {s[FAIL]} failed, {s[INCONC]} inconclusive")
        out.append("")
        out.append("| # | claim | inputs | expected | observed | result |")
        out.append("|---|---|---|---|---|---|")
        for c in r.claims:
            cells = [str(c.index), c.kind, _short(c.inputs), _short(c.expected),
                     _short(c.observed), c.result]
            out.append("| " + " | ".join(x.replace("|", "\\|") for x in cells) + " |")
        out.append("")
    return "\n".join(out)


# ---------------------------------------------------------------- argument parsing

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _primes(text):
    try:
        ps = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("primes must be a comma-separated list of integers")
    if not ps or any(p < 3 or p % 2 == 0 for p in ps):
        raise argparse.ArgumentTypeError("primes must be odd and at least 3")
    return ps


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="dpverify", description=__doc__.split("\n\n")[0])
    ap.add_argument("--version", action="version", version=f"dpverify {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    v = sub.add_parser("verify", help="run scenario claims and print a report")
    v.add_argument("files", nargs="*", help="scenario JSON files")
    v.add_argument("--type", action="append", default=[], metavar="ID",
                   help="shipped scenario by type id or file stem (repeatable)")
    v.add_argument("--all", action="store_true", help="every shipped scenario")
    v.add_argument("--out", type=Path, help="write the report here instead of stdout")
    v.add_argument("--primes", type=_primes, help="odd primes for torsion certificates")
    v.add_argument("--gb-budget", type=int, default=DEFAULT_BUDGET,
                   help="Groebner reduction budget before a check turns inconclusive")
    v.add_argument("--seed", type=int, default=0, help="seed for finite-field sampling")
    v.add_argument("--format", choices=("json", "markdown"), default="json")
    v.add_argument("--jobs", type=int, default=1, help="scenarios evaluated in parallel")
    v.add_argument("--timings", action="store_true",
                   help="record wall time per claim (the report is then not reproducible)")
    sub.add_parser("list", help="list the shipped scenarios")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "list":
        for f in shipped_scenarios():
            print(f.name[:-5])
        return EXIT_OK
    if not (args.files or args.type or args.all):
        ap.error("give scenario files, --type or --all")
    try:
        paths = [Path(str(f)) for f in shipped_scenarios()] if args.all else []
        paths += [resolve(t) for t in args.type]
        for f in args.files:
            if not Path(f).exists():
                raise SchemaError(f"{f}: no such file")
            paths.append(Path(f))
        opts = Options(seed=args.seed, primes=args.primes, gb_budget=args.gb_budget,
                       timings=args.timings)
        reports = run_many(paths, opts, max(1, args.jobs))
    except SchemaError as exc:
        print(f"dpverify: schema error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = (render_markdown if args.format == "markdown" else render_json)(reports, opts)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    for r in reports:
        s = r.summary
        print(f"{r.scenario}: {r.status} ({s[PASS]} pass, {s[FAIL]} fail, {s[INCONC]} inconclusive)",
              file=sys.stderr)
    return exit_status(reports)


if __name__ == "__main__":
    sys.exit(main())
