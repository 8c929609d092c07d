"""Command-line front end: one subcommand per checker, JSON reports.

Exit codes: 0 = run completed (verdict inside the JSON report),
2 = input or parse error, 3 = resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import BudgetExceededError
from .exponents import baker_experiment, estimate_omega, estimate_omega_x
from .groebner import DEFAULT_PAIR_BUDGET
from .parsing import ParseError, parse_poly, parse_words
from .paths import DEFAULT_COLLECTION_BUDGET, path_sum_entry, verify_lemma
from .plucker import enumerate_D
from .strongcheck import (
    DEFAULT_MAX_M,
    DEFAULT_MAX_MONOMIALS,
    check_strong,
)
from .weakcheck import Parameterization, check_weak_complex
from .words import WordSystem, build_psi, distinct_abelianizations

SCHEMA = "nonplanarity-lab/1"

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    subcommand: str
    m: int = 0
    n: int = 0
    r: int = 1
    words: str | None = None
    parameterization: str | None = None
    matrix: str | None = None
    mode: str = "omega"
    Q: int = 0
    trials: int = 0
    seed: int = 0
    q_lo: int | None = None
    max_m: int = DEFAULT_MAX_M
    max_monomials: int = DEFAULT_MAX_MONOMIALS
    max_pairs: int = DEFAULT_PAIR_BUDGET
    collection_budget: int = DEFAULT_COLLECTION_BUDGET
    max_minor_size: int | None = None
    report_dir: str | None = None
    output: str | None = None
    budgets: dict = field(default_factory=dict)


def load_parameterization(path: str | Path) -> Parameterization:
    """Load a JSON file {k, m, n, entries: [[poly strings]]}."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read parameterization file: {exc}") from exc
    for key in ("k", "m", "n", "entries"):
        if key not in data:
            raise ValueError(f"parameterization file missing field {key!r}")
    k, m, n = data["k"], data["m"], data["n"]
    entries = data["entries"]
    if not isinstance(entries, list) or len(entries) != m:
        raise ValueError("entries must be an m-row list")
    grid = []
    for row in entries:
        if not isinstance(row, list) or len(row) != n:
            raise ValueError("every entry row must have n polynomial strings")
        grid.append(tuple(parse_poly(s, k) for s in row))
    return Parameterization(k, m, n, tuple(grid))


def _parse_matrix(text: str) -> list[list[Fraction]]:
    rows = []
    for chunk in text.split(";"):
        row = [Fraction(v) for v in chunk.replace(",", " ").split()]
        if not row:
            raise ValueError("empty matrix row")
        rows.append(row)
    if len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix rows")
    return rows


def _ws_from_config(config: RunConfig) -> WordSystem:
    if not config.words:
        raise ValueError("--words is required")
    return parse_words(config.words, config.m, config.r)


def _fr(x: Fraction) -> str:
    return str(x)


# -- subcommand bodies -------------------------------------------------


def _run_strong_check(config: RunConfig) -> dict:
    ws = _ws_from_config(config)
    verdict = check_strong(
        ws, max_m=config.max_m, max_monomials=config.max_monomials
    )
    out = {
        "words": str(ws),
        "m": ws.m,
        "n": ws.n,
        "r": ws.r,
        "verdict": (
            "strongly_nonplanar"
            if verdict.is_strongly_nonplanar
            else "not_strongly_nonplanar"
        ),
        "rank": verdict.rank,
        "c": verdict.c,
        "distinct_abelianizations": distinct_abelianizations(ws),
    }
    if verdict.witness is not None:
        out["witness"] = [_fr(v) for v in verdict.witness]
        out["witness_minors"] = [
            {"I": list(d.I), "J": list(d.J)}
            for d, v in zip(enumerate_D(ws.m, ws.m * ws.n), verdict.witness)
            if v
        ]
    return out


def _run_weak_check(config: RunConfig) -> dict:
    if not config.parameterization:
        raise ValueError("--parameterization is required")
    f = load_parameterization(config.parameterization)
    verdict = check_weak_complex(f, max_pairs=config.max_pairs)
    return {
        "parameterization": config.parameterization,
        "k": f.k,
        "m": f.m,
        "n": f.n,
        "status": verdict.status.value,
        "failing_variable": verdict.failing_variable,
        "note": (
            "complex_solution_exists is inconclusive for real weak nonplanarity"
            if verdict.failing_variable
            else None
        ),
    }


def _run_lemma_verify(config: RunConfig) -> dict:
    ws = _ws_from_config(config)
    indices = enumerate_D(ws.m, ws.m * ws.n)
    if config.max_minor_size is not None:
        indices = [d for d in indices if d.size <= config.max_minor_size]
    failures = []
    for d in indices:
        if not verify_lemma(ws, d, budget=config.collection_budget):
            failures.append({"I": list(d.I), "J": list(d.J)})
    return {
        "words": str(ws),
        "m": ws.m,
        "checked": len(indices),
        "all_pass": not failures,
        "failures": failures,
    }


def _run_paths_oracle(config: RunConfig) -> dict:
    ws = _ws_from_config(config)
    psi = build_psi(ws)
    mismatches = []
    for ell in range(1, ws.n + 1):
        for i in range(1, ws.m + 1):
            for t in range(1, ws.m + 1):
                expect = psi.entries[i - 1][(ell - 1) * ws.m + t - 1]
                got = path_sum_entry(ws, i, t, ell)
                if got != expect:
                    mismatches.append({"i": i, "t": t, "word": ell})
    return {
        "words": str(ws),
        "m": ws.m,
        "entries_checked": ws.n * ws.m * ws.m,
        "all_match": not mismatches,
        "mismatches": mismatches,
    }


def _run_exponents(config: RunConfig) -> dict:
    if not config.matrix:
        raise ValueError("--matrix is required")
    a = _parse_matrix(config.matrix)
    estimators = {"omega": estimate_omega, "omega-x": estimate_omega_x}
    if config.mode not in estimators and config.mode != "both":
        raise ValueError(f"unknown mode {config.mode!r}")
    modes = list(estimators) if config.mode == "both" else [config.mode]
    out = {
        "matrix": [[str(v) for v in row] for row in a],
        "m": len(a),
        "n": len(a[0]),
        "Q": config.Q,
        "estimates": {},
    }
    for mode in modes:
        est = estimators[mode](a, config.Q, q_lo=config.q_lo)
        out["estimates"][mode] = est.as_dict()
    if config.report_dir:
        # Convergence curve at geometric checkpoints up to Q.
        checkpoints = sorted(
            {max(2, config.Q // 2**k) for k in range(6)} | {config.Q}
        )
        mode = modes[0]
        out["convergence"] = [
            {"Q": q, **estimators[mode](a, q, q_lo=config.q_lo).as_dict()}
            for q in checkpoints
        ]
    return out


def _run_baker(config: RunConfig) -> dict:
    rep = baker_experiment(config.m, config.n, config.Q, config.trials, config.seed)
    return rep.as_dict()


_RUNNERS = {
    "strong-check": _run_strong_check,
    "weak-check": _run_weak_check,
    "lemma-verify": _run_lemma_verify,
    "paths-oracle": _run_paths_oracle,
    "exponents": _run_exponents,
    "baker-experiment": _run_baker,
}


def run(config: RunConfig) -> tuple[dict, int]:
    """Execute one subcommand; returns (JSON report, exit code)."""
    started = time.perf_counter()
    report = {
        "schema": SCHEMA,
        "subcommand": config.subcommand,
        "budgets": {
            "max_m": config.max_m,
            "max_monomials": config.max_monomials,
            "max_pairs": config.max_pairs,
            "collection_budget": config.collection_budget,
        },
    }
    if config.subcommand in ("baker-experiment",):
        report["seed"] = config.seed
    try:
        result = _RUNNERS[config.subcommand](config)
        code = EXIT_OK
        report["result"] = result
    except (ParseError, ValueError) as exc:
        report["error"] = str(exc)
        code = EXIT_INPUT_ERROR
    except BudgetExceededError as exc:
        report["error"] = f"budget exceeded: {exc}"
        code = EXIT_BUDGET
    report["timings"] = {"seconds": round(time.perf_counter() - started, 6)}
    return report, code


def _emit(report: dict, config: RunConfig) -> None:
    text = json.dumps(report, indent=2, sort_keys=True)
    if config.output:
        Path(config.output).write_text(text + "\n")
    else:
        print(text)
    if config.report_dir and "result" in report:
        from . import report as reportmod

        if config.subcommand == "baker-experiment":
            reportmod.write_baker_report(report, config.report_dir)
        elif config.subcommand == "exponents":
            reportmod.write_exponent_report(report, config.report_dir)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonplanarity-lab",
        description="Exact nonplanarity checkers and Diophantine exponent estimates",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_budgets(p):
        p.add_argument("--max-m", type=int, default=DEFAULT_MAX_M)
        p.add_argument("--max-monomials", type=int, default=DEFAULT_MAX_MONOMIALS)
        p.add_argument("--max-pairs", type=int, default=DEFAULT_PAIR_BUDGET)
        p.add_argument(
            "--collection-budget", type=int, default=DEFAULT_COLLECTION_BUDGET
        )
        p.add_argument("--output", help="write the JSON report to this file")

    p = sub.add_parser("strong-check", help="decide strong nonplanarity")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--words", required=True, help='e.g. "x1; x1^2"')
    add_budgets(p)

    p = sub.add_parser("weak-check", help="complex-case weak nonplanarity")
    p.add_argument("--parameterization", required=True, help="JSON file")
    add_budgets(p)

    p = sub.add_parser("lemma-verify", help="brute-force partial-order check")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--words", required=True)
    p.add_argument("--max-minor-size", type=int, default=None)
    add_budgets(p)

    p = sub.add_parser("paths-oracle", help="path expansion vs. matrix product")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--words", required=True)
    add_budgets(p)

    p = sub.add_parser("exponents", help="irrationality exponent estimates")
    p.add_argument("--matrix", required=True, help='rows ";"-separated, e.g. "1/2"')
    p.add_argument("--Q", type=int, required=True)
    p.add_argument("--mode", choices=["omega", "omega-x", "both"], default="both")
    p.add_argument("--q-lo", type=int, default=None)
    p.add_argument("--report-dir", help="write CSV and figure here")
    add_budgets(p)

    p = sub.add_parser("baker-experiment", help="Monte-Carlo exponent experiment")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--Q", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report-dir", help="write CSV and figure here")
    add_budgets(p)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(subcommand=args.subcommand)
    for name in vars(args):
        key = name.replace("-", "_")
        if hasattr(config, key):
            setattr(config, key, getattr(args, name))
    return config


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code not in (0, None) else 0
    config = config_from_args(args)
    report, code = run(config)
    _emit(report, config)
    return code


if __name__ == "__main__":
    sys.exit(main())
