# cli/commands.py
from __future__ import annotations

import argparse
import logging
import sys
from itertools import product
from random import Random
from typing import Any, Callable, Dict, List, Tuple

from charclass.chern import chern_total_closed, chern_total_punctured, euler_char_closed, restrict_punctured
from charclass.classes import pontrjagin, w2_form
from classifier.service import classify, report, skew_rank
from cli.render import render, report_row
from cli.schemas import IntRange, OutputFormat, RunConfig
from config import Settings
from errors import InvariantViolation, SymprodError
from exterior.algebra import ExtAlgebra, random_element
from models import SpaceSpec, Verdict
from skeleton.cellular import homology, torus_cw, truncate
from tensor_oracle.projector import (
    check_work,
    euler_series_coefficient,
    invariant_dim,
    macdonald_betti,
    macdonald_span_dim,
)
from tensor_oracle.tensor import TensorPower, eta, eval_top

logger = logging.getLogger("symprod.cli")


def _emit(config: RunConfig, text: str) -> None:
    if config.out is not None:
        config.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _first_spec(config: RunConfig) -> SpaceSpec:
    return SpaceSpec(g=config.g.lo, k=config.k.lo, n=config.n.lo, N=config.N.lo)


# ----------------- commands ----------------- #

def cmd_report(config: RunConfig) -> int:
    result = report(_first_spec(config))
    _emit(config, render(result.model_dump(mode="json"), [report_row(result)], config.format))
    return 0


def cmd_classify(config: RunConfig) -> int:
    a = _first_spec(config)
    b = SpaceSpec(g=config.g2, k=config.k2, n=config.n2, N=config.N2 or 0)
    result = classify(a, b)
    row = {
        "a": a.label(),
        "b": b.label(),
        "verdict": result.verdict.value,
        "witness": result.witness,
        "previously_known": result.previously_known,
    }
    _emit(config, render(result.model_dump(mode="json"), [row], config.format))
    return 0


def cmd_table(config: RunConfig) -> int:
    payload: List[Dict[str, Any]] = []
    rows: List[Dict[str, Any]] = []
    for g, k, n, N in product(config.g.values(), config.k.values(), config.n.values(), config.N.values()):
        result = report(SpaceSpec(g=g, k=k, n=n, N=N))
        data, row = result.model_dump(mode="json"), report_row(result)
        if config.oracle:
            check_work(g, n, config.max_work)
            euler = euler_char_closed(g, n)
            if euler != euler_series_coefficient(g, n):
                raise InvariantViolation(f"closed Euler characteristic {euler} disagrees with the series for g={g}, n={n}")
            data["closed_euler"] = row["closed_euler"] = euler
        payload.append(data)
        rows.append(row)
    _emit(config, render(payload, rows, config.format))
    return 0


def cmd_oracle_check(config: RunConfig) -> int:
    g, n = config.g.lo, config.n.lo
    check_work(g, n, config.max_work)
    series = macdonald_betti(g, n)
    rows = []
    for q in range(2 * n + 1):
        span = macdonald_span_dim(g, n, q)
        invariant = invariant_dim(g, n, q)
        rows.append(
            {
                "q": q,
                "macdonald_span": span,
                "invariant_dim": invariant,
                "generating_function": series[q],
                "match": span == invariant == series[q],
            }
        )
    _emit(config, render({"g": g, "n": n, "degrees": rows}, rows, config.format))
    if not all(r["match"] for r in rows):
        logger.error("oracle mismatch for g=%s n=%s", g, n)
        return 1
    return 0


# ----------------- selftest ----------------- #

Check = Callable[[RunConfig], Tuple[bool, str]]


def _genus_detection(config: RunConfig) -> Tuple[bool, str]:
    bad = [
        (g, k, n)
        for g, k, n in product(range(5), range(1, 5), range(2, 6))
        if skew_rank(w2_form(g, k, n)) != 2 * g
    ]
    return not bad, f"failures: {bad}" if bad else "80 cases"


def _pontrjagin_vanishing(config: RunConfig) -> Tuple[bool, str]:
    bad = [
        (g, k, n)
        for g, k, n in product(range(5), range(1, 5), range(2, 6))
        if not all(p.is_zero() for p in pontrjagin(chern_total_punctured(g, k, n)))
    ]
    return not bad, f"failures: {bad}" if bad else "80 cases"


def _restriction(config: RunConfig) -> Tuple[bool, str]:
    bad = [
        (g, k, n)
        for g, k, n in product(range(4), range(1, 4), range(2, 5))
        if restrict_punctured(chern_total_closed(g, n).total, g, k, n) != chern_total_punctured(g, k, n).total
    ]
    return not bad, f"failures: {bad}" if bad else "36 cases"


def _projective_anchor(config: RunConfig) -> Tuple[bool, str]:
    bad = []
    for n in range(2, 6):
        power = TensorPower(g=0, n=n)
        if eval_top(eta(power) ** n) != 1 or euler_char_closed(0, n) != n + 1:
            bad.append(n)
    return not bad, f"failures at n={bad}" if bad else "n = 2..5"


def _euler(config: RunConfig) -> Tuple[bool, str]:
    bad = [
        (g, n)
        for g, n in product(range(4), range(2, 5))
        if euler_char_closed(g, n) != euler_series_coefficient(g, n)
    ]
    return not bad, f"failures: {bad}" if bad else "12 cases"


def _skeleton(config: RunConfig) -> Tuple[bool, str]:
    bad = []
    for s in range(1, 9):
        for n in range(1, s + 1):
            summary = homology(truncate(torus_cw(s), n))
            algebra = ExtAlgebra(s=s, cut=n)
            if not summary.is_torsion_free or summary.betti != [algebra.dim(q) for q in range(n + 1)]:
                bad.append((s, n))
    return not bad, f"failures: {bad}" if bad else "s <= 8"


ORACLE_CASES = ((1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2))


def _oracle(config: RunConfig) -> Tuple[bool, str]:
    bad = []
    for g, n in ORACLE_CASES:
        check_work(g, n, config.max_work)
        series = macdonald_betti(g, n)
        for q in range(2 * n + 1):
            if not macdonald_span_dim(g, n, q) == invariant_dim(g, n, q) == series[q]:
                bad.append((g, n, q))
    return not bad, f"failures: {bad}" if bad else " ".join(f"({g},{n})" for g, n in ORACLE_CASES)


def _exterior_properties(config: RunConfig) -> Tuple[bool, str]:
    rng = Random(config.seed)
    algebra = ExtAlgebra(s=5, cut=3)
    for _ in range(200):
        p, q = rng.randint(0, 3), rng.randint(0, 3)
        a = random_element(algebra, rng, degree=p)
        b = random_element(algebra, rng, degree=q)
        c = random_element(algebra, rng)
        if a * b != b * a * (-1) ** (p * q):
            return False, f"anticommutativity fails for {a!r}, {b!r}"
        if (a * b) * c != a * (b * c):
            return False, f"associativity fails for {a!r}, {b!r}, {c!r}"
        if (a * b).reduce_mod2() != a.reduce_mod2() * b.reduce_mod2():
            return False, f"reduction mod 2 is not multiplicative on {a!r}, {b!r}"
    return True, f"200 random triples, seed {config.seed}"


def _verdicts(config: RunConfig) -> Tuple[bool, str]:
    specs = [
        SpaceSpec(g=g, k=k, n=n) for n in (2, 3, 4) for g in range(4) for k in range(1, 9) if 2 * g + k - 1 <= 7
    ]
    for a, b in product(specs, repeat=2):
        if a.n != b.n or a == b:
            continue
        expected = (
            Verdict.NOT_HOMOTOPY_EQUIVALENT if a.s != b.s else Verdict.HOMOTOPY_EQUIVALENT_NOT_HOMEOMORPHIC
        )
        result = classify(a, b)
        if result.verdict is not expected:
            return False, f"{a.label()} vs {b.label()}"
        if a.s == b.s and not result.witness.startswith("w2_rank"):
            return False, f"{a.label()} vs {b.label()}: witness {result.witness}"
    return True, f"{len(specs)} specs, n = 2..4"


SELFTEST_CHECKS: Dict[str, Check] = {
    "genus_detection": _genus_detection,
    "pontrjagin_vanishing": _pontrjagin_vanishing,
    "restriction_consistency": _restriction,
    "projective_anchor": _projective_anchor,
    "euler_cross_check": _euler,
    "skeleton_agreement": _skeleton,
    "oracle_equivalence": _oracle,
    "exterior_properties": _exterior_properties,
    "classification_verdicts": _verdicts,
}


def cmd_selftest(config: RunConfig) -> int:
    rows = []
    for name, check in SELFTEST_CHECKS.items():
        try:
            passed, detail = check(config)
        except (SymprodError, ValueError) as exc:
            logger.exception("selftest check %s raised", name)
            passed, detail = False, str(exc)
        rows.append({"check": name, "passed": passed, "detail": detail})
    _emit(config, render({"seed": config.seed, "checks": rows}, rows, config.format))
    return 0 if all(r["passed"] for r in rows) else 1


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "report": cmd_report,
    "classify": cmd_classify,
    "table": cmd_table,
    "oracle-check": cmd_oracle_check,
    "selftest": cmd_selftest,
}


# ----------------- argument parsing ----------------- #

def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value)
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    common.add_argument("--seed", type=int, default=settings.seed)
    common.add_argument("--max-work", type=int, default=settings.max_work, help="oracle cap on n!*(2g+2)^n")

    parser = argparse.ArgumentParser(
        prog="symprod",
        description="Invariants of symmetric products of punctured Riemann surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        for flag, default in (("g", "0"), ("k", "1"), ("n", "2"), ("N", "0")):
            p.add_argument(f"--{flag}", type=IntRange.parse, default=IntRange.parse(default), dest=flag)
        return p

    add("report", "invariant report of one Sym^n M_{g,k} x R^N")
    classify_parser = add("classify", "compare two specs")
    for flag in ("g2", "k2", "n2", "N2"):
        classify_parser.add_argument(f"--{flag}", type=int, default=None, dest=flag)
    table = add("table", "grid of reports; ranges as A..B")
    table.add_argument("--oracle", action="store_true", help="add the closed-surface Euler characteristic column")
    add("oracle-check", "Macdonald span vs S_n-invariant dimension per degree")
    add("selftest", "run the built-in acceptance checks")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        g=args.g,
        k=args.k,
        n=args.n,
        N=args.N,
        g2=getattr(args, "g2", None),
        k2=getattr(args, "k2", None),
        n2=getattr(args, "n2", None),
        N2=getattr(args, "N2", None),
        format=args.format,
        out=args.out,
        oracle=getattr(args, "oracle", False),
        seed=args.seed,
        max_work=args.max_work,
    )
