"""Command-line front end.

Exit codes: 0 success, 1 a check failed (unresolved ambiguity, falsified
axiom, refused probe), 2 bad usage or unparsable input.  With
--format machine every result line is a JSON object with keys
suite/case/status/payload, one per line, suitable for log scraping.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from .brackets import (
    BracketContext,
    commutator,
    epsilon_commutator,
    oscillator_table,
    poisson_bracket,
    sample_triples,
    verify_lie_axioms,
    verify_poisson_axioms,
)
from .deformation import DeformationExpansion, check_deformation_identity, mu_n
from .exprparse import EvalError, ParseError, element_from_text, scalar_from_text
from .freealg import Element
from .grading import Grade, verify_factor_axioms
from .matrices import GradedMatrix, ibn_probe, rank_profile
from .presets import (
    FAMILY_NAMES,
    NOA_FAMILIES,
    PRESET_NAMES,
    Algebra,
    build_noa,
    classical_limit,
    parse_preset,
    with_h,
)
from .scalars import H, HPoly
from .structure import (
    apply_J,
    number_operator_check,
    rescale,
    verify_J_well_defined,
    verify_rescaling,
    verify_sigma,
)


class UsageError(ValueError):
    pass


# --------------------------------------------------------------------- output


@dataclass
class Check:
    case: str
    ok: bool
    payload: str = ""


@dataclass
class Report:
    suite: str
    fmt: str = "text"
    out: object = None
    checks: list = field(default_factory=list)

    def __post_init__(self):
        if self.out is None:
            self.out = sys.stdout

    def add(self, case: str, ok: bool, payload: str = "") -> bool:
        self.checks.append(Check(case, ok, payload))
        self.emit_last()
        return ok

    def result(self, case: str, payload: str):
        """A computed value rather than a pass/fail judgement."""
        self.checks.append(Check(case, True, payload))
        if self.fmt == "machine":
            self.emit_last()
        else:
            print(payload, file=self.out)

    def emit_last(self):
        c = self.checks[-1]
        if self.fmt == "machine":
            line = {
                "suite": self.suite,
                "case": c.case,
                "status": "pass" if c.ok else "fail",
                "payload": c.payload,
            }
            print(json.dumps(line), file=self.out)
        else:
            mark = "pass" if c.ok else "FAIL"
            tail = f": {c.payload}" if c.payload else ""
            print(f"[{mark}] {self.suite}/{c.case}{tail}", file=self.out)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def finish(self) -> int:
        passed = sum(c.ok for c in self.checks)
        if self.fmt == "machine":
            line = {
                "suite": self.suite,
                "case": "summary",
                "status": "pass" if self.ok else "fail",
                "payload": f"{passed}/{len(self.checks)} checks passed",
            }
            print(json.dumps(line), file=self.out)
        else:
            print(
                f"{self.suite}: {passed}/{len(self.checks)} checks passed",
                file=self.out,
            )
        return 0 if self.ok else 1


# ------------------------------------------------------------------- plumbing


def _algebra_from_args(args) -> Algebra:
    if getattr(args, "alg", None):
        return parse_preset(args.alg)
    if getattr(args, "family", None):
        if args.n is None:
            raise UsageError("--family needs --n")
        h = H if args.h is None else HPoly.of(scalar_from_text(args.h))
        return build_noa(args.family, args.n, h)
    raise UsageError("pick an algebra with --alg PRESET or --family NAME --n N")


def _expansion_for(alg: Algebra) -> DeformationExpansion:
    if alg.family not in NOA_FAMILIES:
        raise UsageError(f"{alg.label} has no deformation expansion")
    quantum = with_h(alg, H) if alg.is_classical() else alg
    return DeformationExpansion(quantum)


def _functions(alg: Algebra) -> dict:
    """comm, pb and J as callables for the expression evaluator."""

    def pb(x: Element, y: Element) -> Element:
        ctx = BracketContext.classical(_expansion_for(alg))
        return poisson_bracket(ctx, x, y)

    ctx = BracketContext.quantum(alg)
    return {
        "comm": (2, lambda x, y: epsilon_commutator(ctx, x, y)),
        "pb": (2, pb),
        "J": (1, lambda x: apply_J(alg, x)),
    }


def _parse_element(alg: Algebra, text: str) -> Element:
    return element_from_text(text, alg, _functions(alg))


def _sample_grades(alg: Algebra, count: int, seed: int) -> list:
    """Generator grades, their sums, and random small integer combinations."""
    rng = random.Random(seed)
    base = [g.grade for g in alg.generators]
    zero = alg.zero_grade
    got = {zero}
    got.update(base)
    for g in base:
        for k in base:
            got.add(g + k)
    dim = len(zero.coords)
    while len(got) < count:
        got.add(Grade(tuple(rng.randint(-3, 3) for _ in range(dim)), zero.moduli))
    return sorted(got, key=Grade.sort_key)


# ----------------------------------------------------------------- subcommands


def cmd_normalize(args) -> int:
    alg = _algebra_from_args(args)
    report = Report("normalize", args.format)
    result = alg.normalize(_parse_element(alg, args.expr))
    report.result(args.expr, str(result))
    return 0


def cmd_bracket(args) -> int:
    alg = _algebra_from_args(args)
    x = _parse_element(alg, args.x)
    y = _parse_element(alg, args.y)
    if args.kind == "comm":
        value = epsilon_commutator(BracketContext.quantum(alg), x, y)
    elif args.kind == "plain":
        value = commutator(BracketContext.quantum(alg), x, y)
    else:
        value = poisson_bracket(BracketContext.classical(_expansion_for(alg)), x, y)
    report = Report("bracket", args.format)
    report.result(f"{args.kind}({args.x}, {args.y})", str(value))
    return 0


def cmd_mu(args) -> int:
    alg = _algebra_from_args(args)
    exp = _expansion_for(alg)
    x = _parse_element(exp.classical, args.x)
    y = _parse_element(exp.classical, args.y)
    value = mu_n(exp, x, y, args.order)
    report = Report("mu", args.format)
    report.result(f"mu_{args.order}({args.x}, {args.y})", str(value))
    return 0


def cmd_confluence(args) -> int:
    alg = _algebra_from_args(args)
    report = Report("confluence", args.format)
    count = 0
    for amb in alg.system.iter_ambiguities():
        count += 1
        payload = f"residual {amb.residual}" if not amb.resolvable else ""
        report.add(f"{amb.kind} {amb.word}", amb.resolvable, payload)
    report.add("ambiguities", True, f"{count} examined")
    return report.finish()


def cmd_dim(args) -> int:
    alg = _algebra_from_args(args)
    report = Report("dim", args.format)
    if args.maxlen is not None:
        basis = alg.basis(args.maxlen)
        complete = alg.system.basis_is_complete(args.maxlen)
        note = "complete" if complete else f"truncated at length {args.maxlen}"
        report.result(alg.label, f"{len(basis)} words ({note})")
        return 0
    cap = 64
    for length in range(cap + 1):
        if alg.system.basis_is_complete(length):
            report.result(alg.label, str(len(alg.basis(length))))
            return 0
    report.add(alg.label, False, f"no empty level up to length {cap}; use --maxlen")
    return 1


def _grade_from_json(data, zero: Grade) -> Grade:
    return Grade(tuple(data), zero.moduli)


def _matrix_from_json(alg: Algebra, data: dict) -> GradedMatrix:
    zero = alg.zero_grade
    rows = [_grade_from_json(g, zero) for g in data["rows"]]
    cols = [_grade_from_json(g, zero) for g in data["cols"]]
    entries = [[_parse_element(alg, cell) for cell in row] for row in data["entries"]]
    gamma = _grade_from_json(data["gamma"], zero) if "gamma" in data else None
    return GradedMatrix(alg, rows, cols, entries, gamma)


def cmd_rank(args) -> int:
    with open(args.file) as fh:
        data = json.load(fh)
    if args.alg:
        alg = parse_preset(args.alg)
    elif "alg" in data:
        alg = parse_preset(data["alg"])
    else:
        raise UsageError("no algebra: pass --alg or an 'alg' key in the file")
    report = Report("rank", args.format)
    if "P" in data and "Q" in data:
        P = _matrix_from_json(alg, data["P"])
        Q = _matrix_from_json(alg, data["Q"])
        probe = ibn_probe(P, Q, kind=args.kind)
        report.result("P rows", str(probe.row_profile))
        report.result("P cols", str(probe.col_profile))
        report.add("probe", probe.ok, probe.reason)
        return report.finish()
    M = _matrix_from_json(alg, data)
    report.result("rows", str(rank_profile(M.row_grades, alg.factor)))
    report.result("cols", str(rank_profile(M.col_grades, alg.factor)))
    return 0


def cmd_presets(args) -> int:
    report = Report("presets", args.format)
    lines = {
        "fermion": "type a, anticommuting modes, quantum unless h=0",
        "pseudo-fermion": "type a', fermionic squares with commuting modes",
        "excl": "type b, exclusion algebra, one joint occupation",
        "excl-dual": "type b', mirror exclusion algebra",
        "boson": "type c, commuting oscillator modes",
        "pseudo-boson": "type c', bosonic relations with anticommuting modes",
        "qplane": "two-generator quadratic algebra, xy = q yx",
        "cex": "localized Z2xZ2 example separating graded from total rank",
        "ext": "epsilon-exterior algebra on n even generators",
    }
    for name in PRESET_NAMES:
        sample = f"{name}:n=2" if name in FAMILY_NAMES else f"{name}:2"
        if name == "cex":
            sample = "cex"
        report.result(name, f"{sample:<22} {lines[name]}")
    return 0


def cmd_verify(args) -> int:
    alg = _algebra_from_args(args)
    report = Report(f"verify-{args.suite}", args.format)
    runner = _SUITES[args.suite]
    runner(report, alg, args)
    return report.finish()


# ------------------------------------------------------------- verify suites


def _suite_factor(report: Report, alg: Algebra, args):
    grades = _sample_grades(alg, max(args.samples, 8), args.seed)
    bad = verify_factor_axioms(alg.factor, grades)
    for line in bad:
        report.add("axiom", False, line)
    report.add("axioms", not bad, f"{len(grades)} sample grades")


def _suite_confluence(report: Report, alg: Algebra, args):
    unresolved = alg.system.check_confluence()
    for amb in unresolved:
        report.add(f"{amb.kind} {amb.word}", False, f"residual {amb.residual}")
    report.add("confluence", not unresolved, alg.label)


def _suite_lie(report: Report, alg: Algebra, args):
    ctx = BracketContext.quantum(alg)
    triples = sample_triples(alg, args.samples, args.seed, args.maxlen)
    failures = verify_lie_axioms(ctx, triples)
    for line in failures[:10]:
        report.add("triple", False, line)
    report.add("lie-axioms", not failures, f"{len(triples)} triples")


def _suite_poisson(report: Report, alg: Algebra, args):
    exp = _expansion_for(alg)
    ctx = BracketContext.classical(exp)
    triples = sample_triples(exp.classical, args.samples, args.seed, args.maxlen)
    failures = verify_poisson_axioms(ctx, triples)
    for line in failures[:10]:
        report.add("triple", False, line)
    report.add("poisson-axioms", not failures, f"{len(triples)} triples")


def _suite_deformation(report: Report, alg: Algebra, args):
    exp = _expansion_for(alg)
    rng = random.Random(args.seed)
    basis = [w for w in exp.classical.basis(args.maxlen) if not w.is_empty()]
    count = max(args.samples // 4, 1)
    bad = 0
    for _ in range(count):
        x, y, z = (Element.from_word(rng.choice(basis)) for _ in range(3))
        for order in range(4):
            if not check_deformation_identity(exp, x, y, z, order).is_zero():
                bad += 1
                report.add(
                    f"order {order}", False, f"x={x}, y={y}, z={z}"
                )
    report.add(
        "associativity-orders-0-3", bad == 0, f"{count} word triples"
    )


def _suite_noa(report: Report, alg: Algebra, args):
    if alg.family not in NOA_FAMILIES:
        raise UsageError(f"{alg.label} is not a number-operator algebra")
    n = alg.params["n"]
    bad = verify_J_well_defined(alg)
    report.add("J-involution", not bad, bad[0] if bad else f"{alg.label}")
    perms = {tuple(range(1, n + 1))}
    if n > 1:
        perms.add(tuple(range(2, n + 1)) + (1,))
        perms.add((2, 1) + tuple(range(3, n + 1)))
    for perm in sorted(perms):
        bad = verify_sigma(alg, perm)
        report.add(f"sigma{perm}", not bad, bad[0] if bad else "")
    failures = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            failures.extend(number_operator_check(alg, i, j))
    report.add("number-operator", not failures, failures[0] if failures else f"i,j <= {n}")
    if not alg.is_classical():
        m = rescale(alg, scalar_from_text("1 + I"))
        bad = verify_rescaling(m)
        report.add("rescale-1+I", not bad, bad[0] if bad else f"target {m.target.label}")


def _suite_oscillator(report: Report, alg: Algebra, args):
    table = oscillator_table(_expansion_for(alg))
    for key, value in sorted(table.entries.items()):
        report.result(key, str(value))
    report.add("delta-pattern", table.pattern_ok, "; ".join(table.notes) or "")
    report.add(
        "constants",
        table.constants_are_units(),
        f"c = {table.c}, c' = {table.c_prime}",
    )


_SUITES = {
    "factor": _suite_factor,
    "confluence": _suite_confluence,
    "lie": _suite_lie,
    "poisson": _suite_poisson,
    "deformation": _suite_deformation,
    "noa": _suite_noa,
    "oscillator": _suite_oscillator,
}


# --------------------------------------------------------------------- parser


def _add_algebra_options(sub):
    sub.add_argument("--alg", help="preset string, e.g. boson:n=2 or qplane:2")
    sub.add_argument("--family", choices=sorted(FAMILY_NAMES), help="NOA family name")
    sub.add_argument("--n", type=int, help="number of modes for --family")
    sub.add_argument("--h", help="deformation constant for --family (default h)")
    sub.add_argument(
        "--format", choices=("text", "machine"), default="text", help="output style"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epsalg",
        description="exact computations in epsilon-graded algebras",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("normalize", help="reduce an expression to normal form")
    _add_algebra_options(p)
    p.add_argument("expr")
    p.set_defaults(handler=cmd_normalize)

    p = subs.add_parser("bracket", help="epsilon-commutator or Poisson bracket")
    _add_algebra_options(p)
    p.add_argument("--kind", choices=("comm", "plain", "poisson"), default="comm")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(handler=cmd_bracket)

    p = subs.add_parser("mu", help="one coefficient of the deformation expansion")
    _add_algebra_options(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(handler=cmd_mu)

    p = subs.add_parser("confluence", help="resolve all overlap ambiguities")
    _add_algebra_options(p)
    p.set_defaults(handler=cmd_confluence)

    p = subs.add_parser("dim", help="dimension or truncated basis count")
    _add_algebra_options(p)
    p.add_argument("--maxlen", type=int, help="count words up to this length")
    p.set_defaults(handler=cmd_dim)

    p = subs.add_parser("rank", help="graded rank profiles and the IBN probe")
    _add_algebra_options(p)
    p.add_argument("--file", required=True, help="JSON matrix or P/Q pair")
    p.add_argument("--kind", choices=("total", "super", "eps"), default="eps")
    p.set_defaults(handler=cmd_rank)

    p = subs.add_parser("verify", help="run one verification suite")
    _add_algebra_options(p)
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--maxlen", type=int, default=3)
    p.set_defaults(handler=cmd_verify)

    p = subs.add_parser("presets", help="list the built-in algebra presets")
    p.add_argument(
        "--format", choices=("text", "machine"), default="text", help="output style"
    )
    p.set_defaults(handler=cmd_presets)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 2
    try:
        return args.handler(args)
    except (UsageError, ParseError, EvalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_entry() -> None:
    raise SystemExit(run())
