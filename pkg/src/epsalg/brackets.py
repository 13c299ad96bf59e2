"""Epsilon-commutators, epsilon-Poisson brackets, and their law checkers.

Both brackets are defined on homogeneous pieces and extended bilinearly:
the commutator [x,y] = xy - eps(x|,y|) yx inside one algebra, the Poisson
bracket {x,y} = mu_1(x,y) - eps(x|,y|) mu_1(y,x) on a classical limit
through its deformation expansion.  The verifiers draw seeded random
homogeneous elements and report every violated instance exactly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .deformation import DeformationExpansion
from .freealg import Element, Word
from .grading import CommutationFactor
from .presets import Algebra
from .scalars import I, MINUS_ONE, ONE, Scalar

UNITS = (ONE, MINUS_ONE, I, -I)


@dataclass
class BracketContext:
    """Where products normalize and which factor weighs the swaps."""

    algebra: Algebra
    factor: CommutationFactor = None
    expansion: DeformationExpansion = None

    def __post_init__(self):
        if self.factor is None:
            self.factor = self.algebra.factor

    @staticmethod
    def quantum(algebra: Algebra, factor=None) -> BracketContext:
        return BracketContext(algebra, factor)

    @staticmethod
    def classical(expansion: DeformationExpansion, factor=None) -> BracketContext:
        return BracketContext(expansion.classical, factor, expansion)


def commutator(ctx: BracketContext, x: Element, y: Element) -> Element:
    """Plain [x,y] = xy - yx, normalized."""
    return ctx.algebra.normalize(x * y - y * x)


def epsilon_commutator(ctx: BracketContext, x: Element, y: Element) -> Element:
    alg = ctx.algebra
    out = Element.zero()
    for gx, u in alg.components(x).items():
        for gy, v in alg.components(y).items():
            out = out + u * v - v * u * ctx.factor.eval(gx, gy)
    return alg.normalize(out)


def in_epsilon_center(ctx: BracketContext, x: Element) -> bool:
    """True when x epsilon-commutes with every generator."""
    return all(
        epsilon_commutator(ctx, x, Element.from_word(g)).is_zero()
        for g in ctx.algebra.generators
    )


def poisson_bracket(ctx: BracketContext, x: Element, y: Element) -> Element:
    if ctx.expansion is None:
        raise ValueError("Poisson bracket needs a deformation expansion")
    alg = ctx.algebra
    exp = ctx.expansion
    out = Element.zero()
    for gx, u in alg.components(x).items():
        for gy, v in alg.components(y).items():
            out = out + exp.mu_n(u, v, 1) - exp.mu_n(v, u, 1) * ctx.factor.eval(gx, gy)
    return out


def _lie_residuals(ctx, bracket, x, y, z):
    alg, eps = ctx.algebra, ctx.factor.eval
    gx, gy, gz = alg.grade_of(x), alg.grade_of(y), alg.grade_of(z)
    anti = alg.normalize(bracket(ctx, x, y) + bracket(ctx, y, x) * eps(gy, gx))
    jacobi = alg.normalize(
        bracket(ctx, x, bracket(ctx, y, z)) * eps(gz, gx)
        + bracket(ctx, z, bracket(ctx, x, y)) * eps(gy, gz)
        + bracket(ctx, y, bracket(ctx, z, x)) * eps(gx, gy)
    )
    return anti, jacobi


def verify_lie_axioms(ctx: BracketContext, triples) -> list:
    """Antisymmetry and the epsilon-Jacobi identity for the commutator."""
    failures = []
    for k, (x, y, z) in enumerate(triples):
        anti, jacobi = _lie_residuals(ctx, epsilon_commutator, x, y, z)
        if not anti.is_zero():
            failures.append(f"triple {k}: antisymmetry residual {anti}")
        if not jacobi.is_zero():
            failures.append(f"triple {k}: Jacobi residual {jacobi}")
    return failures


def verify_poisson_axioms(ctx: BracketContext, triples) -> list:
    """Lie axioms plus the graded Leibniz rule for the Poisson bracket."""
    failures = []
    alg, eps = ctx.algebra, ctx.factor.eval
    for k, (x, y, z) in enumerate(triples):
        anti, jacobi = _lie_residuals(ctx, poisson_bracket, x, y, z)
        if not anti.is_zero():
            failures.append(f"triple {k}: antisymmetry residual {anti}")
        if not jacobi.is_zero():
            failures.append(f"triple {k}: Jacobi residual {jacobi}")
        gx, gy = alg.grade_of(x), alg.grade_of(y)
        yz = alg.normalize(y * z)
        leibniz = alg.normalize(
            poisson_bracket(ctx, x, yz)
            - poisson_bracket(ctx, x, y) * z
            - y * poisson_bracket(ctx, x, z) * eps(gx, gy)
        )
        if not leibniz.is_zero():
            failures.append(f"triple {k}: Leibniz residual {leibniz}")
    return failures


# ----------------------------------------------------------------- sampling


def _random_scalar(rng: random.Random) -> Scalar:
    while True:
        s = Scalar(
            Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2))),
            rng.randint(-2, 2),
            rng.randint(-1, 1),
            0,
        )
        if not s.is_zero():
            return s


def sample_homogeneous(
    alg: Algebra, rng: random.Random, max_len: int = 3, max_terms: int = 2
) -> Element:
    """Random nonzero homogeneous element supported on irreducible words."""
    buckets = {}
    for word in alg.basis(max_len):
        buckets.setdefault(word.grade(alg.zero_grade), []).append(word)
    grades = sorted(buckets, key=lambda g: g.sort_key())
    grade = grades[rng.randrange(len(grades))]
    words = buckets[grade]
    count = rng.randint(1, min(max_terms, len(words)))
    out = Element.zero()
    for word in rng.sample(words, count):
        out = out + Element.from_word(word, _random_scalar(rng))
    return out


def sample_triples(alg: Algebra, count: int, seed: int, max_len: int = 3):
    rng = random.Random(seed)
    return [
        tuple(sample_homogeneous(alg, rng, max_len) for _ in range(3))
        for _ in range(count)
    ]


# --------------------------------------------------------------- oscillators


@dataclass
class OscillatorSet:
    """Position, momentum, and energy elements for one mode."""

    p: Element
    q: Element
    energy: Element


def oscillator_set(alg: Algebra, i: int) -> OscillatorSet:
    a = Element.from_word(alg.indexed_gen("a", i))
    ad = Element.from_word(alg.indexed_gen("ad", i))
    inv_r2 = Scalar(0, 0, Fraction(1, 2), 0)  # 1/sqrt2
    inv_ir2 = Scalar(0, 0, 0, Fraction(-1, 2))  # 1/(i sqrt2)
    energy = Word((alg.indexed_gen("ad", i), alg.indexed_gen("a", i)))
    return OscillatorSet(
        p=(a + ad) * inv_r2,
        q=(ad - a) * inv_ir2,
        energy=Element.from_word(energy),
    )


@dataclass
class OscillatorReport:
    family: str
    entries: dict
    c: Scalar | None
    c_prime: Scalar | None
    pattern_ok: bool
    notes: list

    def constants_are_units(self) -> bool:
        return self.c in UNITS and self.c_prime in UNITS


def _scalar_ratio(elem: Element, target: Element):
    """u with elem == u*target, if one exists; None otherwise."""
    if target.is_zero():
        return None
    if set(elem.terms) != set(target.terms):
        return None
    ratio = None
    for word, coeff in target.terms.items():
        c = elem.terms[word]
        if not (c.is_constant() and coeff.is_constant()):
            return None
        r = c.constant() / coeff.constant()
        if ratio is None:
            ratio = r
        elif ratio != r:
            return None
    return ratio


def oscillator_table(expansion: DeformationExpansion) -> OscillatorReport:
    """All pairwise brackets of p, q, H across modes, with unit constants.

    Asserting values is left to callers: the table records the computed
    brackets, extracts c from {p_i,q_i} = c and c' from {H_i,p_i} = c' q_i,
    and checks the delta-support pattern exactly.
    """
    ctx = BracketContext.classical(expansion)
    alg = ctx.algebra
    n = alg.params["n"]
    sets = {i: oscillator_set(alg, i) for i in range(1, n + 1)}
    entries = {}
    notes = [
        "p_i and q_i mix the grades -p_i and p_i; brackets expand componentwise"
    ]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            si, sj = sets[i], sets[j]
            entries[("p", "p", i, j)] = poisson_bracket(ctx, si.p, sj.p)
            entries[("q", "q", i, j)] = poisson_bracket(ctx, si.q, sj.q)
            entries[("p", "q", i, j)] = poisson_bracket(ctx, si.p, sj.q)
            entries[("H", "p", i, j)] = poisson_bracket(ctx, si.energy, sj.p)
            entries[("H", "q", i, j)] = poisson_bracket(ctx, si.energy, sj.q)
    pattern_ok = True
    c = c_prime = None
    for (kind_a, kind_b, i, j), value in entries.items():
        diagonal = i == j
        if kind_a in ("p", "q") and kind_a == kind_b:
            if not value.is_zero():
                pattern_ok = False
        elif (kind_a, kind_b) == ("p", "q"):
            if not diagonal:
                pattern_ok = pattern_ok and value.is_zero()
            else:
                got = _scalar_ratio(value, Element.one())
                if got is None or (c is not None and got != c):
                    pattern_ok = False
                else:
                    c = got
        elif kind_a == "H":
            if not diagonal:
                pattern_ok = pattern_ok and value.is_zero()
                continue
            target = sets[i].q if kind_b == "p" else sets[i].p
            got = _scalar_ratio(value, target)
            if got is None:
                pattern_ok = False
                continue
            if kind_b == "q":
                got = -got
            if c_prime is None:
                c_prime = got
            elif c_prime != got:
                pattern_ok = False
    return OscillatorReport(alg.family, entries, c, c_prime, pattern_ok, notes)
