"""Grade groups Z^n (with optional per-coordinate moduli) and commutation factors.

A commutation factor is stored in exponential form base**B(g, k) for an
integer bilinear form B, which makes the two defining axioms
eps(g,k)*eps(k,g) = 1 and eps(g+g',k) = eps(g,k)*eps(g',k) checkable and
keeps evaluation exact.  Parity splits the grade group into even and odd
parts according to the sign of eps(g,g).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .scalars import MINUS_ONE, ONE, Scalar


@dataclass(frozen=True)
class Grade:
    """Element of Z^n, reduced modulo the per-coordinate moduli (0 = free)."""

    coords: tuple
    moduli: tuple = None

    def __post_init__(self):
        moduli = self.moduli
        if moduli is None:
            moduli = (0,) * len(self.coords)
        if len(moduli) != len(self.coords):
            raise ValueError("moduli shape does not match coordinates")
        coords = tuple(
            c % m if m else c for c, m in zip(self.coords, moduli)
        )
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "moduli", tuple(moduli))

    @staticmethod
    def zero(dim: int, moduli=None) -> Grade:
        return Grade((0,) * dim, moduli)

    @staticmethod
    def unit(i: int, dim: int, moduli=None) -> Grade:
        """The i-th coordinate vector p_i (1-based index)."""
        if not 1 <= i <= dim:
            raise ValueError(f"unit index {i} out of range 1..{dim}")
        return Grade(tuple(1 if k == i - 1 else 0 for k in range(dim)), moduli)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check(self, other: Grade):
        if self.moduli != other.moduli or self.dim != other.dim:
            raise ValueError(f"grade group mismatch: {self!r} vs {other!r}")

    def __add__(self, other: Grade) -> Grade:
        self._check(other)
        return Grade(
            tuple(a + b for a, b in zip(self.coords, other.coords)), self.moduli
        )

    def __sub__(self, other: Grade) -> Grade:
        self._check(other)
        return Grade(
            tuple(a - b for a, b in zip(self.coords, other.coords)), self.moduli
        )

    def __neg__(self) -> Grade:
        return Grade(tuple(-c for c in self.coords), self.moduli)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def sort_key(self):
        return self.coords

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        if any(self.moduli):
            return f"Grade{self.coords!r} mod {self.moduli!r}"
        return f"Grade{self.coords!r}"


@dataclass(frozen=True)
class CommutationFactor:
    """eps(g, k) = base ** B(g, k) for an integer matrix B."""

    base: Scalar
    form: tuple
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "base", Scalar.of(self.base))
        object.__setattr__(self, "form", tuple(tuple(int(x) for x in row) for row in self.form))
        if self.base.is_zero():
            raise ValueError("commutation factor base must be invertible")
        for row in self.form:
            if len(row) != len(self.form):
                raise ValueError("bilinear form matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.form)

    @property
    def symmetry(self) -> str:
        n = self.dim
        if all(self.form[j][k] == self.form[k][j] for j in range(n) for k in range(n)):
            return "symmetric"
        if all(self.form[j][k] == -self.form[k][j] for j in range(n) for k in range(n)):
            return "antisymmetric"
        return "none"

    def exponent(self, g: Grade, k: Grade) -> int:
        if g.dim != self.dim or k.dim != self.dim:
            raise ValueError(
                f"grade dimension {g.dim}x{k.dim} does not match form of size {self.dim}"
            )
        total = 0
        for j, gj in enumerate(g.coords):
            if not gj:
                continue
            row = self.form[j]
            total += gj * sum(row[m] * km for m, km in enumerate(k.coords) if km)
        return total

    def eval(self, g: Grade, k: Grade) -> Scalar:
        e = self.exponent(g, k)
        if self.base == MINUS_ONE:
            return MINUS_ONE if e % 2 else ONE
        if self.base == ONE:
            return ONE
        return self.base ** e

    def parity(self, g: Grade) -> int:
        """0 for even (eps(g,g) = 1), 1 for odd (eps(g,g) = -1)."""
        v = self.eval(g, g)
        if v == ONE:
            return 0
        if v == MINUS_ONE:
            return 1
        raise ValueError(f"eps(g,g) = {v} is not a sign; parity undefined for {g}")

    def moduli_violations(self, moduli) -> list:
        """Well-definedness on a quotient: base**(m*B[j][k]) must be 1."""
        bad = []
        for j, m in enumerate(moduli):
            if not m:
                continue
            for k in range(self.dim):
                if self.base ** (m * self.form[j][k]) != ONE:
                    bad.append(
                        f"base^({m}*B[{j}][{k}]) = base^{m * self.form[j][k]} != 1"
                    )
                if self.base ** (m * self.form[k][j]) != ONE:
                    bad.append(
                        f"base^({m}*B[{k}][{j}]) = base^{m * self.form[k][j]} != 1"
                    )
        return bad

    def describe(self) -> str:
        name = self.label or "factor"
        return f"{name}: base {self.base}, form {self.form}, {self.symmetry}"


def epsilon_eval(factor: CommutationFactor, g: Grade, k: Grade) -> Scalar:
    return factor.eval(g, k)


def parity(factor: CommutationFactor, g: Grade) -> int:
    return factor.parity(g)


def verify_factor_axioms(factor: CommutationFactor, samples) -> list:
    """Check both factor axioms, parity additivity, and quotient soundness.

    Exhaustive over the given samples: axiom (1) on all ordered pairs,
    bi-additivity on all triples drawn from the sample list (capped to keep
    the check polynomial at desk scale).  Returns human-readable violations;
    an empty list certifies the axioms at sample scale.
    """
    samples = list(samples)
    violations = []
    seen_moduli = {g.moduli for g in samples}
    for moduli in seen_moduli:
        violations.extend(factor.moduli_violations(moduli))
    for g, k in itertools.product(samples, repeat=2):
        if g.moduli != k.moduli:
            continue
        if factor.eval(g, k) * factor.eval(k, g) != ONE:
            violations.append(f"eps({g},{k})*eps({k},{g}) != 1")
    parities = {}
    for g in samples:
        try:
            parities[g] = factor.parity(g)
        except ValueError as err:
            violations.append(str(err))
    cap = samples[: min(len(samples), 12)]
    for g, gp, k in itertools.product(cap, repeat=3):
        if not (g.moduli == gp.moduli == k.moduli):
            continue
        if factor.eval(g + gp, k) != factor.eval(g, k) * factor.eval(gp, k):
            violations.append(f"eps({g}+{gp},{k}) != eps({g},{k})*eps({gp},{k})")
        if factor.eval(k, g + gp) != factor.eval(k, g) * factor.eval(k, gp):
            violations.append(f"eps({k},{g}+{gp}) != eps({k},{g})*eps({k},{gp})")
    for g, k in itertools.product(cap, repeat=2):
        if g.moduli != k.moduli or g not in parities or k not in parities:
            continue
        s = g + k
        try:
            ps = factor.parity(s)
        except ValueError as err:
            violations.append(str(err))
            continue
        if ps != (parities[g] + parities[k]) % 2:
            violations.append(f"parity({g}+{k}) != parity({g})+parity({k}) mod 2")
    return violations


def _ones(n: int) -> tuple:
    return tuple(tuple(1 for _ in range(n)) for _ in range(n))


def _eye(n: int) -> tuple:
    return tuple(tuple(1 if j == k else 0 for k in range(n)) for j in range(n))


def _zeros(n: int) -> tuple:
    return tuple(tuple(0 for _ in range(n)) for _ in range(n))


def eps_a(n: int) -> CommutationFactor:
    """(-1)^(sum g)(sum k): every unit grade odd, signs by total degree."""
    return CommutationFactor(MINUS_ONE, _ones(n), "eps_a")


def eps_a_prime(n: int) -> CommutationFactor:
    """(-1)^(g.k): coordinatewise pairing, unit grades odd."""
    return CommutationFactor(MINUS_ONE, _eye(n), "eps_a'")


def eps_c(n: int) -> CommutationFactor:
    """Trivial factor: everything even, plain commutativity."""
    return CommutationFactor(MINUS_ONE, _zeros(n), "eps_c")


def eps_c_prime(n: int) -> CommutationFactor:
    """(-1)^(sum_{i!=j} g_i k_j): unit grades even, distinct indices pick up signs."""
    form = tuple(tuple(0 if j == k else 1 for k in range(n)) for j in range(n))
    return CommutationFactor(MINUS_ONE, form, "eps_c'")


def eps_q(q) -> CommutationFactor:
    """q^(lm - kn) on Z^2; antisymmetric, so eps(g,g) = 1 for every grade."""
    return CommutationFactor(Scalar.of(q), ((0, -1), (1, 0)), "eps_q")


def counterexample_factor() -> CommutationFactor:
    """(-1)^(kn + lm) on (Z/2)^2; both off-diagonal pairings count."""
    return CommutationFactor(MINUS_ONE, ((0, 1), (1, 0)), "counterexample")


FACTOR_PRESETS = {
    "eps_a": eps_a,
    "eps_a'": eps_a_prime,
    "eps_c": eps_c,
    "eps_c'": eps_c_prime,
}
