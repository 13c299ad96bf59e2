"""The quantum product read as a formal deformation of its classical limit.

Quantum and classical normal forms share one irreducible-word basis, so the
h-degree parts of the quantum product of two classical basis elements are
themselves classical elements: mu_n(x, y) is the h^n coefficient of the
quantum normal form of x*y.  Associativity of the quantum product then
splits into one identity per order of h.
"""
from __future__ import annotations

from .freealg import Element
from .presets import Algebra, classical_limit, with_h
from .scalars import Scalar


class DeformationExpansion:
    """A symbolic-parameter algebra together with its classical limit."""

    def __init__(self, quantum: Algebra, check_len: int = 4):
        if quantum.is_classical():
            raise ValueError(f"{quantum.label} has no parameter left to expand in")
        self.quantum = quantum
        self.classical = classical_limit(quantum)
        if quantum.basis(check_len) != self.classical.basis(check_len):
            raise ValueError(
                "quantum and classical irreducible words disagree; "
                "the shared-basis identification fails"
            )

    def mu(self, x: Element, y: Element) -> Element:
        """Quantum normal form of x*y, coefficients polynomial in h."""
        _require_h_free(x)
        _require_h_free(y)
        return self.quantum.normalize(x * y)

    def mu_n(self, x: Element, y: Element, n: int) -> Element:
        return self.mu(x, y).h_coefficient(n)


def _require_h_free(x: Element):
    if x.h_degree() > 0:
        raise ValueError(
            f"deformation inputs live over the base field, got h in {x}"
        )


def mu_n(exp: DeformationExpansion, x: Element, y: Element, n: int) -> Element:
    return exp.mu_n(x, y, n)


def check_deformation_identity(
    exp: DeformationExpansion, x: Element, y: Element, z: Element, n: int
) -> Element:
    """Residual of order-n associativity; zero iff the identity holds.

    sum over p+q=n of mu_p(mu_q(x,y), z) - mu_p(x, mu_q(y,z)).
    """
    residual = Element.zero()
    for q in range(n + 1):
        p = n - q
        residual = residual + exp.mu_n(exp.mu_n(x, y, q), z, p)
        residual = residual - exp.mu_n(x, exp.mu_n(y, z, q), p)
    return residual


def fix_parameter(exp: DeformationExpansion, value) -> Algebra:
    """Pin h to a constant from the tau-fixed subfield."""
    v = Scalar.of(value)
    if not v.is_tau_fixed():
        raise ValueError(f"parameter {v} is not tau-fixed")
    return with_h(exp.quantum, v)
