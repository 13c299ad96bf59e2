"""Built-in algebras: the six number-operator families, their classical
limits, the quantum plane, the invertible-pair counterexample, and
epsilon-exterior algebras.

Every builder returns an Algebra whose reduction system is confluent
(certified at construction) and whose commutation factor satisfies the
factor axioms on the relevant grade group.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .freealg import Element, Generator, Word, grade_of, homogeneous_components
from .grading import (
    CommutationFactor,
    Grade,
    counterexample_factor,
    eps_a,
    eps_a_prime,
    eps_c,
    eps_c_prime,
    eps_q,
)
from .rewrite import ReductionSystem, Rule
from .scalars import H, H_ONE, H_ZERO, HPoly, Scalar

NOA_FAMILIES = ("a", "a'", "b", "b'", "c", "c'")

FAMILY_NAMES = {
    "fermion": "a",
    "pseudo-fermion": "a'",
    "excl": "b",
    "excl-dual": "b'",
    "boson": "c",
    "pseudo-boson": "c'",
}

FAMILY_LABELS = {v: k for k, v in FAMILY_NAMES.items()}


class Algebra:
    """A graded algebra given by generators, a factor, and a confluent system."""

    def __init__(self, label, family, system, factor, h, involution=None, params=None):
        self.label = label
        self.family = family
        self.system = system
        self.factor = factor
        self.h = HPoly.of(h)
        self.involution = involution
        self.params = dict(params or {})
        self.generators = system.generators
        self._by_label = {g.label: g for g in self.generators}
        self._basis = {}

    # ------------------------------------------------------------- structure

    @property
    def zero_grade(self) -> Grade:
        return self.system.zero_grade

    def is_classical(self) -> bool:
        return self.h.is_zero()

    def gen(self, label: str) -> Generator:
        try:
            return self._by_label[label]
        except KeyError:
            raise KeyError(f"unknown generator {label!r} in {self.label}") from None

    def gen_element(self, label: str) -> Element:
        return Element.from_word(self.gen(label))

    def indexed_gen(self, name: str, index: int) -> Generator:
        return self.gen(f"{name}{index}")

    def relations(self):
        """Defining relations as elements of the free algebra (lhs - rhs)."""
        return tuple(
            Element.from_word(rule.lhs) - rule.rhs for rule in self.system.rules
        )

    # ------------------------------------------------------------ operations

    def normalize(self, x) -> Element:
        return self.system.normalize(x)

    def basis(self, max_len: int):
        got = self._basis.get(max_len)
        if got is None:
            got = self.system.enumerate_basis(max_len)
            self._basis[max_len] = got
        return got

    def grade_of(self, x: Element):
        return grade_of(x, self.zero_grade)

    def components(self, x: Element):
        return homogeneous_components(x, self.zero_grade)

    def parse(self, text: str) -> Element:
        from .exprparse import element_from_text

        return element_from_text(text, self)

    def __repr__(self) -> str:
        return f"Algebra({self.label})"


def _certify(alg: Algebra) -> Algebra:
    bad = alg.factor.moduli_violations(alg.zero_grade.moduli)
    if bad:
        raise ValueError(f"{alg.label}: factor ill-defined on quotient: {bad}")
    unresolved = alg.system.check_confluence()
    if unresolved:
        raise ValueError(
            f"{alg.label}: reduction system not confluent, e.g. {unresolved[0]}"
        )
    return alg


def _noa_generators(n: int):
    creators = [Generator("ad", i, Grade.unit(i, n)) for i in range(1, n + 1)]
    annihilators = [Generator("a", i, -Grade.unit(i, n)) for i in range(1, n + 1)]
    return creators, annihilators


def _noa_rules(family: str, n: int, h: HPoly, ad, a):
    """Oriented presentation of one family; indices in ad/a are 0-based."""
    one = Element.one()
    rules = []

    def word(*gens) -> Word:
        return Word(tuple(gens))

    def w_elem(*gens) -> Element:
        return Element.from_word(word(*gens))

    if family in ("a", "a'"):
        sign = -1 if family == "a" else 1
        for i in range(n):
            rules.append(Rule(word(a[i], a[i]), Element.zero()))
            rules.append(Rule(word(ad[i], ad[i]), Element.zero()))
            rules.append(Rule(word(a[i], ad[i]), one * h - w_elem(ad[i], a[i])))
        for i in range(n):
            for j in range(i + 1, n):
                rules.append(Rule(word(a[j], a[i]), w_elem(a[i], a[j]) * sign))
                rules.append(Rule(word(ad[j], ad[i]), w_elem(ad[i], ad[j]) * sign))
        for i in range(n):
            for j in range(n):
                if i != j:
                    rules.append(Rule(word(a[i], ad[j]), w_elem(ad[j], a[i]) * sign))
    elif family in ("c", "c'"):
        sign = 1 if family == "c" else -1
        for i in range(n):
            rules.append(Rule(word(a[i], ad[i]), w_elem(ad[i], a[i]) + one * h))
        for i in range(n):
            for j in range(i + 1, n):
                rules.append(Rule(word(a[j], a[i]), w_elem(a[i], a[j]) * sign))
                rules.append(Rule(word(ad[j], ad[i]), w_elem(ad[i], ad[j]) * sign))
        for i in range(n):
            for j in range(n):
                if i != j:
                    rules.append(Rule(word(a[i], ad[j]), w_elem(ad[j], a[i]) * sign))
    elif family == "b":
        for i in range(n):
            for j in range(n):
                rules.append(Rule(word(a[i], a[j]), Element.zero()))
                rules.append(Rule(word(ad[i], ad[j]), Element.zero()))
                if i != j:
                    rules.append(Rule(word(a[i], ad[j]), Element.zero()))
        total = Element.zero()
        for k in range(n):
            total = total + w_elem(ad[k], a[k])
        for i in range(n):
            rules.append(Rule(word(a[i], ad[i]), one * h - total))
    elif family == "b'":
        for i in range(n):
            for j in range(n):
                rules.append(Rule(word(a[i], a[j]), Element.zero()))
                rules.append(Rule(word(ad[i], ad[j]), Element.zero()))
                if i != j:
                    rules.append(Rule(word(ad[j], a[i]), Element.zero()))
        total = Element.zero()
        for k in range(n):
            total = total + w_elem(a[k], ad[k])
        for i in range(n):
            rules.append(Rule(word(ad[i], a[i]), one * h - total))
    else:
        raise ValueError(f"unknown family {family!r}")
    return rules


@lru_cache(maxsize=None)
def _build_noa_cached(family: str, n: int, h: HPoly) -> Algebra:
    ad, a = _noa_generators(n)
    # Family b' normalizes a-letters to the left, everything else ad-first;
    # the Sigma relation cannot decrease under the ad-first order.
    generators = tuple(a) + tuple(ad) if family == "b'" else tuple(ad) + tuple(a)
    rules = _noa_rules(family, n, h, ad, a)
    system = ReductionSystem(generators, rules)
    factor = {
        "a": eps_a,
        "a'": eps_a_prime,
        "c": eps_c,
        "c'": eps_c_prime,
        "b": eps_c_prime,
        "b'": eps_c_prime,
    }[family](n)
    involution = {}
    for x, y in zip(ad, a):
        involution[x] = y
        involution[y] = x
    tag = FAMILY_LABELS[family]
    if h == H:
        label = f"{tag}:n={n}"
    elif h.is_zero():
        label = f"classical-{tag}:n={n}"
    else:
        label = f"{tag}:n={n},h={h}"
    alg = Algebra(label, family, system, factor, h, involution, {"n": n})
    return _certify(alg)


def build_noa(family: str, n: int, h=H) -> Algebra:
    """One of the six number-operator families on n modes.

    h is the deformation constant as a polynomial in the formal parameter;
    the default is the symbolic parameter itself, 0 gives the classical
    limit, and any constant from the tau-fixed subfield pins the algebra.
    """
    family = FAMILY_NAMES.get(family, family)
    if family not in NOA_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("family needs at least one mode")
    return _build_noa_cached(family, int(n), HPoly.of(h))


def classical_limit(alg: Algebra) -> Algebra:
    """The same presentation with the deformation constant sent to zero."""
    if alg.family not in NOA_FAMILIES:
        raise ValueError(f"{alg.label} has no deformation parameter")
    if alg.is_classical():
        return alg
    return build_noa(alg.family, alg.params["n"], H_ZERO)


def with_h(alg: Algebra, h) -> Algebra:
    if alg.family not in NOA_FAMILIES:
        raise ValueError(f"{alg.label} has no deformation parameter")
    return build_noa(alg.family, alg.params["n"], HPoly.of(h))


@lru_cache(maxsize=None)
def _build_qplane_cached(q: Scalar) -> Algebra:
    if q.is_zero():
        raise ValueError("quantum plane parameter must be invertible")
    # Grade counts (y-degree, x-degree); this labeling makes the algebra
    # eps_q-commutative with the factor's q^(lm-kn) convention.
    x = Generator("x", None, Grade((0, 1)))
    y = Generator("y", None, Grade((1, 0)))
    rule = Rule(Word((x, y)), Element.from_word(Word((y, x)), q))
    system = ReductionSystem((y, x), (rule,))
    alg = Algebra(f"qplane:q={q}", "qplane", system, eps_q(q), H_ZERO, None, {"q": q})
    return _certify(alg)


def build_quantum_plane(q) -> Algebra:
    """K<x,y> with xy = q yx, graded over Z^2 with basis y^k x^l."""
    return _build_qplane_cached(Scalar.of(q))


@lru_cache(maxsize=None)
def build_counterexample() -> Algebra:
    """Localized anticommuting pair: basis x^k y^l with k, l in Z.

    Graded over (Z/2)^2; both homogeneous one-element bases {x} and {y}
    generate it as a graded module, with different epsilon-ranks.
    """
    moduli = (2, 2)
    x = Generator("x", None, Grade((1, 0), moduli))
    xi = Generator("X", None, Grade((1, 0), moduli))
    y = Generator("y", None, Grade((0, 1), moduli))
    yi = Generator("Y", None, Grade((0, 1), moduli))
    one = Element.one()

    def neg(w1, w2) -> Element:
        return Element.from_word(Word((w1, w2)), -1)

    rules = (
        Rule(Word((x, xi)), one),
        Rule(Word((xi, x)), one),
        Rule(Word((y, yi)), one),
        Rule(Word((yi, y)), one),
        Rule(Word((y, x)), neg(x, y)),
        Rule(Word((y, xi)), neg(xi, y)),
        Rule(Word((yi, x)), neg(x, yi)),
        Rule(Word((yi, xi)), neg(xi, yi)),
    )
    system = ReductionSystem((x, xi, y, yi), rules)
    alg = Algebra("cex", "cex", system, counterexample_factor(), H_ZERO)
    return _certify(alg)


def build_epsilon_exterior(grades, factor: CommutationFactor, label: str = "ext") -> Algebra:
    """Quotient of the tensor algebra by v w + eps(v|,w|) w v.

    Even generators square to zero; odd squares survive, which is what makes
    any odd generator force infinite total rank.
    """
    gens = tuple(
        Generator("v", i + 1, grade) for i, grade in enumerate(grades)
    )
    rules = []
    for i, vi in enumerate(gens):
        if factor.parity(vi.grade) == 0:
            rules.append(Rule(Word((vi, vi)), Element.zero()))
        for j in range(i + 1, len(gens)):
            vj = gens[j]
            coeff = -factor.eval(vj.grade, vi.grade)
            rules.append(Rule(Word((vj, vi)), Element.from_word(Word((vi, vj)), coeff)))
    system = ReductionSystem(gens, rules)
    alg = Algebra(label, "ext", system, factor, H_ZERO)
    return _certify(alg)


def build_exterior_preset(n: int, factor_name: str = "eps_c") -> Algebra:
    from .grading import FACTOR_PRESETS

    if factor_name not in FACTOR_PRESETS:
        raise ValueError(f"unknown factor preset {factor_name!r}")
    factor = FACTOR_PRESETS[factor_name](n)
    grades = [Grade.unit(i, n) for i in range(1, n + 1)]
    return build_epsilon_exterior(grades, factor, f"ext:n={n},factor={factor_name}")


def parse_preset(text: str) -> Algebra:
    """Build an algebra from a preset string like 'boson:n=2' or 'qplane:2'."""
    name, _, rest = text.partition(":")
    name = name.strip()
    params = {}
    order = []
    if rest:
        for chunk in rest.split(","):
            key, eq, value = chunk.partition("=")
            key, value = key.strip(), value.strip()
            if not eq:
                order.append(key)
            else:
                params[key] = value
    if name in FAMILY_NAMES:
        n = int(params.pop("n", order.pop(0) if order else 1))
        h = _scalar_param(params.pop("h", None))
        _reject_extras(name, params, order)
        return build_noa(name, n, H if h is None else h)
    if name == "qplane":
        q = _scalar_param(params.pop("q", order.pop(0) if order else None))
        if q is None:
            raise ValueError("qplane needs its parameter, e.g. qplane:2")
        _reject_extras(name, params, order)
        return build_quantum_plane(q)
    if name == "cex":
        _reject_extras(name, params, order)
        return build_counterexample()
    if name == "ext":
        n = int(params.pop("n", order.pop(0) if order else 1))
        factor_name = params.pop("factor", "eps_c")
        _reject_extras(name, params, order)
        return build_exterior_preset(n, factor_name)
    raise ValueError(f"unknown preset {name!r}")


def _reject_extras(name, params, order):
    if params or order:
        extras = ", ".join(list(params) + order)
        raise ValueError(f"preset {name!r} does not take: {extras}")


def _scalar_param(text):
    if text is None:
        return None
    from .exprparse import scalar_from_text

    return scalar_from_text(str(text))


PRESET_NAMES = tuple(FAMILY_NAMES) + ("qplane", "cex", "ext")
