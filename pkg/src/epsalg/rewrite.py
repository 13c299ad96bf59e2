"""Graded string rewriting: normal forms, confluence certification, bases.

Rules replace a word by a strictly smaller graded element under the
degree-lexicographic order induced by the generator list, so every
reduction terminates.  Confluence is certified by resolving all overlap
and inclusion ambiguities (the diamond lemma); once the unresolved list is
empty, irreducible words form a basis of the quotient and `normalize`
computes the canonical representative.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .freealg import EMPTY_WORD, Element, Generator, Word, grade_of
from .grading import Grade


class RewriteError(Exception):
    pass


class StepBudgetExceeded(RewriteError):
    pass


@dataclass(frozen=True)
class Rule:
    """Oriented graded relation lhs -> rhs.

    Soundness (rhs homogeneous of the lhs grade, rhs strictly smaller) is
    enforced by the owning ReductionSystem, which knows the generator order.
    """

    lhs: Word
    rhs: Element

    def __str__(self) -> str:
        return f"{self.lhs} -> {self.rhs}"


@dataclass(frozen=True)
class Ambiguity:
    """One critical pair: a word reducible in two ways at overlapping spots."""

    word: Word
    kind: str
    left: Element = field(compare=False)
    right: Element = field(compare=False)
    residual: Element = field(compare=False)

    @property
    def resolvable(self) -> bool:
        return self.residual.is_zero()

    def __str__(self) -> str:
        status = "resolved" if self.resolvable else "UNRESOLVED"
        return f"{self.kind} at {self.word}: {status}, residual {self.residual}"


class ReductionSystem:
    """A finite graded rewriting system over a fixed generator list.

    The generator tuple fixes the precedence used by the termination order:
    earlier generators are smaller.  Words compare by length first, then
    letterwise by precedence.
    """

    def __init__(self, generators, rules, max_steps: int = 10**6):
        self.generators = tuple(generators)
        if not self.generators:
            raise ValueError("a reduction system needs at least one generator")
        dims = {(g.grade.dim, g.grade.moduli) for g in self.generators}
        if len(dims) != 1:
            raise ValueError("generators live in different grade groups")
        dim, moduli = next(iter(dims))
        self.zero_grade = Grade.zero(dim, moduli)
        self.max_steps = max_steps
        self._prec = {g: i for i, g in enumerate(self.generators)}
        if len(self._prec) != len(self.generators):
            raise ValueError("duplicate generator in precedence list")
        self.rules = tuple(rules)
        self._validate()
        # Scan order: shortest lhs first makes the leftmost match innermost.
        scan = sorted(range(len(self.rules)), key=lambda i: (len(self.rules[i].lhs), i))
        self._by_first = {}
        for i in scan:
            rule = self.rules[i]
            self._by_first.setdefault(rule.lhs[0], []).append(rule)
        self._nf = {}

    def _validate(self):
        seen = set()
        for rule in self.rules:
            if len(rule.lhs) == 0:
                raise ValueError("rule with empty left side")
            if rule.lhs in seen:
                raise ValueError(f"duplicate rule left side {rule.lhs}")
            seen.add(rule.lhs)
            for letter in itertools.chain(
                rule.lhs, *(w for w in rule.rhs.terms)
            ):
                if letter not in self._prec:
                    raise ValueError(f"rule uses foreign generator {letter}")
            lhs_grade = rule.lhs.grade(self.zero_grade)
            if not rule.rhs.is_zero():
                g = grade_of(rule.rhs, self.zero_grade)
                if g is None:
                    raise ValueError(f"rule {rule} has inhomogeneous right side")
                if g != lhs_grade:
                    raise ValueError(
                        f"rule {rule} changes grade: {lhs_grade} -> {g}"
                    )
            for word in rule.rhs.terms:
                if not self.word_lt(word, rule.lhs):
                    raise ValueError(
                        f"rule {rule} does not decrease the termination order at {word}"
                    )

    # ------------------------------------------------------------------ order

    def word_key(self, word: Word):
        return (len(word), tuple(self._prec[g] for g in word))

    def word_lt(self, a: Word, b: Word) -> bool:
        return self.word_key(a) < self.word_key(b)

    # -------------------------------------------------------------- reduction

    def find_redex(self, word: Word):
        """Leftmost, then shortest, match: (position, rule) or None."""
        letters = word.letters
        for pos, letter in enumerate(letters):
            for rule in self._by_first.get(letter, ()):
                m = len(rule.lhs)
                if letters[pos : pos + m] == rule.lhs.letters:
                    return pos, rule
        return None

    def is_irreducible(self, word: Word) -> bool:
        return self.find_redex(word) is None

    def normalize(self, x) -> Element:
        """Canonical representative of x in the quotient; K[h]-linear."""
        if isinstance(x, (Word, Generator)):
            x = Element.from_word(x)
        budget = [self.max_steps]
        out = Element.zero()
        for word, coeff in x.terms.items():
            out = out + self._word_nf(word, budget) * coeff
        return out

    def _word_nf(self, word: Word, budget) -> Element:
        cache = self._nf
        hit = cache.get(word)
        if hit is not None:
            return hit
        stack = [word]
        while stack:
            top = stack[-1]
            if top in cache:
                stack.pop()
                continue
            match = self.find_redex(top)
            if match is None:
                cache[top] = Element.from_word(top)
                stack.pop()
                continue
            pos, rule = match
            head, tail = top.letters[:pos], top.letters[pos + len(rule.lhs) :]
            children = [
                (Word(head + w.letters + tail), c) for w, c in rule.rhs.terms.items()
            ]
            pending = [w for w, _ in children if w not in cache]
            if pending:
                stack.extend(pending)
                continue
            budget[0] -= 1
            if budget[0] < 0:
                raise StepBudgetExceeded(
                    f"step budget {self.max_steps} exhausted while reducing {word}"
                )
            total = Element.zero()
            for w, c in children:
                total = total + cache[w] * c
            cache[top] = total
            stack.pop()
        return cache[word]

    # -------------------------------------------------------------- ambiguity

    def iter_ambiguities(self):
        """Every overlap and inclusion ambiguity among rule left sides."""
        for r1, r2 in itertools.product(self.rules, repeat=2):
            l1, l2 = r1.lhs.letters, r2.lhs.letters
            for k in range(1, min(len(l1), len(l2))):
                if l1[len(l1) - k :] != l2[:k]:
                    continue
                word = Word(l1 + l2[k:])
                left = r1.rhs * Word(l2[k:])
                right = Word(l1[: len(l1) - k]) * r2.rhs
                yield self._resolve(word, "overlap", left, right)
            if r1 is not r2 and len(l2) < len(l1):
                for pos in range(len(l1) - len(l2) + 1):
                    if l1[pos : pos + len(l2)] != l2:
                        continue
                    word = r1.lhs
                    left = r1.rhs
                    right = Word(l1[:pos]) * r2.rhs * Word(l1[pos + len(l2) :])
                    yield self._resolve(word, "inclusion", left, right)

    def _resolve(self, word, kind, left, right) -> Ambiguity:
        residual = self.normalize(left) - self.normalize(right)
        return Ambiguity(word=word, kind=kind, left=left, right=right, residual=residual)

    def check_confluence(self) -> list:
        """Unresolved ambiguities; an empty list certifies confluence."""
        return [a for a in self.iter_ambiguities() if not a.resolvable]

    # ------------------------------------------------------------------ basis

    def enumerate_basis(self, max_len: int) -> list:
        """Irreducible words of length <= max_len in ascending deglex order.

        Grown length by length: a one-letter extension of an irreducible word
        is irreducible iff no rule left side is a suffix of it.
        """
        basis = [EMPTY_WORD]
        frontier = [EMPTY_WORD]
        for _ in range(max_len):
            grown = []
            for word in frontier:
                for g in self.generators:
                    cand = Word(word.letters + (g,))
                    if any(
                        cand.ends_with(rule.lhs)
                        for rule in self.rules
                        if len(rule.lhs) <= len(cand)
                    ):
                        continue
                    grown.append(cand)
            basis.extend(grown)
            frontier = grown
            if not frontier:
                break
        return basis

    def basis_is_complete(self, max_len: int) -> bool:
        """True when no irreducible words exist beyond max_len.

        An empty length level is conclusive: any longer word contains a
        reducible subword of that length.
        """
        levels = self.enumerate_basis(max_len + 1)
        return all(len(w) <= max_len for w in levels)

    def clear_cache(self):
        self._nf = {}
