"""Reduction engine checked against an exhaustive all-orders reducer.

The oracle below shares no code with the engine: it applies every applicable
rule at every position, in every order, and records the set of fully reduced
elements it can reach.  For a confluent system that set must be a singleton
containing the engine's normal form.
"""
import itertools

import pytest

from epsalg import (
    EMPTY_WORD,
    Element,
    H,
    HPoly,
    ReductionSystem,
    Rule,
    StepBudgetExceeded,
    Word,
    build_noa,
)


def _key(e: Element):
    """Order-free fingerprint of an element, for set membership."""
    return tuple(sorted((str(w), str(c)) for w, c in e.terms.items()))


def _one_steps(rules, e: Element):
    """Every element reachable from e by a single rewrite anywhere."""
    out = []
    for word, coeff in e.terms.items():
        letters = word.letters
        for pos in range(len(letters)):
            for rule in rules:
                m = len(rule.lhs)
                if letters[pos : pos + m] != rule.lhs.letters:
                    continue
                patched = Word(letters[:pos]) * rule.rhs * Word(letters[pos + m :])
                out.append(e - Element.from_word(word) * coeff + patched * coeff)
    return out


def _all_normal_forms(rules, start: Element):
    reached = {}
    frontier = [start]
    seen = set()
    while frontier:
        cur = frontier.pop()
        k = _key(cur)
        if k in seen:
            continue
        seen.add(k)
        steps = _one_steps(rules, cur)
        if steps:
            frontier.extend(steps)
        else:
            reached[k] = cur
    return reached


def _all_words(gens, max_len):
    for n in range(max_len + 1):
        for tup in itertools.product(gens, repeat=n):
            yield Word(tup)


@pytest.mark.parametrize("family", ["a", "b", "c"])
def test_engine_agrees_with_all_orders_oracle(family):
    alg = build_noa(family, 1)
    sys_ = alg.system
    for word in _all_words(sys_.generators, 3):
        nfs = _all_normal_forms(sys_.rules, Element.from_word(word))
        assert len(nfs) == 1, f"{word} has several normal forms"
        (only,) = nfs.values()
        assert sys_.normalize(word) == only


def test_boson_frozen_value():
    alg = build_noa("c", 1)
    a, ad = alg.gen_element("a1"), alg.gen_element("ad1")
    assert str(alg.normalize(a * ad * ad)) == "ad1^2*a1 + 2*h*ad1"


def test_normalize_is_idempotent_and_linear():
    alg = build_noa("c", 2)
    a1, ad2 = alg.gen_element("a1"), alg.gen_element("ad2")
    x = alg.normalize(a1 * ad2 * a1 * ad2)
    assert alg.normalize(x) == x
    y = alg.normalize(ad2 * a1)
    assert alg.normalize((a1 * ad2 * a1 * ad2) * 3 + (ad2 * a1) * H) == x * 3 + y * H


def test_normalize_accepts_words_and_generators():
    alg = build_noa("a", 1)
    g = alg.gen("a1")
    assert alg.system.normalize(g) == Element.from_word(g)
    assert alg.system.normalize(Word((g, g))) == Element.zero()


def test_basis_matches_brute_force():
    alg = build_noa("b", 2)
    sys_ = alg.system
    # independent filter: irreducible = no rule left side occurs as a subword
    expect = [
        w
        for w in _all_words(sys_.generators, 3)
        if all(
            w.letters[i : i + len(r.lhs)] != r.lhs.letters
            for r in sys_.rules
            for i in range(len(w) - len(r.lhs) + 1)
        )
    ]
    got = sys_.enumerate_basis(3)
    assert set(got) == set(expect)
    # ascending deglex, no duplicates
    keys = [sys_.word_key(w) for w in got]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_excl_basis_closes_at_two():
    alg = build_noa("b", 2)
    assert alg.system.basis_is_complete(2)
    assert len(alg.basis(2)) == 9
    assert not build_noa("c", 1).system.basis_is_complete(5)


def test_confluence_of_presets():
    for family in ["a", "a'", "b", "b'", "c", "c'"]:
        assert build_noa(family, 2).system.check_confluence() == []


def test_sign_mutated_fermion_is_not_confluent():
    base = build_noa("a", 1)
    a, ad = base.gen("a1"), base.gen("ad1")
    h1 = Element.from_word(Word((ad, a))) + Element.scalar(H)
    broken = ReductionSystem(
        base.system.generators,
        [
            Rule(Word((a, a)), Element.zero()),
            Rule(Word((ad, ad)), Element.zero()),
            # sign of the mixed term flipped relative to the fermion relation
            Rule(Word((a, ad)), h1),
        ],
    )
    bad = broken.check_confluence()
    assert bad
    residuals = {str(amb.residual) for amb in bad}
    assert residuals & {"2*h*a1", "-2*h*a1", "2*h*ad1", "-2*h*ad1"}
    for amb in bad:
        assert not amb.resolvable
        assert "UNRESOLVED" in str(amb)


def test_inclusion_ambiguity_is_reported():
    base = build_noa("a", 1)
    a, ad = base.gen("a1"), base.gen("ad1")
    sys_ = ReductionSystem(
        base.system.generators,
        [
            Rule(Word((a, a)), Element.zero()),
            Rule(Word((a, a, ad)), Element.from_word(a)),
        ],
    )
    kinds = {amb.kind for amb in sys_.iter_ambiguities()}
    assert "inclusion" in kinds
    assert sys_.check_confluence() != []


def test_rule_validation():
    base = build_noa("a", 1)
    gens = base.system.generators
    a, ad = base.gen("a1"), base.gen("ad1")
    with pytest.raises(ValueError, match="duplicate rule"):
        ReductionSystem(gens, [Rule(Word((a, a)), Element.zero())] * 2)
    with pytest.raises(ValueError, match="inhomogeneous"):
        ReductionSystem(
            gens,
            [Rule(Word((a, ad)), Element.from_word(a) + Element.one())],
        )
    with pytest.raises(ValueError, match="termination order"):
        # right side is longer than the left: not a decrease
        ReductionSystem(gens, [Rule(Word((a, ad)), Element.from_word(Word((ad, a, a, ad))))])
    with pytest.raises(ValueError, match="changes grade"):
        ReductionSystem(gens, [Rule(Word((a, ad)), Element.from_word(a))])
    with pytest.raises(ValueError, match="empty left side"):
        ReductionSystem(gens, [Rule(EMPTY_WORD, Element.zero())])


def test_step_budget():
    base = build_noa("c", 1)
    a, ad = base.gen("a1"), base.gen("ad1")
    tiny = ReductionSystem(base.system.generators, base.system.rules, max_steps=2)
    with pytest.raises(StepBudgetExceeded):
        tiny.normalize(Word((a, a, a, ad, ad, ad)))


def test_word_order_is_deglex():
    sys_ = build_noa("a", 2).system
    gens = sys_.generators
    assert sys_.word_lt(Word((gens[3],)), Word((gens[0], gens[0])))
    assert sys_.word_lt(Word((gens[0], gens[1])), Word((gens[1], gens[0])))
