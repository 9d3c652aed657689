from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given

from iolab import oracle
from iolab.constructions import incidence_bipartite, semiorder
from iolab.errors import NotIntervalOrderError, SpecError
from iolab.interval import (
    LexSumSpec,
    am_chain,
    antichain_leq,
    discrimination_report,
    doubly_critical_pairs,
    downset_interval_representation,
    downsets_form_chain,
    is_interval_order,
    is_valid_interval_lex_sum,
    lex_sum,
    singular_vertices,
    singular_vertices_by_antichains,
    standard_representation,
    two_plus_two,
    upsets_form_chain,
)
from iolab.modular import is_prime
from iolab.poset import antichain, chain, is_chain, maximal_antichain_masks, poset_from_pairs

from .conftest import interval_orders, posets, random_interval_order, random_lex_spec

TWO_TWO = poset_from_pairs(4, [(0, 1), (2, 3)])


def _mask(s):
    return sum(1 << v for v in s)


def test_recognition_examples():
    assert not is_interval_order(TWO_TWO)
    a, b, c, d = two_plus_two(TWO_TWO)
    assert {a, b, c, d} == {0, 1, 2, 3}
    assert TWO_TWO.less(a, b) and TWO_TWO.less(c, d)
    assert is_interval_order(chain(5)) and is_interval_order(antichain(5))
    assert is_interval_order(semiorder(9))
    assert oracle.find_2plus2(semiorder(9)) is None


def test_am_chain_examples():
    assert am_chain(chain(4)).antichains == tuple(frozenset({k}) for k in range(4))
    for n in range(2, 13):
        c = am_chain(semiorder(n))
        assert c.antichains == tuple(frozenset({i, i + 1}) for i in range(n - 1))
    B = incidence_bipartite(3)
    assert set(am_chain(B).antichains) == oracle.all_maximal_antichains(B)


def test_am_chain_rejects_2plus2():
    with pytest.raises(NotIntervalOrderError) as err:
        am_chain(TWO_TWO)
    assert len(err.value.witness) == 4


def test_am_chain_json():
    doc = am_chain(semiorder(4)).to_json(semiorder(4).labels())
    assert doc == {
        "antichains": [["0", "1"], ["1", "2"], ["2", "3"]],
        "membership": {"0": [0, 0], "1": [0, 1], "2": [1, 2], "3": [2, 2]},
    }


def test_standard_representation_examples():
    rep = standard_representation(semiorder(5))
    assert rep.intervals == tuple((max(0, i - 1), min(3, i)) for i in range(5))
    assert rep.is_injective() and not doubly_critical_pairs(semiorder(5))
    pair = standard_representation(antichain(2))
    assert pair.intervals == ((0, 0), (0, 0))
    assert doubly_critical_pairs(antichain(2)) == {(0, 1)}
    assert standard_representation(chain(3)).intervals == ((0, 0), (1, 1), (2, 2))


def test_downset_representation_examples():
    assert downset_interval_representation(chain(3)).intervals == ((0, 0), (1, 1), (2, 2))
    rep = downset_interval_representation(semiorder(4))
    assert rep.chain_length == 3
    assert rep.is_injective() and rep.represents(semiorder(4))
    # each vertex of the antichain gets its own start; all intervals share the last position
    rep = downset_interval_representation(antichain(3))
    assert rep.intervals == ((0, 2), (1, 2), (2, 2))
    assert rep.is_injective() and rep.represents(antichain(3))


def test_discrimination_report_on_semiorders():
    for n in range(2, 10):
        assert all(discrimination_report(standard_representation(semiorder(n))).values())


def test_singular_examples():
    assert singular_vertices(chain(4)) == {0, 1, 2, 3}
    for n in range(4, 12):
        assert singular_vertices(semiorder(n)) == {0, n - 1}
    assert singular_vertices(TWO_TWO) == frozenset()


def test_lex_sum_examples():
    one = chain(1)
    assert lex_sum(LexSumSpec(chain(2), (one, one))) == chain(2)
    assert lex_sum(LexSumSpec(antichain(2), (chain(2), chain(2)))) == TWO_TWO
    assert lex_sum(LexSumSpec(semiorder(4), (one,) * 4)) == semiorder(4).with_names(None)
    with pytest.raises(SpecError):
        LexSumSpec(chain(1), (one,))
    with pytest.raises(SpecError):
        LexSumSpec(chain(2), (one,))


def test_lex_sum_validity_examples():
    verdict = is_valid_interval_lex_sum(LexSumSpec(antichain(2), (chain(2), chain(2))))
    assert not verdict and "antichain" in verdict.reason
    comps = (chain(2),) + (chain(1),) * 4
    assert is_valid_interval_lex_sum(LexSumSpec(semiorder(5), comps))
    assert is_interval_order(lex_sum(LexSumSpec(semiorder(5), comps)))
    bad = (chain(1), chain(2)) + (chain(1),) * 3
    assert not is_valid_interval_lex_sum(LexSumSpec(semiorder(5), bad))
    assert not is_interval_order(lex_sum(LexSumSpec(semiorder(5), bad)))
    assert is_valid_interval_lex_sum(LexSumSpec(chain(3), (semiorder(5), antichain(2), chain(3))))


@given(posets(max_n=8))
def test_am_chain_matches_oracle_and_order(P):
    if not is_interval_order(P):
        with pytest.raises(NotIntervalOrderError):
            am_chain(P)
        return
    c = am_chain(P)
    assert set(c.antichains) == oracle.all_maximal_antichains(P)
    masks = [_mask(a) for a in c.antichains]
    for a, b in zip(masks, masks[1:]):
        assert antichain_leq(P, a, b) and a != b


def test_am_chain_matches_oracle_up_to_15():
    rng = np.random.default_rng(3)
    for n in range(9, 16):
        P = random_interval_order(rng, n)
        assert set(am_chain(P).antichains) == oracle.all_maximal_antichains(P)


@given(posets(max_n=7))
def test_characterizations_agree(P):
    free = oracle.find_2plus2(P) is None
    assert is_interval_order(P) == free
    assert upsets_form_chain(P) == free
    assert downsets_form_chain(P) == free
    masks = maximal_antichain_masks(P)
    total = all(antichain_leq(P, a, b) or antichain_leq(P, b, a) for a in masks for b in masks)
    assert total == free


@given(interval_orders())
def test_representations_respect_order(P):
    for rep in (standard_representation(P), downset_interval_representation(P)):
        lo = np.array([iv[0] for iv in rep.intervals])
        hi = np.array([iv[1] for iv in rep.intervals])
        assert np.array_equal(hi[:, None] < lo[None, :], P.lt)
        assert rep.covers_chain()
    assert downset_interval_representation(P).is_injective()


@given(interval_orders())
def test_standard_injective_iff_no_doubly_critical(P):
    assert standard_representation(P).is_injective() == (not doubly_critical_pairs(P))


@given(interval_orders())
def test_standard_representation_is_discriminating(P):
    assert all(discrimination_report(standard_representation(P)).values())


@given(interval_orders())
def test_singular_definitions_agree(P):
    sing = singular_vertices(P)
    assert sing == singular_vertices_by_antichains(P)
    chain_ = am_chain(P)
    home = {v: chain_.membership[v][0] for v in sing}
    for x in sing:
        for y in sing:
            if x != y and not P.comparable(x, y):
                assert home[x] == home[y]


def test_singulars_of_prime_interval_orders_form_a_chain():
    rng = np.random.default_rng(11)
    seen = 0
    for _ in range(400):
        P = random_interval_order(rng, int(rng.integers(4, 10)))
        if is_prime(P):
            seen += 1
            assert is_chain(P.induced(sorted(singular_vertices(P))))
    assert seen > 5


def test_lex_sum_validity_agrees_with_recognition():
    rng = np.random.default_rng(5)
    for _ in range(300):
        spec = random_lex_spec(rng)
        S = lex_sum(spec)
        assert S.n <= 14
        assert bool(is_valid_interval_lex_sum(spec)) == is_interval_order(S)


def test_lex_sum_restricts_to_components():
    rng = np.random.default_rng(9)
    for _ in range(50):
        spec = random_lex_spec(rng)
        S = lex_sum(spec)
        for blk, comp in zip(spec.blocks(), spec.components):
            assert S.induced(blk) == comp.with_names(None)


def _singular_index_rule(spec) -> bool:
    """The criterion without the pairwise condition on non-antichain components."""
    Q = spec.index
    if not is_interval_order(Q) or not all(is_interval_order(c) for c in spec.components):
        return False
    thick = [i for i, c in enumerate(spec.components) if c.n > 1 and c.lt.any()]
    if not Q.lt.any():
        return len(thick) <= 1
    return all(i in singular_vertices(Q) for i in thick)


def test_singular_indices_alone_are_not_enough():
    # bottom vertex 2 below the antichain {0, 1, 3}: every index is singular
    Q = poset_from_pairs(4, [(2, 0), (2, 1), (2, 3)])
    assert singular_vertices(Q) == {0, 1, 2, 3}
    spec = LexSumSpec(Q, (chain(2), chain(1), chain(1), chain(2)))
    assert _singular_index_rule(spec)
    assert not is_interval_order(lex_sum(spec))
    verdict = is_valid_interval_lex_sum(spec)
    assert not verdict and "incomparable indices" in verdict.reason


def test_singular_rule_is_exact_over_prime_indices():
    rng = np.random.default_rng(21)
    checked = 0
    for _ in range(300):
        spec = random_lex_spec(rng)
        if spec.index.n >= 4 and is_prime(spec.index):
            checked += 1
            assert _singular_index_rule(spec) == is_interval_order(lex_sum(spec))
    assert checked
