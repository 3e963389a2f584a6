from functools import cached_property

import pytest

from hyperring import classify as cl
from hyperring.classify import NotProper, NotWeakly, PreconditionFailed, TripleZero
from hyperring.construct import zn_template
from hyperring.ideals import Hyperideal, generate_hyperideal, ideal, proper_ideal_masks
from oracle import Naive, fmask

ORACLE_CLASSES = {
    "prime": (cl.is_prime, Naive.is_prime),
    "primary": (cl.is_primary, Naive.primary),
    "one_abs_prime": (cl.is_one_absorbing_prime, Naive.one_abs_prime),
    "one_abs_primary": (cl.is_one_absorbing_primary, Naive.one_abs_primary),
    "strongly": (cl.is_strongly_one_absorbing_primary, Naive.strongly),
    "weakly": (cl.is_weakly_one_absorbing_primary, Naive.weakly),
    "two_absorbing": (cl.is_two_absorbing, Naive.two_absorbing),
    "two_absorbing_primary": (cl.is_two_absorbing_primary, Naive.two_absorbing_primary),
}


class CyclicNaive(Naive):
    """Naive oracle for ℤ_n templates: every hyperideal is an additive
    subgroup dℤ_n, so candidates come from divisors instead of 2^n subsets."""

    @cached_property
    def ideals(self):
        out = []
        for d in range(1, self.n + 1):
            if self.n % d == 0:
                s = frozenset(range(0, self.n, d))
                if self.is_ideal(s):
                    out.append(s)
        return out


@pytest.mark.parametrize("name", sorted(ORACLE_CLASSES))
def test_classes_agree_with_oracle(catalog, name):
    ours, theirs = ORACLE_CLASSES[name]
    checked = 0
    for e in catalog:
        if e.ring.n > 12:
            continue
        n = Naive.from_ring(e.ring)
        for s in n.proper:
            got = bool(ours(Hyperideal(e.ring, fmask(s))))
            assert got == theirs(n, s), (e.name, sorted(s))
            checked += 1
    assert checked > 100


def test_z4h_zero_two_classification(z4h):
    rep = cl.classify(ideal(z4h, {0, 2})).to_json()
    for k in ("prime", "primary", "one_abs_prime", "one_abs_primary",
              "strongly_one_abs_primary", "weakly_one_abs_primary",
              "two_absorbing", "two_absorbing_primary"):
        assert rep[k] is True, k
    assert rep["is_c_hyperideal"] is False
    assert rep["radical"] == "0,2"


def test_z4h_zero_ideal_chain(z4h):
    rep = cl.classify(ideal(z4h, {0})).to_json()
    assert rep["weakly_one_abs_primary"] and rep["weakly_vacuous"]
    if rep["strongly_one_abs_primary"]:
        assert rep["one_abs_primary"]
    if rep["one_abs_primary"]:
        assert rep["two_absorbing_primary"]


def test_z6a_zero_three(z6a):
    rep = cl.classify(ideal(z6a, {0, 3})).to_json()
    assert rep["one_abs_primary"] is True
    assert rep["one_abs_prime"] is True
    assert rep["strongly_one_abs_primary"] is False
    assert rep["witnesses"]["strongly_one_abs_primary"] == [1, 1, 3]


def test_surrogate_fifteen_is_weakly_but_not_one_abs_primary():
    r = zn_template(30, (2, 4))
    i = generate_hyperideal(r, {15})
    assert i.label() == "0,15"
    n = CyclicNaive.from_ring(r)
    s = frozenset({0, 15})
    assert n.weakly(s) is True
    assert n.one_abs_primary(s) is False
    assert bool(cl.is_weakly_one_absorbing_primary(i)) is True
    assert bool(cl.is_one_absorbing_primary(i)) is False


def test_witness_is_replayable(catalog):
    for e in catalog:
        r = e.ring
        for m in proper_ideal_masks(r):
            c = cl.is_one_absorbing_primary(Hyperideal(r, m))
            if not c:
                x, y, z = c.witness
                assert r.triple[x][y][z] & ~m == 0
                assert r.mul[x][y] & ~m != 0


def test_not_proper_rejected(z4h):
    with pytest.raises(NotProper):
        cl.is_prime(Hyperideal(z4h, z4h.full))


def test_triple_zero_search_requires_weakly():
    r = zn_template(8, (1,))
    bad = [m for m in proper_ideal_masks(r)
           if not cl.is_weakly_one_absorbing_primary(Hyperideal(r, m))]
    for m in bad:
        with pytest.raises(NotWeakly):
            cl.find_one_triple_zeros(Hyperideal(r, m))


def test_triple_zeros_z6():
    r = zn_template(6, (1,))
    zero = ideal(r, {0})
    found = cl.find_one_triple_zeros(zero)
    assert found[0] == TripleZero(2, 2, 3)
    assert all(cl.is_one_triple_zero(zero, t.x, t.y, t.z) for t in found)


def test_free_triple_zero_z4h(z4h):
    i = ideal(z4h, {0, 2})
    assert cl.find_one_triple_zeros(i) == []
    assert cl.is_free_one_triple_zero(i, i, i, i)


def test_not_free_triple_zero_z6():
    r = zn_template(6, (1,))
    zero, two, three = ideal(r, {0}), generate_hyperideal(r, {2}), generate_hyperideal(r, {3})
    assert cl.is_free_one_triple_zero(zero, two, two, three) is False
    with pytest.raises(PreconditionFailed):
        cl.is_free_one_triple_zero(zero, two, two, two)


def test_implication_chains_exhaustive(catalog):
    for e in catalog:
        r = e.ring
        for m in proper_ideal_masks(r):
            rep = cl.classify(Hyperideal(r, m))
            if rep.prime:
                assert rep.one_abs_prime
            if rep.one_abs_prime:
                assert rep.two_absorbing and rep.one_abs_primary
            if rep.primary:
                assert rep.one_abs_primary
            if rep.one_abs_primary:
                assert rep.two_absorbing_primary and rep.weakly_one_abs_primary
            if rep.strongly_one_abs_primary:
                assert rep.one_abs_primary
