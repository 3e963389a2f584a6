import pytest

from hyperring.construct import (
    HypothesisUnmet, IllDefinedQuotient, NotHomomorphism, check_good_homomorphism,
    diagonal_embedding, gamma_star, identity_map, image_ideal, matrix_ideal_mask,
    matrix_ring, preimage_ideal, product_injections, product_projections, product_ring,
    quotient_ring, split_rectangle, subhyperring, zn_template,
)
from hyperring.hypercore import CapExceeded, label, members
from hyperring.ideals import Hyperideal, ideal, ideal_masks, is_local, maximal_masks
from oracle import Naive, coset_quotient, gamma_classes


def test_gamma_star_matches_oracle(catalog):
    for e in catalog:
        if e.ring.n > 12:
            continue
        fq = gamma_star(e.ring)
        assert [members(c) for c in fq.classes] == gamma_classes(Naive.from_ring(e.ring)), e.name


@pytest.mark.parametrize("n", range(2, 13))
def test_gamma_star_of_ordinary_ring_is_itself(n):
    r = zn_template(n, (1,))
    fq = gamma_star(r)
    assert len(fq.classes) == n
    assert fq.projection == tuple(range(n))
    assert [list(row) for row in fq.class_add] == [list(row) for row in r.add]
    assert all(1 << fq.class_mul[a][b] == r.mul[a][b] for a in range(n) for b in range(n))


def test_gamma_star_z4h_collapses(z4h):
    fq = gamma_star(z4h)
    assert [label(c) for c in fq.classes] == ["0,1,2,3"]
    assert fq.ring.n == 1


def test_gamma_star_z6a_partition(z6a):
    assert [label(c) for c in gamma_star(z6a).classes] == ["0,1,2,3,4,5"]


def test_product_ring_z4h_squared(z4h):
    p = product_ring(z4h, z4h)
    assert p.n == 16
    assert not is_local(p)
    assert sorted(label(m) for m in maximal_masks(p)) == sorted(
        ["0,1,2,3,8,9,10,11", "0,2,4,6,8,10,12,14"])
    for m in ideal_masks(p):
        assert split_rectangle(p, m) is not None


def test_product_with_trivial_ring_is_isomorphic(z4h):
    p = product_ring(z4h, zn_template(1, (1,)))
    assert p.to_json()["mul"] == z4h.to_json()["mul"]
    assert p.to_json()["add"] == z4h.to_json()["add"]


def test_product_of_ordinary_rings():
    p = product_ring(zn_template(2, (1,)), zn_template(3, (1,)))
    assert p.n == 6
    assert all(bin(p.mul[a][b]).count("1") == 1 for a in range(6) for b in range(6))


def test_product_cap(z4h):
    with pytest.raises(CapExceeded):
        product_ring(z4h, zn_template(5, (1,)))


@pytest.mark.parametrize("label_j", ["0,2"])
def test_quotient_z4h(z4h, label_j):
    q = quotient_ring(z4h, ideal(z4h, {0, 2}))
    cosets, add, mul = coset_quotient(Naive.from_ring(z4h), {0, 2})
    doc = q.ring.to_json()
    assert q.ring.n == 2
    assert doc["add"] == add and doc["mul"] == mul
    assert doc["mul"] == [[[0], [0]], [[0], [0, 1]]]
    assert q.projection == (0, 1, 0, 1)


def test_quotient_z6a(z6a):
    q = quotient_ring(z6a, ideal(z6a, {0, 3}))
    _, add, mul = coset_quotient(Naive.from_ring(z6a), {0, 3})
    assert q.ring.n == 3
    assert q.ring.to_json()["mul"] == mul == [[[0], [0], [0]], [[0], [0, 2], [0, 1]],
                                              [[0], [0, 1], [0, 2]]]
    assert q.ring.to_json()["add"] == add


def test_quotient_by_zero_is_isomorphic(z4h):
    q = quotient_ring(z4h, ideal(z4h, {0}))
    assert q.ring.to_json()["mul"] == z4h.to_json()["mul"]


def test_quotient_projection_is_good(catalog):
    for e in catalog:
        if e.ring.n > 12:
            continue
        for m in ideal_masks(e.ring):
            if m == e.ring.full:
                continue
            try:
                q = quotient_ring(e.ring, Hyperideal(e.ring, m))
            except IllDefinedQuotient:
                continue
            h = check_good_homomorphism(e.ring, q.ring, q.projection)
            assert h.kernel == m and h.surjective


def test_matrix_over_z2():
    m = matrix_ring(zn_template(2, (1,)))
    assert m.n == 16
    assert all(bin(m.mul[a][b]).count("1") == 1 for a in range(16) for b in range(16))


def test_matrix_diagonal_embedding_multiplies(z4h):
    m = matrix_ring(z4h)
    for x in range(4):
        for y in range(4):
            expect = 0
            for e in members(z4h.mul[x][y]):
                expect |= 1 << diagonal_embedding(z4h, e)
            got = m.mul[diagonal_embedding(z4h, x)][diagonal_embedding(z4h, y)]
            assert got == expect


def test_matrix_ideal_membership(z4h):
    mi = matrix_ideal_mask(z4h, 0b101)
    assert mi >> diagonal_embedding(z4h, 2) & 1
    assert not mi >> diagonal_embedding(z4h, 1) & 1
    assert bin(mi).count("1") == 16


def test_matrix_cap():
    with pytest.raises(CapExceeded):
        matrix_ring(zn_template(5, (1,)))


def test_identity_homomorphism(z4h):
    h = identity_map(z4h)
    i = ideal(z4h, {0, 2})
    assert preimage_ideal(h, i) == i
    assert image_ideal(h, i) == i


def test_projection_preimage(z4h):
    p = product_ring(z4h, z4h)
    pi1 = product_projections(p)[0]
    assert pi1.surjective
    pre = preimage_ideal(pi1, ideal(z4h, {0, 2}))
    assert label(pre.members) == "0,1,2,3,8,9,10,11"


def test_injections_are_good_but_not_unital(z4h):
    p = product_ring(z4h, z4h)
    inj = product_injections(p)
    assert len(inj) == 2
    assert all(h.injective and not h.surjective for h in inj)


def test_bad_map_rejected(z4h):
    with pytest.raises(NotHomomorphism):
        check_good_homomorphism(z4h, z4h, [0, 2, 0, 2])


def test_image_needs_epimorphism(z4h):
    p = product_ring(z4h, z4h)
    inj = product_injections(p)[0]
    with pytest.raises(HypothesisUnmet):
        image_ideal(inj, ideal(z4h, {0}))


def test_subhyperring_extraction(z4h):
    t, elems = subhyperring(z4h, 0b101)
    assert elems == (0, 2) and t.n == 2
    with pytest.raises(ValueError):
        subhyperring(z4h, 0b011)
