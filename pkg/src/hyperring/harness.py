"""Exhaustive theorem checks over a catalog of finite hyperrings.

Each assertion is a pair of functions: an instance generator yielding
witness dicts, and ``evaluate(ctx, witness) -> (hypothesis, conclusion)``.
Witnesses are plain JSON (ideals as ``"0,2"`` labels, homomorphisms by name),
so any reported counterexample can be replayed with :func:`replay`.
Biconditionals are split into ``[=>]`` and ``[<=]`` assertions.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional

from . import classify as cl
from .catalog import (
    Catalog, CatalogEntry, homomorphism_pool, injections_from, quotient_of, subring_fixtures,
)
from .construct import (
    GoodHomomorphism, diagonal_embedding, gamma_star, matrix_ideal_mask, matrix_ring,
    split_rectangle, subhyperring,
)
from .hypercore import (
    FiniteHyperring, is_integral_hyperdomain, is_hyperfield, is_irreducible, is_prime_element,
    is_reduced, is_regular_ring, is_subset, label, members, parse_label, principal_multiples,
    to_mask,
)
from .ideals import (
    Hyperideal, colon_mask, ideal_masks, is_c_hyperideal, is_hyperideal, maximal_masks,
    nilradical_mask, product_mask, proper_ideal_masks, radical_mask, _generate,
)

MODES = ("all", "c-only")
OUTCOMES = ("pass", "vacuous", "counterexample")

_PREDICATES = {
    "prime": cl.is_prime,
    "primary": cl.is_primary,
    "oaprime": cl.is_one_absorbing_prime,
    "oap": cl.is_one_absorbing_primary,
    "strongly": cl.is_strongly_one_absorbing_primary,
    "weakly": cl.is_weakly_one_absorbing_primary,
    "tap": cl.is_two_absorbing_primary,
    "two_abs": cl.is_two_absorbing,
}


def holds(ring: FiniteHyperring, cls: str, m: int) -> bool:
    """Class membership of the subset ``m``; False for non-proper or non-ideals."""
    if m == ring.full:
        return False
    key = ("cls", cls, m)
    got = ring.cache.get(key)
    if got is None:
        if m not in ideal_masks(ring):
            got = False
        else:
            got = bool(_PREDICATES[cls](Hyperideal(ring, m)))
        ring.cache[key] = got
    return got


def ideal_vars(ring: FiniteHyperring, mode: str) -> tuple[int, ...]:
    """Proper hyperideals an ideal variable ranges over in ``mode``."""
    proper = proper_ideal_masks(ring)
    if mode == "all":
        return proper
    return ring.memo("c_vars", lambda: tuple(
        m for m in proper if is_c_hyperideal(Hyperideal(ring, m))))


def is_local(ring: FiniteHyperring) -> bool:
    return len(maximal_masks(ring)) == 1


def unique_maximal(ring: FiniteHyperring) -> Optional[int]:
    ms = maximal_masks(ring)
    return ms[0] if len(ms) == 1 else None


class Ctx:
    def __init__(self, entry: CatalogEntry, catalog: Catalog, mode: str):
        self.entry = entry
        self.ring = entry.ring
        self.catalog = catalog
        self.mode = mode

    @cached_property
    def vars(self) -> tuple[int, ...]:
        return ideal_vars(self.ring, self.mode)

    def proper_ideal(self, m: int) -> bool:
        return m != self.ring.full and m in ideal_masks(self.ring)

    def is_(self, cls: str, m: int) -> bool:
        return holds(self.ring, cls, m)

    def rad(self, m: int) -> int:
        return radical_mask(self.ring, m)

    @cached_property
    def rad0(self) -> int:
        return nilradical_mask(self.ring)

    @cached_property
    def local(self) -> bool:
        return is_local(self.ring)

    @cached_property
    def M(self) -> Optional[int]:
        return unique_maximal(self.ring)

    @cached_property
    def zero(self) -> int:
        return 1 << self.ring.zero

    def is_maximal(self, m: int) -> bool:
        return m in maximal_masks(self.ring)

    def is_prime_ideal(self, m: int) -> bool:
        return self.is_("prime", m)

    @cached_property
    def homs(self) -> list[GoodHomomorphism]:
        return homomorphism_pool(self.entry) + injections_from(self.catalog, self.entry)

    def hom(self, name: str) -> GoodHomomorphism:
        for h in self.homs:
            if h.name == name:
                return h
        raise KeyError(name)

    def sub(self, a: int, b: int) -> bool:
        return is_subset(a, b)


@dataclass(frozen=True)
class Assertion:
    id: str
    instances: Callable[[Ctx], Iterable[dict]]
    evaluate: Callable[[Ctx, dict], tuple[bool, bool]]
    applies: Callable[[Ctx], bool]

    @property
    def family(self) -> str:
        return self.id.split("[")[0]


REGISTRY: dict[str, Assertion] = {}


def check(tid: str, over: Callable[[Ctx], Iterable[dict]],
          applies: Callable[[Ctx], bool] = lambda c: True):
    def deco(fn):
        if tid in REGISTRY:
            raise ValueError(f"duplicate assertion {tid}")
        REGISTRY[tid] = Assertion(tid, over, fn, applies)
        return fn
    return deco


# -- instance generators ---------------------------------------------------------

def L(m: int) -> str:
    return label(m)


def P(text: str) -> int:
    return parse_label(text)


def over_ring(c: Ctx):
    yield {}


def over_I(c: Ctx):
    for m in c.vars:
        yield {"I": L(m)}


def over_nonzero_I(c: Ctx):
    for m in c.vars:
        if m != c.zero:
            yield {"I": L(m)}


def over_I_pairs(c: Ctx):
    for a, b in itertools.combinations(c.vars, 2):
        yield {"I1": L(a), "I2": L(b)}


def over_I_J(c: Ctx):
    for a in c.vars:
        for b in c.vars:
            yield {"I": L(a), "J": L(b)}


def over_elements(c: Ctx):
    for x in range(c.ring.n):
        yield {"x": x}


def _filtered_I(c: Ctx, cls: str):
    return [m for m in c.vars if c.is_(cls, m)]


def over_I_with(cls: str):
    def gen(c: Ctx):
        for m in _filtered_I(c, cls):
            yield {"I": L(m)}
    return gen


def over_I_nonunit_outside(cls: str, key: str = "z"):
    def gen(c: Ctx):
        for m in _filtered_I(c, cls):
            for z in c.ring.nonunits:
                if not m >> z & 1:
                    yield {"I": L(m), key: z}
    return gen


def over_I_x_y_J(cls: str, jkey: str = "J"):
    def gen(c: Ctx):
        nu = c.ring.nonunits
        for m in _filtered_I(c, cls):
            for x in nu:
                for y in nu:
                    for j in c.vars:
                        yield {"I": L(m), "x": x, "y": y, jkey: L(j)}
    return gen


def over_I_with_J(cls: str):
    def gen(c: Ctx):
        for m in _filtered_I(c, cls):
            for j in c.vars:
                yield {"I": L(m), "J": L(j)}
    return gen


def over_I_triples(cls: Optional[str], keys=("J", "H", "K")):
    def gen(c: Ctx):
        ims = _filtered_I(c, cls) if cls else c.vars
        for m in ims:
            for t in itertools.product(c.vars, repeat=3):
                w = {"I": L(m)}
                w.update({k: L(v) for k, v in zip(keys, t)})
                yield w
    return gen


def triple_prod(c: Ctx, a: int, b: int, d: int) -> int:
    return cl.triple_product_mask(c.ring, a, b, d)


def ideal_triple_condition(c: Ctx, m: int, target: int, keys=("J", "H", "K")) -> bool:
    """∀ proper J,H,K: J∘H∘K ⊆ I ⇒ J∘H ⊆ I or K ⊆ target."""
    ring = c.ring
    proper = proper_ideal_masks(ring)
    for j, h in itertools.product(proper, repeat=2):
        jh = ring.mul_sets(j, h)
        if is_subset(jh, m):
            continue
        for k in proper:
            if is_subset(ring.mul_sets(jh, k), m) and not is_subset(k, target):
                return False
    return True


# -- section 3: 1-absorbing prime ---------------------------------------------

@check("T3.RADICAL[sqrt]", over_I_with("oaprime"))
def _t3_radical_sqrt(c, w):
    m = P(w["I"])
    return c.is_("oaprime", m), c.is_prime_ideal(c.rad(m))


@check("T3.RADICAL[colon]", over_I_nonunit_outside("oaprime"))
def _t3_radical_colon(c, w):
    m, z = P(w["I"]), w["z"]
    hyp = c.is_("oaprime", m) and not c.ring.is_unit(z) and not m >> z & 1
    return hyp, c.is_prime_ideal(colon_mask(c.ring, m, 1 << z))


@check("T3.LOCALLEM", over_ring)
def _t3_locallem(c, w):
    ring = c.ring
    units = members(ring.units)
    hyp = bool(units) and all(ring.is_unit(ring.add[u][v])
                              for u in ring.nonunits for v in units)
    return hyp, c.local


@check("T3.NOTPRIME", over_I_with("oaprime"))
def _t3_notprime(c, w):
    m = P(w["I"])
    return c.is_("oaprime", m) and not c.is_("prime", m), c.local


def _xyj(c, w, cls, target_of):
    m, x, y, j = P(w["I"]), w["x"], w["y"], P(w["J"])
    ring = c.ring
    xy = ring.mul[x][y]
    hyp = (c.is_(cls, m) and c.proper_ideal(j) and not ring.is_unit(x)
           and not ring.is_unit(y) and is_subset(ring.mul_sets(xy, j), m))
    return hyp, is_subset(xy, m) or is_subset(j, target_of(m))


@check("T3.XYJ", over_I_x_y_J("oaprime"))
def _t3_xyj(c, w):
    return _xyj(c, w, "oaprime", lambda m: m)


@check("T3.P2C", over_I)
def _t3_p2c(c, w):
    m = P(w["I"])
    p = c.rad(m)
    if not (c.is_("primary", m) and c.is_prime_ideal(p)):
        return False, True
    p2 = product_mask(c.ring, p, p)
    hyp = all(is_subset(colon_mask(c.ring, p2, 1 << x), m) for x in members(p & ~m))
    return hyp, c.is_("oaprime", m)


def _matrix_applies(c: Ctx) -> bool:
    return c.ring.n <= 4 and c.ring.scalar_identities != 0


def _matrix(c: Ctx):
    return c.ring.memo("matrix2", lambda: matrix_ring(c.ring))


@check("T3.MATRIX", over_I, applies=_matrix_applies)
def _t3_matrix(c, w):
    ring = c.ring
    m = P(w["I"])
    mr = _matrix(c)
    mi = matrix_ideal_mask(ring, m)
    if mi == mr.full or not is_hyperideal(mr, mi):
        return False, True
    d = [diagonal_embedding(ring, x) for x in range(ring.n)]
    nu = [x for x in range(ring.n) if not mr.is_unit(d[x])]
    hyp = True
    for x in nu:
        for y in nu:
            dxy = mr.mul[d[x]][d[y]]
            if is_subset(dxy, mi):
                continue
            for z in nu:
                if is_subset(mr.set_times_elem(dxy, d[z]), mi) and not mi >> d[z] & 1:
                    hyp = False
    return hyp, c.is_("oaprime", m)


def _gamma_applies(c: Ctx) -> bool:
    return c.ring.scalar_identities != 0


def _gamma_image(c: Ctx, m: int) -> tuple[FiniteHyperring, int]:
    fq = gamma_star(c.ring)
    return fq.ring, to_mask(fq.projection[e] for e in members(m))


@check("T3.GAMMA[=>]", over_I, applies=_gamma_applies)
def _t3_gamma_fwd(c, w):
    m = P(w["I"])
    q, img = _gamma_image(c, m)
    return c.is_("oaprime", m), holds(q, "oaprime", img)


@check("T3.GAMMA[<=]", over_I, applies=_gamma_applies)
def _t3_gamma_bwd(c, w):
    m = P(w["I"])
    q, img = _gamma_image(c, m)
    return holds(q, "oaprime", img), c.is_("oaprime", m)


def _ideal3_fwd(c, w, cls, target_of):
    m, j, h, k = P(w["I"]), P(w["J"]), P(w["H"]), P(w["K"])
    ring = c.ring
    jh = ring.mul_sets(j, h)
    hyp = (c.is_(cls, m) and all(c.proper_ideal(t) for t in (j, h, k))
           and is_subset(ring.mul_sets(jh, k), m))
    return hyp, is_subset(jh, m) or is_subset(k, target_of(m))


@check("T3.IDEAL3[=>]", over_I_triples("oaprime"))
def _t3_ideal3_fwd(c, w):
    return _ideal3_fwd(c, w, "oaprime", lambda m: m)


@check("T3.IDEAL3[<=]", over_I)
def _t3_ideal3_bwd(c, w):
    m = P(w["I"])
    return ideal_triple_condition(c, m, m), c.is_("oaprime", m)


# -- section 4: 1-absorbing primary ---------------------------------------------

@check("T4.CHAIN[primary=>1ap]", over_I_with("primary"))
def _t4_chain_a(c, w):
    m = P(w["I"])
    return c.is_("primary", m), c.is_("oap", m)


@check("T4.CHAIN[1ap=>2ap]", over_I_with("oap"))
def _t4_chain_b(c, w):
    m = P(w["I"])
    return c.is_("oap", m), c.is_("tap", m)


@check("T4.RADICAL", over_I_with("oap"))
def _t4_radical(c, w):
    m = P(w["I"])
    return c.is_("oap", m), c.is_prime_ideal(c.rad(m))


@check("T4.NOTPRIMARY", over_I_with("oap"))
def _t4_notprimary(c, w):
    m = P(w["I"])
    return c.is_("oap", m) and not c.is_("primary", m), c.local


@check("T4.NONLOCAL[=>]", over_I)
def _t4_nonlocal_fwd(c, w):
    m = P(w["I"])
    return not c.local and c.is_("oap", m), c.is_("primary", m)


@check("T4.NONLOCAL[<=]", over_I)
def _t4_nonlocal_bwd(c, w):
    m = P(w["I"])
    return not c.local and c.is_("primary", m), c.is_("oap", m)


def _is_product(c: Ctx) -> bool:
    return "factors" in c.ring.cache


def rectangular_primary(ring: FiniteHyperring, m: int) -> bool:
    """m = I1 × R2 with I1 primary, or R1 × I2 with I2 primary."""
    r1, r2 = ring.cache["factors"]
    split = split_rectangle(ring, m)
    if split is None:
        return False
    m1, m2 = split
    return ((m2 == r2.full and holds(r1, "primary", m1))
            or (m1 == r1.full and holds(r2, "primary", m2)))


def _product_pair(name: str, left: Callable, right: Callable):
    @check(name, over_I, applies=_is_product)
    def _f(c, w):
        m = P(w["I"])
        return left(c, m), right(c, m)
    return _f


_oap = lambda c, m: c.is_("oap", m)
_primary = lambda c, m: c.is_("primary", m)
_rect = lambda c, m: rectangular_primary(c.ring, m)
_product_pair("T4.PRODUCT[1=>2]", _oap, _primary)
_product_pair("T4.PRODUCT[2=>1]", _primary, _oap)
_product_pair("T4.PRODUCT[2=>3]", _primary, _rect)
_product_pair("T4.PRODUCT[3=>2]", _rect, _primary)


def _prime_element_hyp(c: Ctx, x: int) -> bool:
    ring = c.ring
    return (c.local and ring.strongly_distributive and x != ring.zero
            and not ring.is_unit(x) and is_prime_element(ring, x))


@check("T4.IRRED", over_elements)
def _t4_irred(c, w):
    x = w["x"]
    if not _prime_element_hyp(c, x):
        return False, True
    return True, is_irreducible(c.ring, x)


@check("T4.XM", over_elements)
def _t4_xm(c, w):
    ring, x = c.ring, w["x"]
    if not _prime_element_hyp(c, x) or not c.M >> x & 1:
        return False, True
    if c.M == _generate(ring, principal_multiples(ring, x)):
        return False, True
    j = _generate(ring, ring.elem_times_set(x, c.M))
    return True, c.is_("oap", j) and not c.is_("primary", j)


def _over_witness_pairs(c: Ctx):
    nu = c.ring.nonunits
    for m in _filtered_I(c, "oap"):
        if c.is_("primary", m):
            continue
        rad = c.rad(m)
        for x in nu:
            for y in nu:
                if (not m >> x & 1 and not rad >> y & 1
                        and is_subset(c.ring.mul[x][y], m)):
                    yield {"I": L(m), "x": x, "y": y}


@check("T4.WITNESS", _over_witness_pairs)
def _t4_witness(c, w):
    ring = c.ring
    m, x, y = P(w["I"]), w["x"], w["y"]
    hyp = (c.is_("oap", m) and not c.is_("primary", m)
           and not ring.is_unit(x) and not ring.is_unit(y)
           and not m >> x & 1 and not c.rad(m) >> y & 1
           and is_subset(ring.mul[x][y], m))
    return hyp, hyp and is_irreducible(ring, x)


def _over_P(c: Ctx):
    for m in c.vars:
        if c.is_prime_ideal(m):
            yield {"P": L(m)}


@check("T4.PM", _over_P)
def _t4_pm(c, w):
    p = P(w["P"])
    if not (c.local and c.is_prime_ideal(p) and is_subset(p, c.M)):
        return False, True
    return True, c.is_("oap", product_mask(c.ring, p, c.M))


@check("T4.COLON", over_I_nonunit_outside("oap", "a"))
def _t4_colon(c, w):
    m, a = P(w["I"]), w["a"]
    hyp = c.is_("oap", m) and not c.ring.is_unit(a) and not m >> a & 1
    return hyp, c.is_("primary", colon_mask(c.ring, m, 1 << a))


def _families(c: Ctx, cls: str, need_prime: bool):
    groups: dict[int, list[int]] = {}
    for m in _filtered_I(c, cls):
        groups.setdefault(c.rad(m), []).append(m)
    for p in sorted(groups):
        if need_prime and not c.is_prime_ideal(p):
            continue
        fam = groups[p]
        for a, b in itertools.combinations(fam, 2):
            yield {"ideals": [L(a), L(b)]}
        if len(fam) > 2:
            yield {"ideals": [L(x) for x in fam]}


def _cap(c, w, cls, need_prime):
    ms = [P(t) for t in w["ideals"]]
    rads = {c.rad(m) for m in ms}
    hyp = all(c.is_(cls, m) for m in ms) and len(rads) == 1
    if need_prime:
        hyp = hyp and c.is_prime_ideal(next(iter(rads)))
    inter = c.ring.full
    for m in ms:
        inter &= m
    concl = c.is_(cls, inter) and (not need_prime or c.rad(inter) in rads)
    return hyp, concl


@check("T4.CAP", lambda c: _families(c, "oap", True))
def _t4_cap(c, w):
    return _cap(c, w, "oap", True)


# homomorphism transfer --------------------------------------------------------

def _over_hom_target(cls: str, want: Callable[[GoodHomomorphism], bool]):
    def gen(c: Ctx):
        for h in c.homs:
            if not want(h):
                continue
            for m in ideal_vars(h.target, c.mode):
                if holds(h.target, cls, m):
                    yield {"phi": h.name, "I2": L(m)}
    return gen


def _over_hom_source(cls: str, want: Callable[[GoodHomomorphism], bool]):
    def gen(c: Ctx):
        for h in c.homs:
            if not want(h) or not h.surjective:
                continue
            for m in _filtered_I(c, cls):
                if is_subset(h.kernel, m):
                    yield {"phi": h.name, "I1": L(m)}
    return gen


def _side_condition(h: GoodHomomorphism) -> bool:
    # nonunits must map to nonunits whenever the target is local
    return not is_local(h.target) or h.preserves_nonunits


def _preimage(c, w, cls, want):
    h = c.hom(w["phi"])
    m2 = P(w["I2"])
    hyp = want(h) and holds(h.target, cls, m2)
    return hyp, holds(h.source, cls, h.preimage_mask(m2))


def _image(c, w, cls, want):
    h = c.hom(w["phi"])
    m1 = P(w["I1"])
    hyp = want(h) and h.surjective and is_subset(h.kernel, m1) and c.is_(cls, m1)
    return hyp, holds(h.target, cls, h.image_mask(m1))


_any = lambda h: True
_mono = lambda h: h.injective
_mono_nu = lambda h: h.injective and h.preserves_nonunits


@check("T4.HOM[preimage]", _over_hom_target("oap", _side_condition))
def _t4_hom_pre(c, w):
    return _preimage(c, w, "oap", _side_condition)


@check("T4.HOM[image]", _over_hom_source("oap", _side_condition))
def _t4_hom_img(c, w):
    return _image(c, w, "oap", _side_condition)


def _over_quot(c: Ctx):
    for j in c.vars:
        for i in c.vars:
            if is_subset(j, i):
                yield {"J": L(j), "I": L(i)}


def _quot(c: Ctx, w) -> Optional[tuple[FiniteHyperring, int, int]]:
    j, m = P(w["J"]), P(w["I"])
    if not is_subset(j, m):
        return None
    q = quotient_of(c.ring, j)
    if q is None:
        return None
    qr = q.ring
    if is_local(qr) and any(qr.is_unit(q.projection[x]) for x in c.ring.nonunits):
        return None
    return qr, m, to_mask(q.projection[e] for e in members(m))


@check("T4.QUOT[=>]", _over_quot)
def _t4_quot_fwd(c, w):
    got = _quot(c, w)
    if got is None:
        return False, True
    qr, m, img = got
    return c.is_("oap", m), holds(qr, "oap", img)


@check("T4.QUOT[<=]", _over_quot)
def _t4_quot_bwd(c, w):
    got = _quot(c, w)
    if got is None:
        return False, True
    qr, m, img = got
    return holds(qr, "oap", img), c.is_("oap", m)


@check("T4.XYJRAD", over_I_x_y_J("oap"))
def _t4_xyjrad(c, w):
    return _xyj(c, w, "oap", c.rad)


@check("T4.IDEAL3[=>]", over_I_triples("oap"))
def _t4_ideal3_fwd(c, w):
    return _ideal3_fwd(c, w, "oap", c.rad)


@check("T4.IDEAL3[<=]", over_I)
def _t4_ideal3_bwd(c, w):
    m = P(w["I"])
    return ideal_triple_condition(c, m, c.rad(m)), c.is_("oap", m)


# -- section 5: strongly 1-absorbing primary ------------------------------------

def _over_strong_pairs(c: Ctx):
    ss = _filtered_I(c, "strongly")
    for a, b in itertools.combinations(ss, 2):
        yield {"I1": L(a), "I2": L(b)}


@check("T5.CAP2", _over_strong_pairs)
def _t5_cap2(c, w):
    a, b = P(w["I1"]), P(w["I2"])
    return c.is_("strongly", a) and c.is_("strongly", b), c.is_("strongly", a & b)


def _t5_char_rhs(c: Ctx, m: int) -> bool:
    rad = c.rad(m)
    if c.is_("oap", m) and rad == c.rad0:
        return True
    if c.local and c.M == rad:
        return is_subset(product_mask(c.ring, c.M, c.M), m)
    return False


@check("T5.CHAR[=>]", over_I)
def _t5_char_fwd(c, w):
    m = P(w["I"])
    return c.is_("strongly", m), _t5_char_rhs(c, m)


@check("T5.CHAR[<=]", over_I)
def _t5_char_bwd(c, w):
    m = P(w["I"])
    return _t5_char_rhs(c, m), c.is_("strongly", m)


def _primechar_rhs(c: Ctx, p: int) -> bool:
    return p == c.rad0 or (c.local and c.is_maximal(p))


@check("T5.PRIMECHAR[=>]", _over_P)
def _t5_primechar_fwd(c, w):
    p = P(w["P"])
    return c.is_prime_ideal(p) and c.is_("strongly", p), _primechar_rhs(c, p)


@check("T5.PRIMECHAR[<=]", _over_P)
def _t5_primechar_bwd(c, w):
    p = P(w["P"])
    return c.is_prime_ideal(p) and _primechar_rhs(c, p), c.is_("strongly", p)


def _pm_parts(c: Ctx, w):
    p = P(w["P"])
    if not (c.local and c.is_prime_ideal(p)):
        return None
    return c.is_("strongly", product_mask(c.ring, p, c.M)), p == c.rad0 or p == c.M


@check("T5.PMCHAR[=>]", _over_P)
def _t5_pmchar_fwd(c, w):
    got = _pm_parts(c, w)
    return (False, True) if got is None else got


@check("T5.PMCHAR[<=]", _over_P)
def _t5_pmchar_bwd(c, w):
    got = _pm_parts(c, w)
    return (False, True) if got is None else (got[1], got[0])


def _exist_parts(c: Ctx) -> tuple[bool, bool]:
    exists = any(c.is_("strongly", m) for m in proper_ideal_masks(c.ring))
    return exists, c.is_prime_ideal(c.rad0) or c.local


@check("T5.EXIST[=>]", over_ring)
def _t5_exist_fwd(c, w):
    return _exist_parts(c)


@check("T5.EXIST[<=]", over_ring)
def _t5_exist_bwd(c, w):
    a, b = _exist_parts(c)
    return b, a


@check("T5.NOPROD", over_I, applies=_is_product)
def _t5_noprod(c, w):
    return True, not c.is_("strongly", P(w["I"]))


@check("T5.IDEAL3[=>]", over_I_triples("strongly"))
def _t5_ideal3_fwd(c, w):
    return _ideal3_fwd(c, w, "strongly", lambda m: c.rad0)


@check("T5.IDEAL3[<=]", over_I)
def _t5_ideal3_bwd(c, w):
    m = P(w["I"])
    return ideal_triple_condition(c, m, c.rad0), c.is_("strongly", m)


def _zeroonly_parts(c: Ctx) -> tuple[bool, bool]:
    strong = [m for m in proper_ideal_masks(c.ring) if c.is_("strongly", m)]
    only_zero = strong == [c.zero]
    ring = c.ring
    rhs = is_hyperfield(ring) or (not c.local and is_integral_hyperdomain(ring))
    return only_zero, rhs


@check("T5.ZEROONLY[=>]", over_ring)
def _t5_zeroonly_fwd(c, w):
    return _zeroonly_parts(c)


@check("T5.ZEROONLY[<=]", over_ring)
def _t5_zeroonly_bwd(c, w):
    a, b = _zeroonly_parts(c)
    return b, a


@check("T5.COLONJ", over_I_with_J("oap"))
def _t5_colonj(c, w):
    m, j = P(w["I"]), P(w["J"])
    hyp = c.is_("oap", m) and c.proper_ideal(j) and not is_subset(j, m)
    return hyp, c.is_("primary", colon_mask(c.ring, m, j))


@check("T5.COLONSTRONG", over_I_with_J("oap"))
def _t5_colonstrong(c, w):
    m, j = P(w["I"]), P(w["J"])
    hyp = c.is_("oap", m) and c.proper_ideal(j) and not is_subset(j, c.rad(m))
    return hyp, c.is_("strongly", colon_mask(c.ring, m, j))


@check("T5.HOM[preimage]", _over_hom_target("strongly", _mono))
def _t5_hom_pre(c, w):
    return _preimage(c, w, "strongly", _mono)


@check("T5.HOM[image]", _over_hom_source("strongly", _any))
def _t5_hom_img(c, w):
    return _image(c, w, "strongly", _any)


def _over_subring(c: Ctx):
    for t in subring_fixtures(c.entry):
        for m in _filtered_I(c, "strongly"):
            yield {"T": L(t), "I": L(m)}


def _sub(c: Ctx, t: int):
    return c.ring.memo(("subring", t), lambda: subhyperring(c.ring, t))


@check("T5.SUBRING", _over_subring)
def _t5_subring(c, w):
    t, m = P(w["T"]), P(w["I"])
    tr, elems = _sub(c, t)
    inside = to_mask(i for i, e in enumerate(elems) if m >> e & 1)
    return c.is_("strongly", m), holds(tr, "strongly", inside)


# -- section 6: weakly 1-absorbing primary ---------------------------------------

@check("T6.CHAIN[1ap=>weakly]", over_I_with("oap"))
def _t6_chain_a(c, w):
    m = P(w["I"])
    return c.is_("oap", m), c.is_("weakly", m)


@check("T6.CHAIN[local-nilradical]", over_I)
def _t6_chain_b(c, w):
    m = P(w["I"])
    return c.local and c.M == c.rad0, c.is_("weakly", m)


@check("T6.MAXRAD", over_I_with("weakly"))
def _t6_maxrad(c, w):
    m = P(w["I"])
    return c.is_("weakly", m) and c.is_maximal(c.rad(m)), c.is_("primary", m)


@check("T6.REDUCED", over_nonzero_I)
def _t6_reduced(c, w):
    m = P(w["I"])
    hyp = c.ring.memo("reduced", lambda: is_reduced(c.ring)) and m != c.zero and c.is_("weakly", m)
    return hyp, c.is_prime_ideal(c.rad(m))


def _regular(c: Ctx) -> bool:
    return c.ring.memo("regular_ring", lambda: is_regular_ring(c.ring))


def _regular_pair(name, left, right):
    @check(name, over_nonzero_I)
    def _f(c, w):
        m = P(w["I"])
        return _regular(c) and m != c.zero and c.is_(left, m), c.is_(right, m)
    return _f


_regular_pair("T6.REGULAR[weakly=>primary]", "weakly", "primary")
_regular_pair("T6.REGULAR[primary=>1ap]", "primary", "oap")
_regular_pair("T6.REGULAR[1ap=>weakly]", "oap", "weakly")


def _over_triple_zeros(c: Ctx):
    if not c.ring.strongly_distributive:
        return
    for m in _filtered_I(c, "weakly"):
        for t in cl._triple_zeros(c.ring, m):
            yield {"I": L(m), "x": t.x, "y": t.y, "z": t.z}


def _triple_hyp(c: Ctx, w) -> bool:
    m = P(w["I"])
    return (c.ring.strongly_distributive and c.is_("weakly", m)
            and cl.is_one_triple_zero(Hyperideal(c.ring, m), w["x"], w["y"], w["z"]))


@check("T6.TRIPLE[1]", _over_triple_zeros)
def _t6_triple_1(c, w):
    ring, m = c.ring, P(w["I"])
    concl = bool(ring.mul_sets(ring.mul[w["x"]][w["y"]], m) & c.zero)
    return _triple_hyp(c, w), concl


@check("T6.TRIPLE[2]", _over_triple_zeros)
def _t6_triple_2(c, w):
    ring, m = c.ring, P(w["I"])
    x, y, z = w["x"], w["y"], w["z"]
    col = colon_mask(ring, m, 1 << z)
    hyp = _triple_hyp(c, w) and not col >> x & 1 and not col >> y & 1
    concl = (bool(ring.mul_sets(ring.mul[y][z], m) & c.zero)
             and bool(ring.mul_sets(ring.mul[x][z], m) & c.zero))
    return hyp, concl


@check("T6.CAPFAM", lambda c: _families(c, "weakly", False))
def _t6_capfam(c, w):
    return _cap(c, w, "weakly", False)


def _t6_product_applies(c: Ctx) -> bool:
    if not _is_product(c):
        return False
    return all(r.identities != 0 and not is_hyperfield(r) for r in c.ring.cache["factors"])


def _t6_product_pair(name, left, right):
    @check(name, over_nonzero_I, applies=_t6_product_applies)
    def _f(c, w):
        m = P(w["I"])
        return m != c.zero and left(c, m), right(c, m)
    return _f


_weakly = lambda c, m: c.is_("weakly", m)
_t6_product_pair("T6.PRODUCT[weakly=>rect]", _weakly, _rect)
_t6_product_pair("T6.PRODUCT[rect=>1ap]", _rect, _oap)
_t6_product_pair("T6.PRODUCT[1ap=>primary]", _oap, _primary)
_t6_product_pair("T6.PRODUCT[primary=>weakly]", _primary, _weakly)


@check("T6.HOM[preimage]", _over_hom_target("weakly", _mono_nu))
def _t6_hom_pre(c, w):
    return _preimage(c, w, "weakly", _mono_nu)


@check("T6.HOM[image]", _over_hom_source("weakly", _any))
def _t6_hom_img(c, w):
    return _image(c, w, "weakly", _any)


@check("T6.FREE", over_I_triples("weakly"))
def _t6_free(c, w):
    ring = c.ring
    m, j, h, k = P(w["I"]), P(w["J"]), P(w["H"]), P(w["K"])
    jh = ring.mul_sets(j, h)
    jhk = ring.mul_sets(jh, k)
    hyp = (c.is_("weakly", m) and all(c.proper_ideal(t) for t in (j, h, k))
           and is_subset(jhk, m) and jhk != c.zero
           and cl.free_wrt(ring, m, j, h, k))
    return hyp, is_subset(jh, m) or is_subset(k, c.rad(m))


def _over_klem(c: Ctx):
    nu = c.ring.nonunits
    for m in _filtered_I(c, "weakly"):
        for x in nu:
            for y in nu:
                if is_subset(c.ring.mul[x][y], m):
                    continue
                for k in c.vars:
                    yield {"I": L(m), "x": x, "y": y, "K": L(k)}


@check("T6.KLEM", _over_klem)
def _t6_klem(c, w):
    ring = c.ring
    m, x, y, k = P(w["I"]), w["x"], w["y"], P(w["K"])
    xy = ring.mul[x][y]
    hyp = (c.is_("weakly", m) and c.proper_ideal(k)
           and not ring.is_unit(x) and not ring.is_unit(y)
           and is_subset(ring.mul_sets(xy, k), m) and not is_subset(xy, m)
           and cl.free_wrt(ring, m, 1 << x, 1 << y, k))
    return hyp, is_subset(k, c.rad(m))


# -- running ---------------------------------------------------------------------

def in_scope(ring: FiniteHyperring) -> bool:
    """Standing hypothesis of every check: a nonzero ring carrying an identity.

    Units (and hence every 1-absorbing notion) are only defined relative to an
    identity, so identity-free rings are skipped unless explicitly requested.
    """
    return ring.n >= 2 and ring.identities != 0


@dataclass
class TheoremVerdict:
    theorem_id: str
    ring: str
    mode: str
    outcome: str
    witness: Optional[dict]
    instances_checked: int
    violations: int = 0

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "ring": self.ring,
            "outcome": self.outcome,
            "witness": self.witness,
            "instances": self.instances_checked,
            "violations": self.violations,
        }


def theorem_ids() -> list[str]:
    return sorted(REGISTRY)


def families() -> list[str]:
    return sorted({a.family for a in REGISTRY.values()})


def select(only: Optional[Iterable[str]] = None) -> list[Assertion]:
    """Assertions matching exact ids or family prefixes such as ``T5.CHAR``."""
    if not only:
        return [REGISTRY[t] for t in theorem_ids()]
    wanted = set(only)
    unknown = {w for w in wanted
               if w not in REGISTRY and not any(a.family == w for a in REGISTRY.values())}
    if unknown:
        raise KeyError(f"unknown theorem id(s): {', '.join(sorted(unknown))}")
    return [REGISTRY[t] for t in theorem_ids()
            if t in wanted or REGISTRY[t].family in wanted]


def run_assertion(a: Assertion, entry: CatalogEntry, catalog: Catalog, mode: str,
                  include_identity_free: bool = False) -> Optional[TheoremVerdict]:
    """Verdict for one (assertion, ring) pair, or None when the check does not
    apply to this kind of ring (e.g. product-only checks).

    Rings failing the standing hypothesis get a vacuous verdict.
    """
    c = Ctx(entry, catalog, mode)
    if not a.applies(c):
        return None
    if not include_identity_free and not in_scope(entry.ring):
        return TheoremVerdict(a.id, entry.name, mode, "vacuous", None, 0)
    count = bad = 0
    first = None
    for w in a.instances(c):
        hyp, concl = a.evaluate(c, w)
        if not hyp:
            continue
        count += 1
        if not concl:
            bad += 1
            if first is None:
                first = w
    outcome = "counterexample" if bad else ("pass" if count else "vacuous")
    return TheoremVerdict(a.id, entry.name, mode, outcome, first, count, bad)


def run_theorem_suite(catalog: Catalog, which: Optional[Iterable[str]] = None,
                      mode: str = "c-only", include_identity_free: bool = False,
                      progress: Optional[Callable[[str], None]] = None) -> list[TheoremVerdict]:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    out = []
    for a in select(which):
        if progress:
            progress(a.id)
        for entry in catalog:
            v = run_assertion(a, entry, catalog, mode, include_identity_free)
            if v is not None:
                out.append(v)
    out.sort(key=lambda v: (v.theorem_id, v.ring))
    return out


def replay(catalog: Catalog, theorem_id: str, ring_name: str, witness: dict,
           mode: str = "all") -> tuple[bool, bool]:
    """Re-evaluate one witness: returns (hypothesis, conclusion).

    Evaluation never depends on ``mode``; it only affects which instances
    a suite run enumerates.
    """
    a = REGISTRY[theorem_id]
    c = Ctx(catalog.get(ring_name), catalog, mode)
    return a.evaluate(c, witness)


def skipped_rings(catalog: Catalog, include_identity_free: bool = False) -> list[str]:
    if include_identity_free:
        return []
    return sorted(e.name for e in catalog if not in_scope(e.ring))


def homomorphism_names(catalog: Catalog) -> dict[str, list[str]]:
    """The finite homomorphism pool, keyed by source ring."""
    out = {}
    for e in catalog:
        if not in_scope(e.ring):
            continue
        c = Ctx(e, catalog, "all")
        out[e.name] = sorted(h.name for h in c.homs)
    return out


def report_json(verdicts: list[TheoremVerdict], mode: str, catalog: Optional[Catalog] = None,
                include_identity_free: bool = False) -> dict:
    doc = {"mode": mode, "results": [v.to_json() for v in verdicts]}
    doc["vacuous"] = vacuous_assertions(verdicts)
    doc["counterexamples"] = sorted({v.theorem_id for v in verdicts if v.outcome == "counterexample"})
    if catalog is not None:
        doc["skipped_identity_free"] = skipped_rings(catalog, include_identity_free)
        doc["homomorphism_pool"] = homomorphism_names(catalog)
    return doc


def summarize(verdicts: list[TheoremVerdict]) -> dict[str, dict[str, int]]:
    """Per-assertion outcome counts across rings."""
    out: dict[str, dict[str, int]] = {}
    for v in verdicts:
        row = out.setdefault(v.theorem_id, {k: 0 for k in OUTCOMES})
        row[v.outcome] += 1
    return out


def format_table(verdicts: list[TheoremVerdict]) -> str:
    rows = [("assertion", "pass", "vacuous", "counterex", "status")]
    for tid, counts in sorted(summarize(verdicts).items()):
        if counts["counterexample"]:
            status = "COUNTEREXAMPLE"
        elif counts["pass"]:
            status = "ok"
        else:
            status = "VACUOUS"
        rows.append((tid, str(counts["pass"]), str(counts["vacuous"]),
                     str(counts["counterexample"]), status))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(wd) for cell, wd in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * wd for wd in widths))
    return "\n".join(lines)


def format_counterexamples(verdicts: list[TheoremVerdict]) -> str:
    lines = []
    for v in verdicts:
        if v.outcome == "counterexample":
            lines.append(f"{v.theorem_id} on {v.ring}: {v.violations}/{v.instances_checked} "
                         f"instances fail; first witness {v.witness}")
    return "\n".join(lines)


def vacuous_assertions(verdicts: list[TheoremVerdict]) -> list[str]:
    """Assertions with no non-vacuous instance on any ring."""
    return [tid for tid, c in sorted(summarize(verdicts).items())
            if not c["pass"] and not c["counterexample"]]
