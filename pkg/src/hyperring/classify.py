"""Decision procedures for the absorbing-prime/primary hierarchy.

Every predicate scans the relevant quantifier domain in lexicographic order
and returns a ``Check`` whose witness is the least violating tuple.
The 1-absorbing family quantifies over nonunits; prime, primary and the
2-absorbing classes quantify over all elements.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .hypercore import HyperringError, is_subset, label, members
from .ideals import (
    PASS, Check, Hyperideal, d_set_mask, is_c_hyperideal, maximal_masks,
    nilradical_mask, prime_violation, proper_ideal_masks, radical_mask,
)


class NotProper(HyperringError):
    pass


class NotWeakly(HyperringError):
    pass


class PreconditionFailed(HyperringError):
    pass


def _require_proper(ideal: Hyperideal) -> None:
    if not ideal.proper:
        raise NotProper(f"{{{ideal.label()}}} is the whole ring")


# -- basic classes ------------------------------------------------------------

def is_prime(ideal: Hyperideal) -> Check:
    _require_proper(ideal)
    w = prime_violation(ideal.ring, ideal.members)
    return PASS if w is None else Check(False, w)


def is_primary(ideal: Hyperideal) -> Check:
    _require_proper(ideal)
    ring, m = ideal.ring, ideal.members
    rad = radical_mask(ring, m)
    for x in range(ring.n):
        if m >> x & 1:
            continue
        row = ring.mul[x]
        for y in range(ring.n):
            if not rad >> y & 1 and is_subset(row[y], m):
                return Check(False, (x, y))
    return PASS


def is_maximal(ideal: Hyperideal) -> Check:
    _require_proper(ideal)
    m = ideal.members
    if m in maximal_masks(ideal.ring):
        return PASS
    for o in proper_ideal_masks(ideal.ring):
        if o != m and is_subset(m, o):
            return Check(False, tuple(members(o)), "strictly larger proper hyperideal")
    raise AssertionError("unreachable")


def basic_classes(ideal: Hyperideal) -> tuple[Check, Check, Check]:
    return is_prime(ideal), is_primary(ideal), is_maximal(ideal)


# -- 1-absorbing family ---------------------------------------------------------

def _one_absorbing_scan(ideal: Hyperideal, target: int, guard_zero: bool = False) -> Check:
    """Nonunit x,y,z with x∘y∘z ⊆ I must give x∘y ⊆ I or z ∈ target."""
    _require_proper(ideal)
    ring, m = ideal.ring, ideal.members
    nu = ring.nonunits
    mul, tri = ring.mul, ring.triple
    zbit = 1 << ring.zero
    bad_z = [z for z in nu if not target >> z & 1]
    if not bad_z:
        return PASS
    for x in nu:
        for y in nu:
            if is_subset(mul[x][y], m):
                continue
            row = tri[x][y]
            for z in bad_z:
                p = row[z]
                if guard_zero and p & zbit:
                    continue
                if is_subset(p, m):
                    return Check(False, (x, y, z))
    return PASS


def is_one_absorbing_prime(ideal: Hyperideal) -> Check:
    return _one_absorbing_scan(ideal, ideal.members)


def is_one_absorbing_primary(ideal: Hyperideal) -> Check:
    return _one_absorbing_scan(ideal, radical_mask(ideal.ring, ideal.members))


def is_strongly_one_absorbing_primary(ideal: Hyperideal) -> Check:
    return _one_absorbing_scan(ideal, nilradical_mask(ideal.ring))


def is_weakly_one_absorbing_primary(ideal: Hyperideal) -> Check:
    return _one_absorbing_scan(ideal, radical_mask(ideal.ring, ideal.members),
                               guard_zero=True)


def weakly_is_vacuous(ideal: Hyperideal) -> bool:
    """True when no nonunit triple passes the guard ``0 ∉ x∘y∘z ⊆ I``."""
    ring, m = ideal.ring, ideal.members
    zbit = 1 << ring.zero
    tri = ring.triple
    nu = ring.nonunits
    return not any(not tri[x][y][z] & zbit and is_subset(tri[x][y][z], m)
                   for x in nu for y in nu for z in nu)


@dataclass(frozen=True, order=True)
class TripleZero:
    x: int
    y: int
    z: int


def _triple_zeros(ring, m: int) -> list[TripleZero]:
    rad = radical_mask(ring, m)
    zbit = 1 << ring.zero
    nu = ring.nonunits
    out = []
    for x in nu:
        for y in nu:
            if is_subset(ring.mul[x][y], m):
                continue
            for z in nu:
                if ring.triple[x][y][z] == zbit and not rad >> z & 1:
                    out.append(TripleZero(x, y, z))
    return out


def find_one_triple_zeros(ideal: Hyperideal) -> list[TripleZero]:
    if not is_weakly_one_absorbing_primary(ideal):
        raise NotWeakly(f"{{{ideal.label()}}} is not weakly 1-absorbing primary")
    return _triple_zeros(ideal.ring, ideal.members)


def is_one_triple_zero(ideal: Hyperideal, x: int, y: int, z: int) -> bool:
    ring, m = ideal.ring, ideal.members
    nu = set(ring.nonunits)
    return (x in nu and y in nu and z in nu
            and ring.triple[x][y][z] == 1 << ring.zero
            and not is_subset(ring.mul[x][y], m)
            and not radical_mask(ring, m) >> z & 1)


# -- 2-absorbing ------------------------------------------------------------------

def is_two_absorbing(ideal: Hyperideal) -> Check:
    _require_proper(ideal)
    ring, m = ideal.ring, ideal.members
    mul, tri, n = ring.mul, ring.triple, ring.n
    for x in range(n):
        for y in range(n):
            if is_subset(mul[x][y], m):
                continue
            for z in range(n):
                if (is_subset(tri[x][y][z], m) and not is_subset(mul[x][z], m)
                        and not is_subset(mul[y][z], m)):
                    return Check(False, (x, y, z))
    return PASS


def is_two_absorbing_primary(ideal: Hyperideal) -> Check:
    _require_proper(ideal)
    ring, m = ideal.ring, ideal.members
    rad = radical_mask(ring, m)
    mul, tri, n = ring.mul, ring.triple, ring.n
    for x in range(n):
        for y in range(n):
            if is_subset(mul[x][y], m):
                continue
            for z in range(n):
                if (is_subset(tri[x][y][z], m) and not is_subset(mul[x][z], rad)
                        and not is_subset(mul[y][z], rad)):
                    return Check(False, (x, y, z))
    return PASS


def two_absorbing_classes(ideal: Hyperideal) -> tuple[Check, Check]:
    return is_two_absorbing(ideal), is_two_absorbing_primary(ideal)


# -- ideal-form helpers -------------------------------------------------------------

def triple_product_mask(ring, j: int, h: int, k: int) -> int:
    """J∘H∘K as the union of all j∘h∘k (no ideal closure)."""
    return ring.mul_sets(ring.mul_sets(j, h), k)


def is_free_one_triple_zero(ideal: Hyperideal, j: Hyperideal, h: Hyperideal,
                            k: Hyperideal) -> bool:
    ring = ideal.ring
    if not is_weakly_one_absorbing_primary(ideal):
        raise PreconditionFailed("ideal is not weakly 1-absorbing primary")
    if not is_subset(triple_product_mask(ring, j.members, h.members, k.members), ideal.members):
        raise PreconditionFailed("J∘H∘K is not contained in I")
    return free_wrt(ring, ideal.members, j.members, h.members, k.members)


def free_wrt(ring, m: int, j: int, h: int, k: int) -> bool:
    zeros = ring.memo(("triple_zeros", m), lambda: _triple_zeros(ring, m))
    return not any(j >> t.x & 1 and h >> t.y & 1 and k >> t.z & 1 for t in zeros)


# -- full report -------------------------------------------------------------------

CLASS_NAMES = (
    "prime", "primary", "maximal", "two_absorbing", "two_absorbing_primary",
    "one_abs_prime", "one_abs_primary", "strongly_one_abs_primary",
    "weakly_one_abs_primary", "is_c_hyperideal",
)


@dataclass
class ClassificationReport:
    ideal: Hyperideal
    proper: bool
    is_c_hyperideal: bool
    prime: bool
    primary: bool
    maximal: bool
    two_absorbing: bool
    two_absorbing_primary: bool
    one_abs_prime: bool
    one_abs_primary: bool
    strongly_one_abs_primary: bool
    weakly_one_abs_primary: bool
    weakly_vacuous: bool
    radical: int
    P: Optional[int]
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        ring = self.ideal.ring
        out = {name: getattr(self, name) for name in CLASS_NAMES}
        out.update({
            "ring": ring.name,
            "ideal": self.ideal.label(),
            "proper": self.proper,
            "weakly_vacuous": self.weakly_vacuous,
            "radical": label(self.radical),
            "d_set": label(d_set_mask(ring, self.ideal.members)),
            "P": None if self.P is None else label(self.P),
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
        })
        return out


def classify(ideal: Hyperideal) -> ClassificationReport:
    _require_proper(ideal)
    checks = {
        "prime": is_prime(ideal),
        "primary": is_primary(ideal),
        "maximal": is_maximal(ideal),
        "two_absorbing": is_two_absorbing(ideal),
        "two_absorbing_primary": is_two_absorbing_primary(ideal),
        "one_abs_prime": is_one_absorbing_prime(ideal),
        "one_abs_primary": is_one_absorbing_primary(ideal),
        "strongly_one_abs_primary": is_strongly_one_absorbing_primary(ideal),
        "weakly_one_abs_primary": is_weakly_one_absorbing_primary(ideal),
        "is_c_hyperideal": is_c_hyperideal(ideal),
    }
    rad = radical_mask(ideal.ring, ideal.members)
    rad_prime = rad != ideal.ring.full and prime_violation(ideal.ring, rad) is None
    p = rad if rad_prime else None
    return ClassificationReport(
        ideal=ideal,
        proper=True,
        radical=rad,
        P=p,
        weakly_vacuous=weakly_is_vacuous(ideal),
        witnesses={k: c.witness for k, c in checks.items() if not c},
        **{k: bool(c) for k, c in checks.items()},
    )

