"""Hyperideals: construction, enumeration and the ideal calculus."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .hypercore import (
    FULL_CAP, CapExceeded, FiniteHyperring, HyperringError, is_subset, label,
    members, to_mask,
)

ENUM_CAP = FULL_CAP


class NotAHyperideal(HyperringError):
    pass


@dataclass(frozen=True)
class Check:
    """Outcome of a decision procedure; falsy results carry a witness."""
    ok: bool
    witness: Optional[tuple] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


PASS = Check(True)


@dataclass(frozen=True, eq=False)
class Hyperideal:
    ring: FiniteHyperring
    members: int

    @property
    def proper(self) -> bool:
        return self.members != self.ring.full

    @property
    def size(self) -> int:
        return bin(self.members).count("1")

    def elements(self) -> list[int]:
        return members(self.members)

    def label(self) -> str:
        return label(self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    def __le__(self, other: "Hyperideal") -> bool:
        return is_subset(self.members, other.members)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Hyperideal) and other.ring is self.ring
                and other.members == self.members)

    def __hash__(self) -> int:
        return hash((id(self.ring), self.members))

    def __and__(self, other: "Hyperideal") -> "Hyperideal":
        return Hyperideal(self.ring, self.members & other.members)

    @property
    def is_zero(self) -> bool:
        return self.members == 1 << self.ring.zero

    def __repr__(self) -> str:
        return f"Hyperideal({self.ring.name}: {{{self.label()}}})"


def _mask(ring: FiniteHyperring, s: Union[int, Iterable[int], Hyperideal]) -> int:
    if isinstance(s, Hyperideal):
        return s.members
    if isinstance(s, int):
        return s
    return to_mask(s)


def is_hyperideal(ring: FiniteHyperring, s) -> Check:
    m = _mask(ring, s)
    if m == 0:
        return Check(False, (), "empty")
    elems = members(m)
    for a in elems:
        for b in elems:
            if not m >> ring.sub(a, b) & 1:
                return Check(False, (a, b), "subtraction")
    for x in elems:
        for r in range(ring.n):
            if not is_subset(ring.mul[r][x], m):
                return Check(False, (r, x), "absorption")
    return PASS


def _generate(ring: FiniteHyperring, seed: int) -> int:
    cur = seed | 1 << ring.zero
    work = members(cur)
    while work:
        x = work.pop()
        new = 0
        for r in range(ring.n):
            new |= ring.mul[r][x]
        for y in members(cur):
            new |= 1 << ring.add[x][y]
            new |= 1 << ring.sub(x, y)
            new |= 1 << ring.sub(y, x)
        new &= ~cur
        if new:
            cur |= new
            work.extend(members(new))
    return cur


def generate_hyperideal(ring: FiniteHyperring, seed=()) -> Hyperideal:
    """Least hyperideal containing ``seed`` (worklist closure)."""
    return Hyperideal(ring, _generate(ring, _mask(ring, seed)))


def _sort_key(m: int):
    return (bin(m).count("1"), members(m))


def ideal_masks(ring: FiniteHyperring) -> tuple[int, ...]:
    """All hyperideal masks, sorted by size then member list."""
    def compute():
        if ring.n > ENUM_CAP:
            raise CapExceeded(f"enumeration needs n <= {ENUM_CAP}, got {ring.n}")
        found = {1 << ring.zero}
        for x in range(ring.n):
            found.add(_generate(ring, 1 << x))
        frontier = list(found)
        while frontier:
            nxt = []
            snapshot = list(found)
            for a in frontier:
                for b in snapshot:
                    if is_subset(a, b) or is_subset(b, a):
                        continue
                    j = _generate(ring, a | b)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
            frontier = nxt
        return tuple(sorted(found, key=_sort_key))
    return ring.memo("ideal_masks", compute)


def enumerate_hyperideals(ring: FiniteHyperring) -> list[Hyperideal]:
    return [Hyperideal(ring, m) for m in ideal_masks(ring)]


def brute_force_ideal_masks(ring: FiniteHyperring) -> list[int]:
    """Oracle: every subset passing ``is_hyperideal``."""
    out = [m for m in range(1, 1 << ring.n) if is_hyperideal(ring, m)]
    return sorted(out, key=_sort_key)


def proper_ideal_masks(ring: FiniteHyperring) -> tuple[int, ...]:
    return tuple(m for m in ideal_masks(ring) if m != ring.full)


# -- class C ----------------------------------------------------------------

@dataclass(frozen=True)
class ProductClassC:
    ring: FiniteHyperring
    family: frozenset


def product_family(ring: FiniteHyperring) -> frozenset:
    """Masks of all finite products r1∘...∘rk (k >= 1)."""
    def compute():
        fam = {1 << r for r in range(ring.n)}
        work = list(fam)
        while work:
            a = work.pop()
            for r in range(ring.n):
                p = ring.set_times_elem(a, r)
                if p not in fam:
                    fam.add(p)
                    work.append(p)
        return frozenset(fam)
    return ring.memo("class_c", compute)


def class_c(ring: FiniteHyperring) -> ProductClassC:
    return ProductClassC(ring, product_family(ring))


def is_c_hyperideal(ideal: Hyperideal) -> Check:
    ring, m = ideal.ring, ideal.members
    key = ("is_c", m)
    if key in ring.cache:
        return ring.cache[key]
    result = PASS
    for a in sorted(product_family(ring), key=_sort_key):
        if a & m and not is_subset(a, m):
            result = Check(False, tuple(members(a)), "product set meets I but is not inside")
            break
    ring.cache[key] = result
    return result


# -- primes, radical, D-set ---------------------------------------------------

def prime_violation(ring: FiniteHyperring, m: int) -> Optional[tuple]:
    """Least (x, y) with x∘y ⊆ I and x, y ∉ I, or None."""
    n, mul = ring.n, ring.mul
    for x in range(n):
        if m >> x & 1:
            continue
        row = mul[x]
        for y in range(n):
            if not m >> y & 1 and is_subset(row[y], m):
                return (x, y)
    return None


def prime_masks(ring: FiniteHyperring) -> tuple[int, ...]:
    return ring.memo("primes", lambda: tuple(
        m for m in proper_ideal_masks(ring) if prime_violation(ring, m) is None))


def radical_mask(ring: FiniteHyperring, m: int) -> int:
    key = ("radical", m)
    got = ring.cache.get(key)
    if got is None:
        got = ring.full
        for p in prime_masks(ring):
            if is_subset(m, p):
                got &= p
        ring.cache[key] = got
    return got


def radical(ideal: Hyperideal) -> Hyperideal:
    """Intersection of the primes containing the ideal, or R if none do."""
    return Hyperideal(ideal.ring, radical_mask(ideal.ring, ideal.members))


def nilradical_mask(ring: FiniteHyperring) -> int:
    return radical_mask(ring, 1 << ring.zero)


def d_set_mask(ring: FiniteHyperring, m: int) -> int:
    out = 0
    for r in range(ring.n):
        if any(is_subset(p, m) for p in ring.power_sequence(r)):
            out |= 1 << r
    return out


def d_set(ideal: Hyperideal) -> int:
    """Elements some set power of which lies wholly inside the ideal (a mask)."""
    return d_set_mask(ideal.ring, ideal.members)


# -- colon, products, maximal ideals -------------------------------------------

def colon_mask(ring: FiniteHyperring, m: int, by: int) -> int:
    byl = members(by)
    out = 0
    for r in range(ring.n):
        row = ring.mul[r]
        if all(is_subset(row[a], m) for a in byl):
            out |= 1 << r
    return out


def colon(ideal: Hyperideal, by) -> Hyperideal:
    """``(I : a)`` for an element, or ``(I : S)`` for a subset or hyperideal."""
    ring = ideal.ring
    if isinstance(by, int) and not isinstance(by, bool):
        by_mask = 1 << by
    else:
        by_mask = _mask(ring, by)
    out = colon_mask(ring, ideal.members, by_mask)
    chk = is_hyperideal(ring, out)
    if not chk:
        raise NotAHyperideal(f"colon {{{label(out)}}} is not a hyperideal: {chk.reason} {chk.witness}")
    return Hyperideal(ring, out)


def product_mask(ring: FiniteHyperring, a: int, b: int) -> int:
    return _generate(ring, ring.mul_sets(a, b))


def ideal_product(i: Hyperideal, j: Hyperideal) -> Hyperideal:
    return Hyperideal(i.ring, product_mask(i.ring, i.members, j.members))


def ideal_power(i: Hyperideal, k: int) -> Hyperideal:
    if k < 1:
        raise ValueError("power must be >= 1")
    out = i
    for _ in range(k - 1):
        out = ideal_product(out, i)
    return out


def maximal_masks(ring: FiniteHyperring) -> tuple[int, ...]:
    def compute():
        proper = proper_ideal_masks(ring)
        return tuple(m for m in proper
                     if not any(m != o and is_subset(m, o) for o in proper))
    return ring.memo("maximal", compute)


def maximal_hyperideals(ring: FiniteHyperring) -> list[Hyperideal]:
    return [Hyperideal(ring, m) for m in maximal_masks(ring)]


def is_local(ring: FiniteHyperring) -> bool:
    return len(maximal_masks(ring)) == 1


def ideal(ring: FiniteHyperring, elements) -> Hyperideal:
    """Wrap a subset as a hyperideal, raising if it is not one."""
    m = _mask(ring, elements)
    chk = is_hyperideal(ring, m)
    if not chk:
        raise NotAHyperideal(f"{{{label(m)}}} is not a hyperideal: {chk.reason} {chk.witness}")
    return Hyperideal(ring, m)
