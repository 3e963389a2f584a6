"""Finite multiplicative hyperrings stored as explicit tables.

The carrier is always ``range(n)``. Subsets of the carrier are plain Python
ints used as bitmasks (bit ``i`` set means element ``i`` is a member), so set
equality and containment are single integer operations.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

FULL_CAP = 32
TRIPLE_CAP = 32


class HyperringError(Exception):
    pass


class MalformedTable(HyperringError):
    pass


class AxiomViolation(HyperringError):
    def __init__(self, axiom: str, witness: tuple, detail: str = ""):
        self.axiom = axiom
        self.witness = tuple(witness)
        self.detail = detail
        msg = f"{axiom} fails at {self.witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class CapExceeded(HyperringError):
    pass


class EmptyOperand(HyperringError):
    pass


class NotApplicable(HyperringError):
    pass


# -- bitmask helpers --------------------------------------------------------

def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def label(mask: int) -> str:
    """Comma-joined sorted member list, e.g. ``"0,2"``."""
    return ",".join(str(e) for e in members(mask))


def parse_label(text: str) -> int:
    text = text.strip()
    if not text:
        return 0
    return to_mask(int(tok) for tok in text.split(","))


@dataclass(eq=False)
class FiniteHyperring:
    n: int
    name: str
    add: tuple[tuple[int, ...], ...]
    zero: int
    mul: tuple[tuple[int, ...], ...]
    # write-once memo shared by the other modules (ideals, classify, ...)
    cache: dict = field(default_factory=dict, repr=False)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def elements(self) -> range:
        return range(self.n)

    @cached_property
    def neg(self) -> tuple[int, ...]:
        out = []
        for a in range(self.n):
            out.append(next(b for b in range(self.n) if self.add[a][b] == self.zero))
        return tuple(out)

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def memo(self, key, compute):
        try:
            return self.cache[key]
        except KeyError:
            value = self.cache[key] = compute()
            return value

    # -- lifted arithmetic on masks ---------------------------------------

    @cached_property
    def _row_products(self) -> list[dict[int, int]]:
        return [dict() for _ in range(self.n)]

    def elem_times_set(self, a: int, s: int) -> int:
        row = self._row_products[a]
        got = row.get(s)
        if got is None:
            got = 0
            mrow = self.mul[a]
            for b in members(s):
                got |= mrow[b]
            row[s] = got
        return got

    def set_times_elem(self, s: int, b: int) -> int:
        got = 0
        for a in members(s):
            got |= self.mul[a][b]
        return got

    def mul_sets(self, s: int, t: int) -> int:
        key = (s, t)
        pc = self._pair_cache
        got = pc.get(key)
        if got is None:
            got = 0
            for a in members(s):
                got |= self.elem_times_set(a, t)
            pc[key] = got
        return got

    @cached_property
    def _pair_cache(self) -> dict:
        return {}

    def add_sets(self, s: int, t: int) -> int:
        got = 0
        tm = members(t)
        for a in members(s):
            row = self.add[a]
            for b in tm:
                got |= 1 << row[b]
        return got

    def neg_set(self, s: int) -> int:
        return to_mask(self.neg[a] for a in members(s))

    @cached_property
    def pair(self) -> tuple[tuple[int, ...], ...]:
        """``pair[x][y]`` is the mask of ``x∘y`` (alias of ``mul``)."""
        return self.mul

    @cached_property
    def triple(self) -> list[list[list[int]]]:
        """``triple[x][y][z]`` is the mask of ``x∘y∘z``."""
        if self.n > TRIPLE_CAP:
            raise CapExceeded(f"triple table needs n <= {TRIPLE_CAP}, got {self.n}")
        n = self.n
        out = []
        for x in range(n):
            plane = []
            for y in range(n):
                xy = self.mul[x][y]
                plane.append([self.set_times_elem(xy, z) for z in range(n)])
            out.append(plane)
        return out

    def power_sequence(self, r: int) -> list[int]:
        """Distinct set powers ``r, r∘r, r∘r∘r, ...`` up to the first repeat."""
        seen = set()
        seq = []
        cur = 1 << r
        while cur not in seen:
            seen.add(cur)
            seq.append(cur)
            cur = self.set_times_elem(cur, r)
        return seq

    # -- identities and units ----------------------------------------------

    @cached_property
    def identities(self) -> int:
        return to_mask(e for e in range(self.n)
                       if all(self.mul[a][e] >> a & 1 for a in range(self.n)))

    @cached_property
    def scalar_identities(self) -> int:
        return to_mask(e for e in range(self.n)
                       if all(self.mul[a][e] == 1 << a for a in range(self.n)))

    @cached_property
    def units(self) -> int:
        ids = self.identities
        if not ids:
            return 0
        return to_mask(x for x in range(self.n)
                       if any(self.mul[x][y] & ids for y in range(self.n)))

    @cached_property
    def nonunits(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.n) if not self.units >> x & 1)

    def is_unit(self, x: int) -> bool:
        return bool(self.units >> x & 1)

    @cached_property
    def strongly_distributive(self) -> bool:
        return _distributivity_violation(self, strict=True) is None

    @cached_property
    def commutative(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a]
                   for a in range(self.n) for b in range(a))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "zero": self.zero,
            "add": [list(row) for row in self.add],
            "mul": [[members(c) for c in row] for row in self.mul],
        }

    def same_tables(self, other: "FiniteHyperring") -> bool:
        return (self.n == other.n and self.zero == other.zero
                and self.add == other.add and self.mul == other.mul)

    def __repr__(self) -> str:
        return f"FiniteHyperring({self.name!r}, n={self.n})"


# -- validation -------------------------------------------------------------

def _check_shape(n, add, zero, mul) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MalformedTable(f"n must be a positive integer, got {n!r}")
    if not isinstance(zero, int) or not 0 <= zero < n:
        raise MalformedTable(f"zero index {zero!r} out of range")
    if len(add) != n or any(len(row) != n for row in add):
        raise MalformedTable("add table is not n x n")
    if len(mul) != n or any(len(row) != n for row in mul):
        raise MalformedTable("mul table is not n x n")
    for i, row in enumerate(add):
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise MalformedTable(f"add[{i}][{j}] = {v!r} out of range")


def _cell_mask(cell, n: int, i: int, j: int, strict: bool) -> int:
    if isinstance(cell, int) and not isinstance(cell, bool):
        if not 0 < cell < (1 << n):
            raise MalformedTable(f"mul[{i}][{j}] mask out of range or empty")
        return cell
    items = list(cell)
    if not items:
        raise MalformedTable(f"mul[{i}][{j}] is empty")
    for v in items:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
            raise MalformedTable(f"mul[{i}][{j}] contains out-of-range index {v!r}")
    if strict and any(a >= b for a, b in zip(items, items[1:])):
        raise MalformedTable(f"mul[{i}][{j}] is not strictly increasing: {items}")
    return to_mask(items)


def _group_violation(r: FiniteHyperring) -> Optional[AxiomViolation]:
    n, add, z = r.n, r.add, r.zero
    for a in range(n):
        if add[z][a] != a or add[a][z] != a:
            return AxiomViolation("additive identity", (z, a))
    for a in range(n):
        if not any(add[a][b] == z for b in range(n)):
            return AxiomViolation("additive inverse", (a,))
    for a in range(n):
        for b in range(n):
            if add[a][b] != add[b][a]:
                return AxiomViolation("additive commutativity", (a, b))
    for a in range(n):
        for b in range(n):
            ab = add[a][b]
            for c in range(n):
                if add[ab][c] != add[a][add[b][c]]:
                    return AxiomViolation("additive associativity", (a, b, c))
    return None


def _assoc_violation(r: FiniteHyperring, triples=None) -> Optional[AxiomViolation]:
    n = r.n
    it = triples if triples is not None else (
        (a, b, c) for a in range(n) for b in range(n) for c in range(n))
    for a, b, c in it:
        left = r.set_times_elem(r.mul[a][b], c)
        right = r.elem_times_set(a, r.mul[b][c])
        if left != right:
            return AxiomViolation("associativity", (a, b, c),
                                  f"(a∘b)∘c = {members(left)}, a∘(b∘c) = {members(right)}")
    return None


def _distributivity_violation(r: FiniteHyperring, strict: bool = False,
                              triples=None) -> Optional[AxiomViolation]:
    n, add, mul = r.n, r.add, r.mul
    it = triples if triples is not None else (
        (a, b, c) for a in range(n) for b in range(n) for c in range(n))
    for a, b, c in it:
        bc = add[b][c]
        lhs = mul[a][bc]
        rhs = r.add_sets(mul[a][b], mul[a][c])
        if (lhs != rhs) if strict else not is_subset(lhs, rhs):
            return AxiomViolation("left distributivity", (a, b, c))
        lhs = mul[bc][a]
        rhs = r.add_sets(mul[b][a], mul[c][a])
        if (lhs != rhs) if strict else not is_subset(lhs, rhs):
            return AxiomViolation("right distributivity", (a, b, c))
    return None


def _sign_violation(r: FiniteHyperring, pairs=None) -> Optional[AxiomViolation]:
    n, mul, neg = r.n, r.mul, r.neg
    it = pairs if pairs is not None else ((a, b) for a in range(n) for b in range(n))
    for a, b in it:
        ab = mul[a][b]
        neg_ab = r.neg_set(ab)
        if mul[a][neg[b]] != neg_ab or mul[neg[a]][b] != neg_ab:
            return AxiomViolation("sign compatibility", (a, b))
    return None


def axiom_violation(r: FiniteHyperring, sample: Optional[int] = None,
                    seed: int = 0) -> Optional[AxiomViolation]:
    """First violated axiom of ``r`` or ``None``.

    With ``sample`` set, the multiplicative axioms are checked on that many
    deterministic pseudo-random triples instead of all ``n**3``.
    """
    v = _group_violation(r)
    if v:
        return v
    triples = pairs = None
    if sample is not None:
        rng = random.Random(seed)
        triples = [(rng.randrange(r.n), rng.randrange(r.n), rng.randrange(r.n))
                   for _ in range(sample)]
        pairs = [(a, b) for a, b, _ in triples]
    return (_assoc_violation(r, triples)
            or _distributivity_violation(r, triples=triples)
            or _sign_violation(r, pairs))


def build_hyperring(n: int, add, mul, zero: int = 0, name: str = "R",
                    strict_cells: bool = False) -> FiniteHyperring:
    """Construct without axiom checks (shape checks only)."""
    _check_shape(n, add, zero, mul)
    cells = tuple(tuple(_cell_mask(mul[i][j], n, i, j, strict_cells) for j in range(n))
                  for i in range(n))
    return FiniteHyperring(n=n, name=name, add=tuple(tuple(row) for row in add),
                           zero=zero, mul=cells)


def validate_hyperring(source, cap: int = FULL_CAP, sample: Optional[int] = None,
                       strict_cells: bool = False) -> FiniteHyperring:
    """Build and check a hyperring from a JSON-like dict or a ring object.

    Raises ``MalformedTable`` for shape problems and ``AxiomViolation`` naming
    the first failing axiom with a witness tuple.
    """
    if isinstance(source, FiniteHyperring):
        ring = source
    else:
        try:
            n, add, mul = source["n"], source["add"], source["mul"]
        except (KeyError, TypeError) as exc:
            raise MalformedTable(f"missing field: {exc}") from None
        ring = build_hyperring(n, add, mul, source.get("zero", 0), source.get("name", "R"),
                               strict_cells=strict_cells)
    if ring.n > cap and sample is None:
        raise CapExceeded(f"full validation needs n <= {cap}, got {ring.n}")
    v = axiom_violation(ring, sample=sample)
    if v:
        raise v
    return ring


def from_json(doc: dict, cap: int = FULL_CAP) -> FiniteHyperring:
    """Parse the canonical JSON document (cells must be strictly increasing)."""
    if not isinstance(doc, dict):
        raise MalformedTable("hyperring document must be an object")
    for key in ("name", "n", "zero", "add", "mul"):
        if key not in doc:
            raise MalformedTable(f"missing field: {key}")
    return validate_hyperring(doc, cap=cap, strict_cells=True)


# -- operations -------------------------------------------------------------

def set_product(ring: FiniteHyperring, operands: Sequence[Iterable[int] | int]) -> int:
    """Left fold of the lifted product; operands are masks or element iterables."""
    masks = [op if isinstance(op, int) else to_mask(op) for op in operands]
    if not masks:
        raise EmptyOperand("no operands")
    for m in masks:
        if m == 0:
            raise EmptyOperand("empty operand")
    acc = masks[0]
    for m in masks[1:]:
        acc = ring.mul_sets(acc, m)
    return acc


def units_and_identities(ring: FiniteHyperring) -> tuple[int, int, int]:
    return ring.identities, ring.scalar_identities, ring.units


def is_nilpotent(ring: FiniteHyperring, x: int) -> bool:
    return (1 << ring.zero) in ring.power_sequence(x)


def is_regular(ring: FiniteHyperring, r: int) -> bool:
    sq = ring.mul[r][r]
    return any(ring.set_times_elem(sq, x) >> r & 1 for x in range(ring.n))


def _require_nonzero_nonunit(ring: FiniteHyperring, x: int) -> None:
    if x == ring.zero:
        raise NotApplicable("element is zero")
    if ring.is_unit(x):
        raise NotApplicable("element is a unit")


def is_irreducible(ring: FiniteHyperring, x: int) -> bool:
    _require_nonzero_nonunit(ring, x)
    units = ring.units
    for a in range(ring.n):
        if units >> a & 1:
            continue
        row = ring.mul[a]
        for b in range(ring.n):
            if not units >> b & 1 and row[b] >> x & 1:
                return False
    return True


def principal_multiples(ring: FiniteHyperring, x: int) -> int:
    """``x∘R`` as a mask."""
    return ring.elem_times_set(x, ring.full)


def is_prime_element(ring: FiniteHyperring, x: int) -> bool:
    _require_nonzero_nonunit(ring, x)
    n, mul = ring.n, ring.mul
    xr = principal_multiples(ring, x)
    targets = {mul[x][r] for r in range(n)}
    for a in range(n):
        if xr >> a & 1:
            continue
        for b in range(n):
            if xr >> b & 1:
                continue
            ab = mul[a][b]
            if any(is_subset(ab, t) for t in targets):
                return False
    return True


@dataclass(frozen=True)
class ElementProfile:
    index: int
    is_unit: bool
    is_identity: bool
    is_scalar_identity: bool
    is_regular: bool
    is_nilpotent: bool
    # None when the definition does not apply (zero or unit)
    is_irreducible: Optional[bool]
    is_prime_element: Optional[bool]


def element_profile(ring: FiniteHyperring, x: int) -> ElementProfile:
    applicable = x != ring.zero and not ring.is_unit(x)
    return ElementProfile(
        index=x,
        is_unit=ring.is_unit(x),
        is_identity=bool(ring.identities >> x & 1),
        is_scalar_identity=bool(ring.scalar_identities >> x & 1),
        is_regular=is_regular(ring, x),
        is_nilpotent=is_nilpotent(ring, x),
        is_irreducible=is_irreducible(ring, x) if applicable else None,
        is_prime_element=is_prime_element(ring, x) if applicable else None,
    )


@dataclass(frozen=True)
class RingFlags:
    strongly_distributive: bool
    reduced: bool
    integral_hyperdomain: bool
    hyperfield: bool
    regular_ring: bool
    local: bool
    has_identity: bool
    has_scalar_identity: bool


def is_reduced(ring: FiniteHyperring) -> bool:
    return not any(is_nilpotent(ring, x) for x in range(ring.n) if x != ring.zero)


def is_integral_hyperdomain(ring: FiniteHyperring) -> bool:
    # the zero ring is not a domain
    if ring.n < 2:
        return False
    z = ring.zero
    return not any(ring.mul[x][y] >> z & 1
                   for x in range(ring.n) if x != z
                   for y in range(ring.n) if y != z)


def is_hyperfield(ring: FiniteHyperring) -> bool:
    if ring.n < 2:
        return False
    return all(ring.is_unit(x) for x in range(ring.n) if x != ring.zero)


def is_regular_ring(ring: FiniteHyperring) -> bool:
    return all(is_regular(ring, r) for r in range(ring.n))


def ring_flags(ring: FiniteHyperring) -> RingFlags:
    from .ideals import is_local

    def compute():
        return RingFlags(
            strongly_distributive=ring.strongly_distributive,
            reduced=is_reduced(ring),
            integral_hyperdomain=is_integral_hyperdomain(ring),
            hyperfield=is_hyperfield(ring),
            regular_ring=is_regular_ring(ring),
            local=is_local(ring),
            has_identity=ring.identities != 0,
            has_scalar_identity=ring.scalar_identities != 0,
        )
    return ring.memo("flags", compute)
