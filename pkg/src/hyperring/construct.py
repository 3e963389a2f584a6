"""Catalog constructions: Z_n templates, products, quotients, 2x2 matrix
hyperrings, the fundamental ring R/γ*, and good homomorphisms."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .hypercore import (
    AxiomViolation, CapExceeded, FiniteHyperring, HyperringError, build_hyperring,
    is_subset, label, members, to_mask, validate_hyperring,
)
from .ideals import Hyperideal, NotAHyperideal, is_hyperideal, product_family

PRODUCT_CAP = 16
MATRIX_SAMPLE = 4000


class IllDefinedQuotient(HyperringError):
    def __init__(self, msg: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(msg)


class NotHomomorphism(HyperringError):
    def __init__(self, msg: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(msg)


class HypothesisUnmet(HyperringError):
    pass


def _set_name(values: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def zn_template(n: int, A: Iterable[int], name: Optional[str] = None) -> FiniteHyperring:
    """Z_n with x∘y = {x·a·y mod n : a ∈ A}."""
    A = sorted(set(A))
    if n < 1:
        raise ValueError("n must be >= 1")
    if not A:
        raise ValueError("A must be nonempty")
    add = [[(x + y) % n for y in range(n)] for x in range(n)]
    mul = [[to_mask((x * a * y) % n for a in A) for y in range(n)] for x in range(n)]
    return validate_hyperring(build_hyperring(
        n, add, mul, 0, name or f"Z{n}A{_set_name(A)}"))


# the multiplication table printed for the Z_4 example
Z4H_MUL = [
    [[0], [0], [0], [0]],
    [[0], [0, 1, 2, 3], [0, 2], [0, 1, 2, 3]],
    [[0], [0, 2], [0], [0, 2]],
    [[0], [0, 1, 2, 3], [0, 2], [0, 1, 2, 3]],
]


def z4h() -> FiniteHyperring:
    add = [[(x + y) % 4 for y in range(4)] for x in range(4)]
    return validate_hyperring({"name": "Z4H", "n": 4, "zero": 0, "add": add, "mul": Z4H_MUL})


def product_ring(r1: FiniteHyperring, r2: FiniteHyperring, cap: int = PRODUCT_CAP,
                 name: Optional[str] = None) -> FiniteHyperring:
    """Carrier pairs (a, b) flattened to a*n2 + b; componentwise operations."""
    n1, n2 = r1.n, r2.n
    n = n1 * n2
    if n > cap:
        raise CapExceeded(f"product has {n} elements, cap is {cap}")
    add = [[r1.add[a][c] * n2 + r2.add[b][d] for c in range(n1) for d in range(n2)]
           for a in range(n1) for b in range(n2)]
    mul = []
    for a in range(n1):
        for b in range(n2):
            row = []
            for c in range(n1):
                for d in range(n2):
                    left, right = members(r1.mul[a][c]), members(r2.mul[b][d])
                    row.append(to_mask(u * n2 + v for u in left for v in right))
            mul.append(row)
    ring = build_hyperring(n, add, mul, r1.zero * n2 + r2.zero,
                           name or f"{r1.name}x{r2.name}")
    ring.cache["factors"] = (r1, r2)
    return validate_hyperring(ring, cap=max(cap, 1))


def rectangle(r1: FiniteHyperring, r2: FiniteHyperring, m1: int, m2: int) -> int:
    """Mask of m1 × m2 inside r1 × r2."""
    return to_mask(a * r2.n + b for a in members(m1) for b in members(m2))


def split_rectangle(prod: FiniteHyperring, m: int) -> Optional[tuple[int, int]]:
    """(m1, m2) when m is exactly m1 × m2, else None."""
    r1, r2 = prod.cache["factors"]
    n2 = r2.n
    m1 = to_mask(e // n2 for e in members(m))
    m2 = to_mask(e % n2 for e in members(m))
    return (m1, m2) if rectangle(r1, r2, m1, m2) == m else None


@dataclass
class Quotient:
    ring: FiniteHyperring
    base: FiniteHyperring
    kernel: int
    projection: tuple[int, ...]


def quotient_ring(ring: FiniteHyperring, j: Hyperideal, name: Optional[str] = None) -> Quotient:
    """R/J on additive cosets; representative independence is checked."""
    if j.ring is not ring:
        raise ValueError("ideal belongs to another ring")
    if not j.proper:
        raise ValueError("quotient needs a proper hyperideal")
    jm = j.members
    cosets: list[int] = []
    proj = [-1] * ring.n
    for a in range(ring.n):
        if proj[a] >= 0:
            continue
        coset = to_mask(ring.add[a][t] for t in members(jm))
        for e in members(coset):
            proj[e] = len(cosets)
        cosets.append(coset)
    k = len(cosets)
    reps = [members(c)[0] for c in cosets]

    def image(mask: int) -> int:
        return to_mask(proj[e] for e in members(mask))

    add = [[proj[ring.add[reps[p]][reps[q]]] for q in range(k)] for p in range(k)]
    mul = []
    for p in range(k):
        row = []
        for q in range(k):
            want = image(ring.mul[reps[p]][reps[q]])
            for a in members(cosets[p]):
                for b in members(cosets[q]):
                    if image(ring.mul[a][b]) != want:
                        raise IllDefinedQuotient(
                            f"coset product depends on representatives ({a}, {b})", (a, b))
            row.append(want)
        mul.append(row)
    q = build_hyperring(k, add, mul, proj[ring.zero], name or f"{ring.name}/{{{j.label()}}}")
    validate_hyperring(q)
    check_good_homomorphism(ring, q, proj)
    return Quotient(q, ring, jm, tuple(proj))


# -- 2x2 matrices -----------------------------------------------------------------

def matrix_index(m: int, entries: Sequence[int]) -> int:
    a, b, c, d = entries
    return ((a * m + b) * m + c) * m + d


def matrix_entries(m: int, idx: int) -> tuple[int, int, int, int]:
    d = idx % m
    idx //= m
    c = idx % m
    idx //= m
    return idx // m, idx % m, c, d


def matrix_ring(ring: FiniteHyperring, k: int = 2, sample: int = MATRIX_SAMPLE) -> FiniteHyperring:
    """M_2(R) with (A∘B)_ij = Σ_t A_it∘B_tj, cells taken as sets of matrices."""
    if k != 2 or ring.n > 4:
        raise CapExceeded("matrix hyperrings need k = 2 and |R| <= 4")
    m = ring.n
    size = m ** 4
    # S[p][q][r][s] = p∘q + r∘s
    S = [[[[ring.add_sets(ring.mul[p][q], ring.mul[r][s]) for s in range(m)]
           for r in range(m)] for q in range(m)] for p in range(m)]
    box_cache: dict = {}

    def box(e11, e12, e21, e22) -> int:
        key = (e11, e12, e21, e22)
        got = box_cache.get(key)
        if got is None:
            got = 0
            for t in itertools.product(members(e11), members(e12), members(e21), members(e22)):
                got |= 1 << matrix_index(m, t)
            box_cache[key] = got
        return got

    ents = [matrix_entries(m, i) for i in range(size)]
    add = []
    mul = []
    for a, b, c, d in ents:
        add.append([matrix_index(m, (ring.add[a][a2], ring.add[b][b2],
                                     ring.add[c][c2], ring.add[d][d2]))
                    for a2, b2, c2, d2 in ents])
        row = []
        for a2, b2, c2, d2 in ents:
            row.append(box(S[a][a2][b][c2], S[a][b2][b][d2],
                           S[c][a2][d][c2], S[c][b2][d][d2]))
        mul.append(row)
    z = ring.zero
    out = build_hyperring(size, add, mul, matrix_index(m, (z, z, z, z)), f"M2({ring.name})")
    out.cache["matrix_base"] = ring
    return validate_hyperring(out, sample=sample)


def diagonal_embedding(ring: FiniteHyperring, x: int) -> int:
    """Index in M_2(R) of the matrix with x at (1,1) and zeros elsewhere."""
    z = ring.zero
    return matrix_index(ring.n, (x, z, z, z))


def matrix_ideal_mask(ring: FiniteHyperring, m: int) -> int:
    """M_2(I): matrices whose four entries all lie in I."""
    return to_mask(matrix_index(ring.n, t)
                   for t in itertools.product(members(m), repeat=4))


# -- fundamental relation ----------------------------------------------------------

@dataclass
class FundamentalQuotient:
    base: FiniteHyperring
    classes: tuple[int, ...]
    projection: tuple[int, ...]
    class_add: tuple[tuple[int, ...], ...]
    class_mul: tuple[tuple[int, ...], ...]
    ring: FiniteHyperring  # the quotient as a hyperring with singleton products


def sum_of_products_family(ring: FiniteHyperring) -> frozenset:
    """All finite sums of finite products, as masks."""
    def compute():
        fam = set(product_family(ring))
        gens = sorted(fam)
        work = list(fam)
        while work:
            u = work.pop()
            for g in gens:
                s = ring.add_sets(u, g)
                if s not in fam:
                    fam.add(s)
                    work.append(s)
        return frozenset(fam)
    return ring.memo("u_family", compute)


def _ring_axiom_violation(k: int, add, mul, zero: int) -> Optional[str]:
    r = range(k)
    for a in r:
        if add[a][zero] != a:
            return f"additive identity at {a}"
        if not any(add[a][b] == zero for b in r):
            return f"additive inverse at {a}"
        for b in r:
            if add[a][b] != add[b][a]:
                return f"additive commutativity at {(a, b)}"
            for c in r:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    return f"additive associativity at {(a, b, c)}"
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    return f"associativity at {(a, b, c)}"
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    return f"left distributivity at {(a, b, c)}"
                if mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]:
                    return f"right distributivity at {(a, b, c)}"
    return None


def gamma_star(ring: FiniteHyperring) -> FundamentalQuotient:
    """γ* classes from the sums-of-products family, with induced ring tables."""
    def compute():
        parent = list(range(ring.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u in sorted(sum_of_products_family(ring)):
            elems = members(u)
            root = find(elems[0])
            for e in elems[1:]:
                re = find(e)
                if re != root:
                    lo, hi = min(root, re), max(root, re)
                    parent[hi] = lo
                    root = lo
        groups: dict[int, int] = {}
        for a in range(ring.n):
            groups[find(a)] = groups.get(find(a), 0) | 1 << a
        classes = tuple(sorted(groups.values(), key=lambda c: members(c)[0]))
        proj = [0] * ring.n
        for i, c in enumerate(classes):
            for e in members(c):
                proj[e] = i
        k = len(classes)

        def induced(op_sets) -> list[list[int]]:
            table = []
            for p in range(k):
                row = []
                for q in range(k):
                    got = to_mask(proj[e] for e in members(op_sets(classes[p], classes[q])))
                    if got & (got - 1):
                        raise IllDefinedQuotient(
                            f"induced operation not single-valued on classes {p},{q}", (p, q))
                    row.append(members(got)[0])
                table.append(row)
            return table

        cadd = induced(ring.add_sets)
        cmul = induced(ring.mul_sets)
        z = proj[ring.zero]
        bad = _ring_axiom_violation(k, cadd, cmul, z)
        if bad:
            raise IllDefinedQuotient(f"fundamental quotient is not a ring: {bad}")
        qring = build_hyperring(k, cadd, [[1 << v for v in row] for row in cmul], z,
                                f"{ring.name}/γ*")
        return FundamentalQuotient(ring, classes, tuple(proj),
                                   tuple(map(tuple, cadd)), tuple(map(tuple, cmul)), qring)
    return ring.memo("gamma_star", compute)


# -- homomorphisms ------------------------------------------------------------------

@dataclass
class GoodHomomorphism:
    source: FiniteHyperring
    target: FiniteHyperring
    map: tuple[int, ...]
    name: str = "φ"

    def image_mask(self, mask: int) -> int:
        return to_mask(self.map[e] for e in members(mask))

    def preimage_mask(self, mask: int) -> int:
        return to_mask(x for x in range(self.source.n) if mask >> self.map[x] & 1)

    @property
    def kernel(self) -> int:
        return self.preimage_mask(1 << self.target.zero)

    @property
    def surjective(self) -> bool:
        return len(set(self.map)) == self.target.n

    @property
    def injective(self) -> bool:
        return len(set(self.map)) == self.source.n

    @property
    def preserves_nonunits(self) -> bool:
        return all(not self.target.is_unit(self.map[x]) for x in self.source.nonunits)


def check_good_homomorphism(r1: FiniteHyperring, r2: FiniteHyperring, phi: Sequence[int],
                            name: str = "φ") -> GoodHomomorphism:
    phi = tuple(phi)
    if len(phi) != r1.n or any(not 0 <= v < r2.n for v in phi):
        raise NotHomomorphism("map is not total on the source carrier")
    for x in range(r1.n):
        for y in range(r1.n):
            if phi[r1.add[x][y]] != r2.add[phi[x]][phi[y]]:
                raise NotHomomorphism(f"additivity fails at {(x, y)}", (x, y))
            img = to_mask(phi[e] for e in members(r1.mul[x][y]))
            if img != r2.mul[phi[x]][phi[y]]:
                raise NotHomomorphism(f"φ(x∘y) ≠ φ(x)∘φ(y) at {(x, y)}", (x, y))
    return GoodHomomorphism(r1, r2, phi, name)


def preimage_ideal(phi: GoodHomomorphism, i2: Hyperideal) -> Hyperideal:
    out = phi.preimage_mask(i2.members)
    if not is_hyperideal(phi.source, out):
        raise NotAHyperideal(f"preimage {{{label(out)}}} is not a hyperideal")
    return Hyperideal(phi.source, out)


def image_ideal(phi: GoodHomomorphism, i1: Hyperideal) -> Hyperideal:
    if not phi.surjective:
        raise HypothesisUnmet("image transfer needs an epimorphism")
    if not is_subset(phi.kernel, i1.members):
        raise HypothesisUnmet("kernel is not contained in the ideal")
    out = phi.image_mask(i1.members)
    if not is_hyperideal(phi.target, out):
        raise NotAHyperideal(f"image {{{label(out)}}} is not a hyperideal")
    return Hyperideal(phi.target, out)


def identity_map(ring: FiniteHyperring) -> GoodHomomorphism:
    return GoodHomomorphism(ring, ring, tuple(range(ring.n)), f"id[{ring.name}]")


def product_projections(prod: FiniteHyperring) -> list[GoodHomomorphism]:
    r1, r2 = prod.cache["factors"]
    out = []
    for i, (target, f) in enumerate(((r1, lambda e: e // r2.n), (r2, lambda e: e % r2.n))):
        try:
            out.append(check_good_homomorphism(prod, target, [f(e) for e in range(prod.n)],
                                               f"pi{i + 1}[{prod.name}]"))
        except NotHomomorphism:
            pass
    return out


def product_injections(prod: FiniteHyperring) -> list[GoodHomomorphism]:
    r1, r2 = prod.cache["factors"]
    out = []
    maps = (
        (r1, [a * r2.n + r2.zero for a in range(r1.n)]),
        (r2, [r1.zero * r2.n + b for b in range(r2.n)]),
    )
    for i, (source, phi) in enumerate(maps):
        try:
            out.append(check_good_homomorphism(source, prod, phi, f"in{i + 1}[{prod.name}]"))
        except NotHomomorphism:
            pass
    return out


def is_subhyperring(ring: FiniteHyperring, subset: int) -> bool:
    elems = members(subset)
    if not subset >> ring.zero & 1:
        return False
    return all(subset >> ring.sub(a, b) & 1 and is_subset(ring.mul[a][b], subset)
               for a in elems for b in elems)


def subhyperring(ring: FiniteHyperring, subset: int, name: Optional[str] = None):
    """The subset as its own hyperring plus the index map into ``ring``."""
    if not is_subhyperring(ring, subset):
        raise ValueError(f"{{{label(subset)}}} is not a subhyperring")
    elems = members(subset)
    pos = {e: i for i, e in enumerate(elems)}
    add = [[pos[ring.add[a][b]] for b in elems] for a in elems]
    mul = [[to_mask(pos[e] for e in members(ring.mul[a][b])) for b in elems] for a in elems]
    t = validate_hyperring(build_hyperring(len(elems), add, mul, pos[ring.zero],
                                           name or f"{ring.name}|{{{label(subset)}}}"))
    return t, tuple(elems)
