"""Naive reference implementations built only from raw tables.

Nothing here imports the package under test: every notion is re-derived with
Python frozensets, straight from the definitions, so agreement is meaningful.
"""
from __future__ import annotations

import itertools
from functools import cached_property


class Naive:
    def __init__(self, n, add, mul, zero=0):
        self.n = n
        self.R = frozenset(range(n))
        self.add = [list(r) for r in add]
        self.mul = [[frozenset(c) for c in row] for row in mul]
        self.zero = zero

    @classmethod
    def from_doc(cls, doc):
        return cls(doc["n"], doc["add"], doc["mul"], doc["zero"])

    @classmethod
    def from_ring(cls, ring):
        return cls.from_doc(ring.to_json())

    # arithmetic
    def neg(self, a):
        return next(b for b in self.R if self.add[a][b] == self.zero)

    def sub(self, a, b):
        return self.add[a][self.neg(b)]

    def prod(self, A, B):
        out = set()
        for a in A:
            for b in B:
                out |= self.mul[a][b]
        return frozenset(out)

    def prod3(self, x, y, z):
        return self.prod(self.prod({x}, {y}), {z})

    # identities and units
    @cached_property
    def identities(self):
        return frozenset(e for e in self.R if all(a in self.mul[a][e] for a in self.R))

    @cached_property
    def units(self):
        return frozenset(x for x in self.R
                         if any(self.mul[x][y] & self.identities for y in self.R))

    @cached_property
    def nonunits(self):
        return sorted(self.R - self.units)

    # ideals
    def is_ideal(self, S):
        S = frozenset(S)
        if not S:
            return False
        if any(self.sub(a, b) not in S for a in S for b in S):
            return False
        return all(self.mul[r][x] <= S for r in self.R for x in S)

    @cached_property
    def ideals(self):
        out = []
        for bits in range(1, 1 << self.n):
            S = frozenset(i for i in range(self.n) if bits >> i & 1)
            if self.is_ideal(S):
                out.append(S)
        return out

    @cached_property
    def proper(self):
        return [I for I in self.ideals if I != self.R]

    def generate(self, S):
        return frozenset.intersection(*[I for I in self.ideals if frozenset(S) <= I])

    def is_prime(self, P):
        return P != self.R and all(x in P or y in P for x in self.R for y in self.R
                                   if self.mul[x][y] <= P)

    @cached_property
    def primes(self):
        return [P for P in self.proper if self.is_prime(P)]

    def radical(self, I):
        out = self.R
        for P in self.primes:
            if I <= P:
                out = out & P
        return out

    def d_set(self, I):
        out = set()
        for r in self.R:
            power = frozenset({r})
            seen = []
            while power not in seen:
                if power <= I:
                    out.add(r)
                    break
                seen.append(power)
                power = self.prod(power, {r})
        return frozenset(out)

    @cached_property
    def c_family(self):
        fam = {frozenset({r}) for r in self.R}
        frontier = list(fam)
        while frontier:
            A = frontier.pop()
            for r in self.R:
                B = self.prod(A, {r})
                if B not in fam:
                    fam.add(B)
                    frontier.append(B)
        return fam

    def is_c(self, I):
        return all(A <= I for A in self.c_family if A & I)

    def colon(self, I, S):
        return frozenset(r for r in self.R if all(self.mul[r][a] <= I for a in S))

    @cached_property
    def maximal(self):
        return [M for M in self.proper if not any(M < J for J in self.proper)]

    # classes, straight from the definitions
    def primary(self, I):
        rad = self.radical(I)
        return all(x in I or y in rad for x in self.R for y in self.R if self.mul[x][y] <= I)

    def _one_abs(self, I, target, guard=False):
        nu = self.nonunits
        for x, y, z in itertools.product(nu, repeat=3):
            p = self.prod3(x, y, z)
            if guard and self.zero in p:
                continue
            if p <= I and not self.mul[x][y] <= I and z not in target:
                return False
        return True

    def one_abs_prime(self, I):
        return self._one_abs(I, I)

    def one_abs_primary(self, I):
        return self._one_abs(I, self.radical(I))

    def strongly(self, I):
        return self._one_abs(I, self.radical(frozenset({self.zero})))

    def weakly(self, I):
        return self._one_abs(I, self.radical(I), guard=True)

    def two_absorbing(self, I):
        for x, y, z in itertools.product(self.R, repeat=3):
            if (self.prod3(x, y, z) <= I and not self.mul[x][y] <= I
                    and not self.mul[x][z] <= I and not self.mul[y][z] <= I):
                return False
        return True

    def two_absorbing_primary(self, I):
        rad = self.radical(I)
        for x, y, z in itertools.product(self.R, repeat=3):
            if (self.prod3(x, y, z) <= I and not self.mul[x][y] <= I
                    and not self.mul[x][z] <= rad and not self.mul[y][z] <= rad):
                return False
        return True


def fset(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def fmask(s) -> int:
    return sum(1 << i for i in set(s))


def gamma_classes(N: Naive) -> list:
    """Partition by the transitive closure of co-membership in a sum of products."""
    prods = set(N.c_family)
    sums = set(prods)
    frontier = list(sums)
    while frontier:
        A = frontier.pop()
        for B in list(prods):
            S = frozenset(N.add[a][b] for a in A for b in B)
            if S not in sums:
                sums.add(S)
                frontier.append(S)
    parent = list(range(N.n))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a
    for U in sums:
        u = sorted(U)
        for e in u[1:]:
            ra, rb = find(u[0]), find(e)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    classes = {}
    for a in range(N.n):
        classes.setdefault(find(a), []).append(a)
    return sorted(classes.values())


def coset_quotient(N: Naive, J) -> tuple:
    """Cosets sorted by least element, with induced add and mul tables."""
    cosets = []
    for a in range(N.n):
        c = frozenset(N.add[a][j] for j in J)
        if c not in cosets:
            cosets.append(c)
    cosets.sort(key=min)

    def which(a):
        return next(i for i, c in enumerate(cosets) if a in c)
    add = [[which(N.add[min(c)][min(d)]) for d in cosets] for c in cosets]
    mul = [[sorted({which(e) for a in c for b in d for e in N.mul[a][b]}) for d in cosets]
           for c in cosets]
    return cosets, add, mul
