"""The built-in catalog of hyperrings used by the theorem suite."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .construct import (
    GoodHomomorphism, IllDefinedQuotient, Quotient, identity_map, is_subhyperring,
    product_injections, product_projections, product_ring, quotient_ring, z4h, zn_template,
)
from .hypercore import AxiomViolation, FiniteHyperring, parse_label
from .ideals import Hyperideal, proper_ideal_masks

TEMPLATE_SETS = ((1,), (2,), (3,), (2, 3), (2, 4))

# explicitly provided subhyperrings: ring name -> subset labels
SUBRING_FIXTURES = {
    "Z4H": ["0,2"],
    "Z8A{1}": ["0,4", "0,2,4,6"],
    "Z12A{1}": ["0,6", "0,4,8", "0,3,6,9", "0,2,4,6,8,10"],
    "Z6A{2,3}": ["0,3", "0,2,4"],
    "Z2A{1}xZ3A{1}": ["0,3", "0,1,2"],
    "Z4HxZ4H": ["0,4,8,12", "0,2,8,10"],
}


@dataclass(frozen=True)
class Limits:
    max_n: int = 12
    max_product: int = 16
    surrogates: bool = True


@dataclass
class CatalogEntry:
    name: str
    ring: FiniteHyperring
    provenance: str
    is_product: bool = False


@dataclass
class Catalog:
    entries: list[CatalogEntry]
    limits: Limits = field(default_factory=Limits)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def get(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]


def builtin_catalog(limits: Limits = Limits()) -> Catalog:
    entries: list[CatalogEntry] = []
    by_name: dict[str, FiniteHyperring] = {}

    def add(ring: FiniteHyperring, provenance: str, is_product: bool = False):
        entries.append(CatalogEntry(ring.name, ring, provenance, is_product))
        by_name[ring.name] = ring

    if limits.max_n >= 4:
        add(z4h(), "Z4 example tables (bit-exact)")
    for n in range(2, limits.max_n + 1):
        for A in TEMPLATE_SETS:
            try:
                add(zn_template(n, A), f"zn_template(n={n}, A={list(A)})")
            except AxiomViolation:
                continue
    if "Z4H" in by_name and 16 <= limits.max_product:
        z = by_name["Z4H"]
        add(product_ring(z, z, cap=limits.max_product), "product_ring(Z4H, Z4H)", True)
    if "Z2A{1}" in by_name and "Z3A{1}" in by_name and 6 <= limits.max_product:
        add(product_ring(by_name["Z2A{1}"], by_name["Z3A{1}"], cap=limits.max_product),
            "product_ring(zn(2,{1}), zn(3,{1}))", True)
    for base in ("Z4H", "Z6A{2,3}"):
        if base not in by_name:
            continue
        r = by_name[base]
        for m in proper_ideal_masks(r):
            q = quotient_ring(r, Hyperideal(r, m))
            add(q.ring, f"quotient_ring({base}, {{{Hyperideal(r, m).label()}}})")
    if limits.surrogates:
        add(zn_template(30, (2, 4)), "zn_template(n=30, A=[2, 4]); surrogate for <15> in (Z, {2ab, 4ab})")
    return Catalog(entries, limits)


def subring_fixtures(entry: CatalogEntry) -> list[int]:
    out = []
    for text in SUBRING_FIXTURES.get(entry.name, []):
        m = parse_label(text)
        if not is_subhyperring(entry.ring, m):
            raise ValueError(f"fixture {text} is not a subhyperring of {entry.name}")
        out.append(m)
    return out


def quotient_of(ring: FiniteHyperring, j: int) -> Optional[Quotient]:
    """Memoized R/J, or None when the coset product is ill-defined."""
    key = ("quotient", j)
    if key not in ring.cache:
        try:
            ring.cache[key] = quotient_ring(ring, Hyperideal(ring, j))
        except (IllDefinedQuotient, AxiomViolation):
            ring.cache[key] = None
    return ring.cache[key]


def homomorphism_pool(entry: CatalogEntry) -> list[GoodHomomorphism]:
    """Identity, quotient projections, product projections and injections
    leaving ``entry.ring``; each map is a verified good homomorphism."""
    ring = entry.ring

    def compute():
        pool = [identity_map(ring)]
        for j in proper_ideal_masks(ring):
            q = quotient_of(ring, j)
            if q is not None:
                pool.append(GoodHomomorphism(ring, q.ring, q.projection, f"proj[{q.ring.name}]"))
        if "factors" in ring.cache:
            pool.extend(product_projections(ring))
        return pool
    return ring.memo("hom_pool", compute)


def injections_from(catalog: Catalog, entry: CatalogEntry) -> list[GoodHomomorphism]:
    out = []
    for other in catalog:
        if other.is_product:
            out.extend(h for h in product_injections(other.ring) if h.source is entry.ring)
    return out
