"""Powerset carriers and the subset-level maps a mapping induces.

A subset's bitmask doubles as its index in the powerset carrier, so index 0
is the empty set and encoding/decoding are mutually inverse by construction.
Every map on a powerset is tabulated in full, so carriers are capped
(default base size 12).
"""

from __future__ import annotations

from dataclasses import dataclass

from .finset import FiniteSet, Mapping, SubsetOf, discrete, image, kernel_partition

DEFAULT_MAX_BASE = 12


@dataclass(frozen=True)
class PowersetCarrier:
    base: FiniteSet
    as_set: FiniteSet

    def __post_init__(self) -> None:
        if self.as_set.size != 1 << self.base.size:
            raise ValueError("powerset carrier must have size 2**|base|")

    def encode(self, subset: SubsetOf) -> int:
        if subset.base != self.base:
            raise ValueError("subset belongs to a different base carrier")
        return subset.bits

    def decode(self, index: int) -> SubsetOf:
        return SubsetOf(self.base, index)


def power_set(base: FiniteSet, max_base: int = DEFAULT_MAX_BASE) -> PowersetCarrier:
    if base.size > max_base:
        raise ValueError(
            f"powerset over {base.size} elements exceeds the configured bound {max_base}"
        )
    return PowersetCarrier(base, FiniteSet(1 << base.size))


def direct_image_map(f: Mapping, max_base: int = DEFAULT_MAX_BASE) -> Mapping:
    """Subset-level extension of f: encoded A goes to encoded f(A).

    Sends the empty set to the empty set and nothing else to it, since f is
    total.
    """
    px = power_set(f.dom, max_base)
    py = power_set(f.cod, max_base)
    point_bits = [1 << y for y in f.table]
    table = []
    for a in range(px.as_set.size):
        bits = 0
        rest = a
        while rest:
            low = rest & -rest
            bits |= point_bits[low.bit_length() - 1]
            rest ^= low
        table.append(bits)
    return Mapping(px.as_set, py.as_set, tuple(table))


def preimage_map(f: Mapping, max_base: int = DEFAULT_MAX_BASE) -> Mapping:
    """Subset-level inverse of f: encoded U goes to encoded preimage of U."""
    px = power_set(f.dom, max_base)
    py = power_set(f.cod, max_base)
    table = []
    for u in range(py.as_set.size):
        bits = 0
        for x, y in enumerate(f.table):
            if u >> y & 1:
                bits |= 1 << x
        table.append(bits)
    return Mapping(py.as_set, px.as_set, tuple(table))


def restrict_preimage_to_image(f: Mapping, max_base: int = DEFAULT_MAX_BASE) -> Mapping:
    """Preimage map restricted to subsets of the image of f.

    The domain is the powerset carrier of the image (as its own canonical
    carrier); the restriction is injective for every f, because taking the
    image is a one-sided inverse on subsets of the image.
    """
    img = image(f).elements()
    dom_carrier = power_set(FiniteSet(len(img)), max_base)
    px = power_set(f.dom, max_base)
    table = []
    for v in range(dom_carrier.as_set.size):
        ybits = 0
        for j, y in enumerate(img):
            if v >> j & 1:
                ybits |= 1 << y
        bits = 0
        for x, y in enumerate(f.table):
            if ybits >> y & 1:
                bits |= 1 << x
        table.append(bits)
    return Mapping(dom_carrier.as_set, px.as_set, tuple(table))


def iota(base: FiniteSet) -> Mapping:
    """Identification of each element with its singleton block.

    The discrete partition lists singletons in element order, so the map is
    the identity on indices; it exists as a named map so that statements
    identifying a carrier with its discrete partition are literally testable.
    """
    blocks = discrete(base).blocks
    return Mapping(base, FiniteSet(len(blocks)), tuple(range(base.size)))


def kappa(f: Mapping, max_base: int = DEFAULT_MAX_BASE) -> Mapping:
    """Identification of P(image f) with the kernel blocks of the preimage map.

    Two subsets of the codomain have the same preimage exactly when they cut
    the image identically, so the class of U is reached from V = U n image(f);
    kappa sends encoded V to the index of that class. It is a bijection for
    every f.
    """
    img = image(f).elements()
    dom_carrier = power_set(FiniteSet(len(img)), max_base)
    part = kernel_partition(preimage_map(f, max_base))
    table = []
    for v in range(dom_carrier.as_set.size):
        u = 0
        for j, y in enumerate(img):
            if v >> j & 1:
                u |= 1 << y
        table.append(part.block_index(u))
    return Mapping(dom_carrier.as_set, FiniteSet(len(part.blocks)), tuple(table))
