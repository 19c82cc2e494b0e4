"""Chu spaces over a finite alphabet and the evaluation spaces over powersets.

A space is (points, states, matrix) with matrix entries drawn from the
alphabet; a morphism is a forward map on points together with a backward map
on states, adjoint in the sense that evaluating a point against a pulled-back
state equals evaluating the pushed-forward point against the original state.
Composition chains forward maps left to right and backward maps right to
left; that is the unique order under which adjointness is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finset import Deviation, FiniteSet, Mapping, deviation
from .powerset import DEFAULT_MAX_BASE, power_set, preimage_map


@dataclass(frozen=True)
class ChuSpace:
    points: FiniteSet
    states: FiniteSet
    alphabet: FiniteSet
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.matrix) != self.points.size:
            raise ValueError("matrix needs one row per point")
        for row in self.matrix:
            if len(row) != self.states.size:
                raise ValueError("matrix rows need one entry per state")
            for w in row:
                if not 0 <= w < self.alphabet.size:
                    raise ValueError(f"matrix entry {w} outside the alphabet")

    @classmethod
    def from_json_dict(cls, data: dict) -> ChuSpace:
        if not isinstance(data, dict) or set(data) != {"points", "states", "alphabet", "matrix"}:
            raise ValueError(
                'chu literal needs exactly the keys "points", "states", "alphabet", "matrix"'
            )
        return cls(
            FiniteSet(data["points"]),
            FiniteSet(data["states"]),
            FiniteSet(data["alphabet"]),
            tuple(tuple(row) for row in data["matrix"]),
        )

    def to_json_dict(self) -> dict:
        return {
            "points": self.points.size,
            "states": self.states.size,
            "alphabet": self.alphabet.size,
            "matrix": [list(row) for row in self.matrix],
        }

    def value(self, x: int, y: int) -> int:
        return self.matrix[x][y]


@dataclass(frozen=True)
class ChuMorphism:
    forward: Mapping
    backward: Mapping

    def to_json_dict(self) -> dict:
        return {"forward": self.forward.to_json_dict(), "backward": self.backward.to_json_dict()}


def identity_morphism(space: ChuSpace) -> ChuMorphism:
    return ChuMorphism(Mapping.identity(space.points), Mapping.identity(space.states))


def morphism_is_valid(m: ChuMorphism, src: ChuSpace, dst: ChuSpace) -> bool:
    """Adjointness of the pair against the two matrices, checked pointwise."""
    if m.forward.dom != src.points or m.forward.cod != dst.points:
        raise ValueError("forward component does not match the point carriers")
    if m.backward.dom != dst.states or m.backward.cod != src.states:
        raise ValueError("backward component does not match the state carriers")
    for x in range(src.points.size):
        fx = m.forward.table[x]
        row_src = src.matrix[x]
        row_dst = dst.matrix[fx]
        for v in range(dst.states.size):
            if row_src[m.backward.table[v]] != row_dst[v]:
                return False
    return True


def compose(m: ChuMorphism, n: ChuMorphism) -> ChuMorphism:
    """Composite of m : A -> B with n : B -> C."""
    return ChuMorphism(m.forward.then(n.forward), n.backward.then(m.backward))


def e_space(base: FiniteSet, max_base: int = DEFAULT_MAX_BASE) -> ChuSpace:
    """Evaluation space: points of the carrier against all of its subsets."""
    states = power_set(base, max_base).as_set
    matrix = tuple(
        tuple(a >> x & 1 for a in range(states.size)) for x in range(base.size)
    )
    return ChuSpace(base, states, FiniteSet(2), matrix)


def embed(f: Mapping, max_base: int = DEFAULT_MAX_BASE) -> ChuMorphism:
    """Represent a plain mapping between evaluation spaces.

    Forward is f itself, backward is the preimage map on subsets; the pair is
    adjoint because membership of x in a preimage is membership of f(x).
    """
    return ChuMorphism(f, preimage_map(f, max_base))


def forced_backward(u: Mapping, max_base: int = DEFAULT_MAX_BASE) -> Mapping:
    """The unique backward map making u valid between evaluation spaces.

    Membership of x in the backward image of a state B is pinned by the
    adjointness equation to membership of u(x) in B; the table is built from
    that equation alone.
    """
    if u.dom.size > max_base or u.cod.size > max_base:
        raise ValueError(f"evaluation spaces are bounded at base size {max_base}")
    src_states = 1 << u.dom.size
    dst_states = 1 << u.cod.size
    table = []
    for b in range(dst_states):
        bits = 0
        for x in range(u.dom.size):
            if b >> u.table[x] & 1:
                bits |= 1 << x
        table.append(bits)
    return Mapping(FiniteSet(dst_states), FiniteSet(src_states), tuple(table))


def ex_mapping(base: FiniteSet, max_base: int = DEFAULT_MAX_BASE) -> Mapping:
    """Evaluation matrix flattened to one mapping on (point, subset) pairs.

    Pair (x, A) sits at index x * 2**n + A.
    """
    if base.size > max_base:
        raise ValueError(f"evaluation spaces are bounded at base size {max_base}")
    n = base.size
    states = 1 << n
    table = tuple(a >> x & 1 for x in range(n) for a in range(states))
    return Mapping(FiniteSet(n * states), FiniteSet(2), table)


def ex_deviation(base: FiniteSet, max_base: int = DEFAULT_MAX_BASE) -> Deviation:
    """Deviation of the flattened evaluation matrix.

    Needs at least two points; below that the evaluation matrix does not
    reach both alphabet values and the two-block shape degenerates.
    """
    if base.size < 2:
        raise ValueError("evaluation deviation needs a carrier with at least 2 elements")
    return deviation(ex_mapping(base, max_base))
