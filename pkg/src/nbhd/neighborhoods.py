"""Neighborhood families on the integer lattice.

Two families cover the classical cellular-automata neighborhoods and their
radius generalizations:

* ``K_RADIUS``: cells whose offset has at most ``k`` (or, sharp, exactly
  ``k``) nonzero components, each bounded by ``r`` in absolute value.
  ``k=1, r=1`` is von Neumann's neighborhood, ``k=d, r=1`` is Moore's,
  ``k=1, r>1`` is the narrow von Neumann extension, ``k=d, r>1`` is Moore
  of radius ``r``.
* ``DIAMOND``: cells at Manhattan distance at most ``r`` (or, sharp,
  exactly ``r``).  Radius 1 coincides with von Neumann's neighborhood.

The center cell (the all-zero offset) is never a member of any
neighborhood.  All types here are immutable values and all functions are
pure, so everything is safe to share between threads.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CapacityError, DimensionError, DomainError, ParseError

Offset = tuple[int, ...]

# Safety rails for enumeration and box scans; overridable per call.
DEFAULT_OFFSET_CAP = 2**24
DEFAULT_BOX_CAP = 2**26


class Family(enum.Enum):
    K_RADIUS = "k-radius"
    DIAMOND = "diamond"


@dataclass(frozen=True)
class NeighborhoodSpec:
    """Parameters selecting one neighborhood: family, dimension, k, r, sharpness.

    ``sharp_k`` restricts to exactly ``k`` nonzero components (k-radius family
    only); ``sharp_r`` restricts to the shell at distance exactly ``r`` instead
    of the filled set at distance up to ``r``.
    """

    dimension: int
    family: Family = Family.K_RADIUS
    k: int | None = None
    r: int = 1
    sharp_k: bool = False
    sharp_r: bool = False

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise DomainError(f"dimension must be >= 1, got {self.dimension}")
        if self.r < 1:
            raise DomainError(f"r must be >= 1, got {self.r}")
        if self.family is Family.K_RADIUS:
            if self.k is None:
                raise DomainError("k is required for the k-radius family")
            if not 1 <= self.k <= self.dimension:
                raise DomainError(
                    f"k must satisfy 1 <= k <= dimension={self.dimension}, got {self.k}"
                )
        else:
            if self.k is not None:
                raise DomainError("the diamond family takes no k")
            if self.sharp_k:
                raise DomainError("sharp_k does not apply to the diamond family")


def k_radius(
    dimension: int, k: int, r: int = 1, *, sharp_k: bool = False, sharp_r: bool = False
) -> NeighborhoodSpec:
    return NeighborhoodSpec(dimension, Family.K_RADIUS, k, r, sharp_k, sharp_r)


def diamond(dimension: int, r: int = 1, *, sharp_r: bool = False) -> NeighborhoodSpec:
    return NeighborhoodSpec(dimension, Family.DIAMOND, None, r, False, sharp_r)


def von_neumann(dimension: int) -> NeighborhoodSpec:
    return k_radius(dimension, 1, 1)


def moore(dimension: int, r: int = 1) -> NeighborhoodSpec:
    return k_radius(dimension, dimension, r)


def narrow_von_neumann(dimension: int, r: int) -> NeighborhoodSpec:
    return k_radius(dimension, 1, r)


# --------------------------------------------------------------------------
# Distances


@dataclass(frozen=True)
class DistanceKind:
    """One of the lattice metrics: manhattan, chebyshev, or minkowski(p)."""

    name: str
    p: int | None = None

    def __post_init__(self) -> None:
        if self.name not in ("manhattan", "chebyshev", "minkowski"):
            raise DomainError(f"unknown distance kind {self.name!r}")
        if self.name == "minkowski":
            if self.p is None or self.p < 1:
                raise DomainError("minkowski needs a positive integer p")
        elif self.p is not None:
            raise DomainError(f"{self.name} takes no p")


MANHATTAN = DistanceKind("manhattan")
CHEBYSHEV = DistanceKind("chebyshev")


def minkowski(p: int) -> DistanceKind:
    return DistanceKind("minkowski", p)


def _deltas(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) != len(b):
        raise DimensionError(f"offset lengths differ: {len(a)} vs {len(b)}")
    if not a:
        raise DimensionError("offsets must have at least one component")
    return [abs(x - y) for x, y in zip(a, b)]


def _integer_root(n: int, p: int) -> int:
    """Largest integer x with x**p <= n.  Exact for arbitrarily large n."""
    if n < 0:
        raise DomainError("negative radicand")
    if p == 1 or n in (0, 1):
        return n
    x = int(round(n ** (1.0 / p)))
    while x > 0 and x**p > n:
        x -= 1
    while (x + 1) ** p <= n:
        x += 1
    return x


def distance(kind: DistanceKind, a: Sequence[int], b: Sequence[int]) -> int | float:
    """Distance between two lattice points under the given metric.

    Manhattan and Chebyshev values are exact integers.  Minkowski(p) returns
    an exact integer whenever the p-th root is exact and a float otherwise;
    for membership decisions use within_distance, which never touches
    floating point.
    """
    deltas = _deltas(a, b)
    if kind.name == "manhattan":
        return sum(deltas)
    if kind.name == "chebyshev":
        return max(deltas)
    power = sum(delta ** kind.p for delta in deltas)
    root = _integer_root(power, kind.p)
    if root ** kind.p == power:
        return root
    return power ** (1.0 / kind.p)


def within_distance(kind: DistanceKind, a: Sequence[int], b: Sequence[int], r: int) -> bool:
    """Whether distance(kind, a, b) <= r, decided in exact integer arithmetic.

    Minkowski(p) compares sum(|delta|**p) against r**p so that membership
    never depends on floating-point roots.
    """
    deltas = _deltas(a, b)
    if kind.name == "manhattan":
        return sum(deltas) <= r
    if kind.name == "chebyshev":
        return max(deltas) <= r
    return sum(delta ** kind.p for delta in deltas) <= r ** kind.p


# --------------------------------------------------------------------------
# Membership and enumeration


def contains(spec: NeighborhoodSpec, delta: Sequence[int]) -> bool:
    """Whether the offset ``delta`` belongs to the neighborhood ``spec``.

    The all-zero offset (the center cell) is never a member.
    """
    if len(delta) != spec.dimension:
        raise DimensionError(
            f"offset has {len(delta)} components, spec dimension is {spec.dimension}"
        )
    if spec.family is Family.DIAMOND:
        total = sum(abs(c) for c in delta)
        if total == 0:
            return False
        return total == spec.r if spec.sharp_r else total <= spec.r
    largest = max(abs(c) for c in delta)
    if largest == 0 or largest > spec.r:
        return False
    nonzero = sum(1 for c in delta if c)
    if spec.sharp_k:
        if nonzero != spec.k:
            return False
    elif nonzero > spec.k:
        return False
    return largest == spec.r if spec.sharp_r else True


def _nonzero_values(r: int) -> tuple[int, ...]:
    return tuple(range(-r, 0)) + tuple(range(1, r + 1))


def _place(dimension: int, positions: tuple[int, ...], values: tuple[int, ...]) -> Offset:
    offset = [0] * dimension
    for pos, val in zip(positions, values):
        offset[pos] = val
    return tuple(offset)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0, *cuts, total)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def _members(spec: NeighborhoodSpec) -> Iterator[Offset]:
    # Generates each member exactly once: the nonzero positions of an offset
    # determine its decomposition, so distinct (positions, values) choices
    # give distinct offsets.
    d, r = spec.dimension, spec.r
    if spec.family is Family.DIAMOND:
        for j in range(1, min(d, r) + 1):
            totals = (r,) if spec.sharp_r else range(j, r + 1)
            for positions in itertools.combinations(range(d), j):
                for total in totals:
                    for magnitudes in _compositions(total, j):
                        for signs in itertools.product((-1, 1), repeat=j):
                            values = tuple(s * m for s, m in zip(signs, magnitudes))
                            yield _place(d, positions, values)
        return
    sizes = (spec.k,) if spec.sharp_k else range(1, spec.k + 1)
    for j in sizes:
        for positions in itertools.combinations(range(d), j):
            for values in itertools.product(_nonzero_values(r), repeat=j):
                if spec.sharp_r and max(abs(v) for v in values) != r:
                    continue
                yield _place(d, positions, values)


def enumerate_offsets(spec: NeighborhoodSpec, *, offset_cap: int | None = None) -> list[Offset]:
    """All member offsets of ``spec`` in lexicographic order.

    The first component is most significant and each component ranges over
    -r..r.  The result contains no duplicates and never the zero offset, and
    its length equals count(spec).  Raises CapacityError when count(spec)
    exceeds the cap (default 2**24 offsets).
    """
    cap = DEFAULT_OFFSET_CAP if offset_cap is None else offset_cap
    from .counting import count  # counting imports this module; import at call time

    total = count(spec)
    if total > cap:
        raise CapacityError(f"{total} offsets would exceed the cap of {cap}")
    return sorted(_members(spec))


def brute_force_count(spec: NeighborhoodSpec, *, box_cap: int | None = None) -> int:
    """Count members by scanning every point of the box [-r, r]^d.

    Deliberately independent of every closed-form formula; this is the
    oracle the counting module is checked against.  Raises CapacityError
    when the box holds more than the cap (default 2**26 points).
    """
    cap = DEFAULT_BOX_CAP if box_cap is None else box_cap
    d, r = spec.dimension, spec.r
    box = (2 * r + 1) ** d
    if box > cap:
        raise CapacityError(f"box of {box} lattice points would exceed the cap of {cap}")
    return sum(
        1 for delta in itertools.product(range(-r, r + 1), repeat=d) if contains(spec, delta)
    )


# --------------------------------------------------------------------------
# Serialization: comma-separated components, one offset per line


def format_offset(offset: Sequence[int]) -> str:
    return ",".join(str(c) for c in offset)


def parse_offset(text: str) -> Offset:
    fields = text.strip().split(",")
    try:
        return tuple(int(f) for f in fields)
    except ValueError:
        raise ParseError(f"not a comma-separated integer tuple: {text!r}") from None
