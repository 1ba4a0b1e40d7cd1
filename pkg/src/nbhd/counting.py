"""Closed forms and recurrences for neighborhood sizes.

Every function returns a plain Python int, so results are exact at any
size.  Formula/recurrence pairs are intentionally redundant: each pair is
cross-checked in the test suite, and everything is checked against the
brute-force box scan in the neighborhoods module.  Recurrences fill dense
per-call tables iteratively; there is no shared mutable state.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .neighborhoods import Family, NeighborhoodSpec, brute_force_count


def binomial(n: int, k: int) -> int:
    """C(n, k), exact; 0 when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def _require_dk(d: int, k: int) -> None:
    if not 1 <= k <= d:
        raise DomainError(f"need 1 <= k <= d, got k={k}, d={d}")


def _require_dr(d: int, r: int) -> None:
    if d < 1 or r < 1:
        raise DomainError(f"need d >= 1 and r >= 1, got d={d}, r={r}")


def sharp_k_count(d: int, k: int) -> int:
    """Offsets with exactly k nonzero components, each -1 or 1: 2^k * C(d, k)."""
    _require_dk(d, k)
    return (1 << k) * binomial(d, k)


def sharp_k_count_rec(d: int, k: int) -> int:
    """Same value as sharp_k_count via the row recurrence
    T(d, k) = 2*T(d-1, k-1) + T(d-1, k) with T(d, 0) = 1."""
    _require_dk(d, k)
    row = [1]
    for i in range(1, d + 1):
        row = [1] + [
            2 * row[j - 1] + (row[j] if j < i else 0) for j in range(1, i + 1)
        ]
    return row[k]


def k_count(d: int, k: int) -> int:
    """Offsets with 1..k nonzero components, each -1 or 1: sum of 2^j * C(d, j)."""
    _require_dk(d, k)
    return sum((1 << j) * binomial(d, j) for j in range(1, k + 1))


def k_count_rec(d: int, k: int) -> int:
    """Same value as k_count via the separated recurrence
    T(d, k) = T(d, k-1) + T(d-1, k) + T(d-1, k-1) - 2*T(d-1, k-2),
    closed by T(d, 1) = 2d, T(j, j) = 3^j - 1, and T(., j) = 0 for j < 1."""
    _require_dk(d, k)
    table: list[list[int]] = [[0]]  # table[i][j] for 0 <= j <= i; j=0 column is 0
    for i in range(1, d + 1):
        row = [0, 2 * i]
        for j in range(2, i + 1):
            if j == i:
                row.append(3**j - 1)
                continue
            prev = table[i - 1]
            below_k2 = prev[j - 2] if j - 2 >= 1 else 0
            row.append(row[j - 1] + prev[j] + prev[j - 1] - 2 * below_k2)
        table.append(row)
    return table[d][k]


def moore_radius_count(d: int, r: int) -> int:
    """Filled Chebyshev ball of radius r minus the center: (2r+1)^d - 1."""
    _require_dr(d, r)
    return (2 * r + 1) ** d - 1


def moore_radius_sharp_count(d: int, r: int) -> int:
    """Shell at Chebyshev distance exactly r:
    sum over m of C(d, m) * 2^m * (2r-1)^(d-m)."""
    _require_dr(d, r)
    return sum(binomial(d, m) * (1 << m) * (2 * r - 1) ** (d - m) for m in range(1, d + 1))


def diamond_sharp_count(d: int, r: int) -> int:
    """Lattice points at Manhattan distance exactly r:
    sum over k of C(r-1, k-1) * C(d, k) * 2^k."""
    _require_dr(d, r)
    return sum(
        binomial(r - 1, k - 1) * binomial(d, k) * (1 << k)
        for k in range(1, min(d, r) + 1)
    )


def diamond_sharp_count_rec(d: int, r: int) -> int:
    """Same value as diamond_sharp_count via the three-term scheme
    T(d, r) = T(d-1, r) + T(d-1, r-1) + T(d, r-1),
    with T(d, 0) = 1 for d >= 0 and T(0, r) = 0 for r > 0."""
    if d < 0 or r < 0:
        raise DomainError(f"need d >= 0 and r >= 0, got d={d}, r={r}")
    if r == 0:
        return 1
    if d == 0:
        return 0
    row = [1] + [0] * r  # d = 0
    for _ in range(d):
        new = [1] * (r + 1)
        for j in range(1, r + 1):
            new[j] = row[j] + row[j - 1] + new[j - 1]
        row = new
    return row[r]


def diamond_count(d: int, r: int) -> int:
    """Lattice points at Manhattan distance 1..r:
    sum over k of C(r, k) * C(d, k) * 2^k."""
    _require_dr(d, r)
    return sum(
        binomial(r, k) * binomial(d, k) * (1 << k) for k in range(1, min(d, r) + 1)
    )


def delannoy(d: int, r: int) -> int:
    """Delannoy number: lattice paths from (0,0) to (d,r) with steps
    (1,0), (0,1), (1,1).  Equals diamond_count(d, r) + 1 (the center cell).

    Base cases are D(d, 0) = D(0, r) = 1; the recurrence is
    D(d, r) = D(d-1, r) + D(d-1, r-1) + D(d, r-1).
    """
    if d < 0 or r < 0:
        raise DomainError(f"need d >= 0 and r >= 0, got d={d}, r={r}")
    row = [1] * (r + 1)
    for _ in range(d):
        new = [1] * (r + 1)
        for j in range(1, r + 1):
            new[j] = row[j] + row[j - 1] + new[j - 1]
        row = new
    return row[r]


def k_radius_count(d: int, k: int, r: int) -> int:
    """Offsets with 1..k nonzero components, each bounded by r:
    sum over j of C(d, j) * (2r)^j.

    The sum starts at j = 1, which excludes the center cell; including j = 0
    would count it and give a value exactly one larger.
    """
    _require_dk(d, k)
    if r < 1:
        raise DomainError(f"need r >= 1, got r={r}")
    return sum(binomial(d, j) * (2 * r) ** j for j in range(1, k + 1))


def closed_form_available(spec: NeighborhoodSpec) -> bool:
    """Whether count(spec) is computed from a closed form.

    The one gap is the k-radius family sharp on k with r > 1, which falls
    back to the brute-force box scan.
    """
    return not (spec.family is Family.K_RADIUS and spec.sharp_k and spec.r > 1)


def count(spec: NeighborhoodSpec) -> int:
    """Number of cells in the neighborhood, routed to the matching formula."""
    d, r = spec.dimension, spec.r
    if spec.family is Family.DIAMOND:
        return diamond_sharp_count(d, r) if spec.sharp_r else diamond_count(d, r)
    k = spec.k
    if spec.sharp_k:
        if r == 1:
            # at radius 1 every nonzero component is +-1, so the shell and
            # the filled set coincide
            return sharp_k_count(d, k)
        return brute_force_count(spec)
    if spec.sharp_r:
        if r == 1:
            return k_count(d, k)
        return k_radius_count(d, k, r) - k_radius_count(d, k, r - 1)
    return k_radius_count(d, k, r)
