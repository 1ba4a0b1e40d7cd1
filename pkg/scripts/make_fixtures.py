"""Regenerate the golden b-files under tests/fixtures/.

Every term is cross-validated before being written: formula values are
checked against an independent route (recurrence, brute-force lattice scan,
or a memo-free lattice-path walk) so a bug in the generator cannot silently
freeze itself into the golden files.
"""

from __future__ import annotations

import sys
from pathlib import Path

from nbhd import (
    SequenceId,
    brute_force_count,
    diamond,
    emit_bfile,
    generate,
    k_radius,
)
from nbhd.counting import diamond_sharp_count_rec, k_count_rec, sharp_k_count_rec

TERMS = 64
# brute-force scans are cheap only while the bounding box stays small
BOX_LIMIT = 300_000

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def walk_paths(d: int, r: int) -> int:
    """Count monotone lattice paths (0,0)->(d,r) with steps E, N, NE.

    Deliberately memo-free so it shares nothing with the library recurrences.
    """
    if d == 0 or r == 0:
        return 1
    return walk_paths(d - 1, r) + walk_paths(d, r - 1) + walk_paths(d - 1, r - 1)


def check(cond: bool, what: str) -> None:
    if not cond:
        sys.exit(f"fixture validation failed: {what}")


def validate_a005843(values: list[int]) -> None:
    for d, v in enumerate(values):
        check(v == 2 * d, f"A005843 a({d})")
        if 1 <= d <= 8:
            check(v == brute_force_count(k_radius(d, 1)), f"A005843 box scan d={d}")


def validate_a024023(values: list[int]) -> None:
    for d, v in enumerate(values):
        check(v == 3**d - 1, f"A024023 a({d})")
        if 1 <= d <= 5:
            check(v == brute_force_count(k_radius(d, d)), f"A024023 box scan d={d}")


def _triangle_cells(n: int, first_k: int):
    d = 1 if first_k == 1 else 0
    k = first_k
    for _ in range(n):
        yield d, k
        k += 1
        if k > d:
            d += 1
            k = first_k


def validate_a013609(values: list[int]) -> None:
    row_sum = {}
    for (d, k), v in zip(_triangle_cells(len(values), 0), values):
        if k == 0:
            check(v == 1, f"A013609 k=0 column d={d}")
        else:
            check(v == sharp_k_count_rec(d, k), f"A013609 recurrence d={d} k={k}")
        row_sum[d] = row_sum.get(d, 0) + v
        if k == d:
            check(row_sum[d] == 3**d, f"A013609 row sum d={d}")
        if 1 <= k and 3**d <= BOX_LIMIT:
            check(
                v == brute_force_count(k_radius(d, k, sharp_k=True)),
                f"A013609 box scan d={d} k={k}",
            )


def validate_a265014(values: list[int]) -> None:
    for (d, k), v in zip(_triangle_cells(len(values), 1), values):
        check(v == k_count_rec(d, k), f"A265014 recurrence d={d} k={k}")
        if 3**d <= BOX_LIMIT:
            check(v == brute_force_count(k_radius(d, k)), f"A265014 box scan d={d} k={k}")


def validate_a266213(values: list[int]) -> None:
    cells = []
    s = 2
    while len(cells) < len(values):
        for d in range(1, s):
            cells.append((d, s - d))
        s += 1
    for (d, r), v in zip(cells, values):
        check(v == diamond_sharp_count_rec(d, r), f"A266213 recurrence d={d} r={r}")
        if (2 * r + 1) ** d <= BOX_LIMIT:
            check(
                v == brute_force_count(diamond(d, r, sharp_r=True)),
                f"A266213 box scan d={d} r={r}",
            )


def validate_a008288(values: list[int]) -> None:
    cells = []
    s = 0
    while len(cells) < len(values):
        for d in range(s + 1):
            cells.append((d, s - d))
        s += 1
    for (d, r), v in zip(cells, values):
        check(v == walk_paths(d, r), f"A008288 path walk d={d} r={r}")
        if d >= 1 and r >= 1 and (2 * r + 1) ** d <= BOX_LIMIT:
            check(
                v == brute_force_count(diamond(d, r)) + 1,
                f"A008288 diamond+1 d={d} r={r}",
            )


VALIDATORS = {
    SequenceId.A005843: validate_a005843,
    SequenceId.A024023: validate_a024023,
    SequenceId.A013609: validate_a013609,
    SequenceId.A265014: validate_a265014,
    SequenceId.A266213: validate_a266213,
    SequenceId.A008288: validate_a008288,
}


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    for seq_id, validator in VALIDATORS.items():
        values = [entry.value for entry in generate(seq_id, TERMS)]
        validator(values)
        path = FIXTURES / f"b{seq_id.value[1:]}.txt"
        with path.open("wb") as sink:
            emit_bfile(seq_id, TERMS, sink)
        print(f"{path.name}: {TERMS} terms validated and written")


if __name__ == "__main__":
    main()
