"""The six OEIS sequences the neighborhood counts trace out.

Layouts and index offsets follow the vendored reference b-files under
tests/fixtures (see the README there for each sequence's linearization).
b-file format: one "n a(n)" pair per line, single space, newline-terminated,
no header.
"""

from __future__ import annotations

import enum
import itertools
from typing import IO, Iterable, Iterator, NamedTuple

from .counting import binomial, diamond_sharp_count, k_count
from .errors import DomainError, ParseError


class SequenceId(enum.Enum):
    A005843 = "A005843"  # 2d: von Neumann neighborhood sizes
    A024023 = "A024023"  # 3^d - 1: Moore neighborhood sizes
    A013609 = "A013609"  # triangle 2^k * C(d,k), sharp k-neighborhood sizes
    A265014 = "A265014"  # triangle of k-neighborhood sizes
    A266213 = "A266213"  # sharp diamond sizes, antidiagonals
    A008288 = "A008288"  # Delannoy square, antidiagonals


class SequenceEntry(NamedTuple):
    index: int
    value: int


class Mismatch(NamedTuple):
    index: int
    expected: int  # value claimed by the reference
    actual: int  # value this package generates


_OFFSETS = {
    SequenceId.A005843: 0,
    SequenceId.A024023: 0,
    SequenceId.A013609: 0,
    SequenceId.A265014: 1,
    SequenceId.A266213: 1,
    SequenceId.A008288: 0,
}


def _sharp_k_triangle() -> Iterator[int]:
    # row d lists 2^k * C(d,k) for k = 0..d; the k = 0 entry is 1
    for d in itertools.count():
        for k in range(d + 1):
            yield binomial(d, k) << k


def _k_triangle() -> Iterator[int]:
    # row d lists the k-neighborhood sizes for k = 1..d
    for d in itertools.count(1):
        for k in range(1, d + 1):
            yield k_count(d, k)


def _diamond_sharp_antidiagonals() -> Iterator[int]:
    # square array indexed by (dimension, radius), both from 1, read by
    # antidiagonals with the dimension increasing inside each antidiagonal
    for s in itertools.count(2):
        for d in range(1, s):
            yield diamond_sharp_count(d, s - d)


def _delannoy_antidiagonals() -> Iterator[int]:
    # Delannoy square indexed from (0, 0), read by antidiagonals; each
    # antidiagonal is a palindrome, so the direction does not matter
    table: dict[tuple[int, int], int] = {}
    for s in itertools.count():
        for i in range(s + 1):
            j = s - i
            if i == 0 or j == 0:
                value = 1
            else:
                value = table[i - 1, j] + table[i - 1, j - 1] + table[i, j - 1]
            table[i, j] = value
            yield value


def _values(seq_id: SequenceId) -> Iterator[int]:
    if seq_id is SequenceId.A005843:
        return (2 * n for n in itertools.count())
    if seq_id is SequenceId.A024023:
        return (3**n - 1 for n in itertools.count())
    if seq_id is SequenceId.A013609:
        return _sharp_k_triangle()
    if seq_id is SequenceId.A265014:
        return _k_triangle()
    if seq_id is SequenceId.A266213:
        return _diamond_sharp_antidiagonals()
    if seq_id is SequenceId.A008288:
        return _delannoy_antidiagonals()
    raise DomainError(f"unknown sequence id {seq_id!r}")


def generate(seq_id: SequenceId, terms: int) -> list[SequenceEntry]:
    """The first ``terms`` entries of the sequence, indices starting at the
    sequence's declared offset."""
    if terms < 1:
        raise DomainError(f"terms must be >= 1, got {terms}")
    offset = _OFFSETS.get(seq_id)
    if offset is None:
        raise DomainError(f"unknown sequence id {seq_id!r}")
    values = itertools.islice(_values(seq_id), terms)
    return [SequenceEntry(offset + i, v) for i, v in enumerate(values)]


def emit_bfile(seq_id: SequenceId, terms: int, sink: IO[bytes]) -> None:
    """Write the sequence to ``sink`` in OEIS b-file format."""
    for index, value in generate(seq_id, terms):
        sink.write(f"{index} {value}\n".encode("ascii"))


def parse_bfile(source: Iterable[bytes] | Iterable[str]) -> list[SequenceEntry]:
    """Parse b-file lines into entries.

    Blank lines and '#' comment lines are skipped; anything else that is not
    two integer fields raises ParseError naming the line number.
    """
    entries = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.decode("ascii") if isinstance(raw, bytes) else raw
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected 'n a(n)', got {line!r}")
        try:
            entries.append(SequenceEntry(int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field in {line!r}") from None
    return entries


def diff_against_reference(
    seq_id: SequenceId, reference: Iterable[bytes] | Iterable[str]
) -> list[Mismatch]:
    """Compare generated values against a reference b-file.

    Returns one Mismatch per disagreeing index over the overlap (indices the
    reference covers and this package generates); empty means full agreement.
    """
    ref_entries = parse_bfile(reference)
    if not ref_entries:
        return []
    offset = _OFFSETS[seq_id]
    last = max(e.index for e in ref_entries)
    if last < offset:
        return []
    ours = {e.index: e.value for e in generate(seq_id, last - offset + 1)}
    return [
        Mismatch(e.index, expected=e.value, actual=ours[e.index])
        for e in ref_entries
        if e.index in ours and ours[e.index] != e.value
    ]
