"""Ascending integer sequences with multiset semantics.

An ``IntSeq`` is the shared vocabulary of the whole package: twist
sequences of free summands, difference multisets, lattice coordinates.
Equality is structural, values are immutable, and every operation is a
pointwise statement about multiplicities.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

from .errors import BadInput, NotSubMultiset


class IntSeq:
    """An ascending finite sequence of integers, possibly empty.

    The constructor sorts its input, so the canonical ascending form is
    an invariant and two sequences are equal iff they agree as multisets.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[int] = ()):
        xs = []
        for x in entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"IntSeq entries must be integers, got {x!r}")
            xs.append(x)
        xs.sort()
        object.__setattr__(self, "entries", tuple(xs))

    def __setattr__(self, name, value):
        raise AttributeError("IntSeq is immutable")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntSeq) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __lt__(self, other: "IntSeq") -> bool:
        return self.entries < other.entries

    def __repr__(self) -> str:
        return f"IntSeq({list(self.entries)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"

    def __add__(self, other: "IntSeq") -> "IntSeq":
        return seq_sum(self, other)

    def count(self, t: int) -> int:
        """Multiplicity of the value t."""
        return self.entries.count(t)

    def total(self) -> int:
        return sum(self.entries)

    def counter(self) -> Counter:
        return Counter(self.entries)

    def to_json(self) -> list[int]:
        return list(self.entries)

    @classmethod
    def from_json(cls, data) -> "IntSeq":
        if not isinstance(data, list):
            raise BadInput("integer sequence must be a JSON array")
        return cls(data)


def seq_sum(x: IntSeq, y: IntSeq) -> IntSeq:
    """Multiset union: result multiplicity is the sum at every value."""
    return IntSeq(x.entries + y.entries)


def seq_diff(x: IntSeq, y: IntSeq) -> IntSeq:
    """Multiset difference, defined only when y is a sub-multiset of x."""
    cx = x.counter()
    cx.subtract(y.counter())
    if any(v < 0 for v in cx.values()):
        raise NotSubMultiset(f"{y} is not a sub-multiset of {x}")
    return IntSeq(cx.elements())


def seq_min(x: IntSeq, y: IntSeq) -> IntSeq:
    """Pointwise minimum of multiplicities."""
    cx, cy = x.counter(), y.counter()
    out = []
    for t in cx.keys() & cy.keys():
        out.extend([t] * min(cx[t], cy[t]))
    return IntSeq(out)


def seq_max(x: IntSeq, y: IntSeq) -> IntSeq:
    """Pointwise maximum of multiplicities."""
    cx, cy = x.counter(), y.counter()
    out = []
    for t in cx.keys() | cy.keys():
        out.extend([t] * max(cx[t], cy[t]))
    return IntSeq(out)


def is_sub_multiset(x: IntSeq, y: IntSeq) -> bool:
    """True when every value occurs in y at least as often as in x."""
    cy = y.counter()
    return all(cy[t] >= k for t, k in x.counter().items())


def parse_values(text: str) -> list[int]:
    """Expand a comma list with caret repetition, e.g. ``1^5,4`` or ``-1^5,0``.

    Order is preserved; an empty or blank string expands to the empty list.
    """
    text = text.strip()
    if not text:
        return []
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise BadInput(f"empty component in sequence {text!r}")
        if "^" in part:
            base, _, rep = part.partition("^")
            try:
                value, times = int(base), int(rep)
            except ValueError:
                raise BadInput(f"bad caret component {part!r}") from None
            if times < 0:
                raise BadInput(f"negative repetition in {part!r}")
            out.extend([value] * times)
        else:
            try:
                out.append(int(part))
            except ValueError:
                raise BadInput(f"bad integer {part!r}") from None
    return out


def parse_seq(text: str) -> IntSeq:
    """Parse a caret comma list into an (ascending) IntSeq."""
    return IntSeq(parse_values(text))
