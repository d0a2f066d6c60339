"""Betti pairs: twist data of a short free resolution and their invariants.

A ``BettiPair`` records the ambient dimension n together with two ascending
sequences (a, b): the source and target twists of a two-term resolution of a
rank r = len(b) - len(a) sheaf.  The module decides which pairs are realized
by bundles (admissibility), computes the numeric invariants attached to a
pair, and enumerates all admissible pairs with fixed rank, first Chern class
and bounded regularity.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .errors import BadInput, EmptyPair
from .seqs import IntSeq, is_sub_multiset, seq_diff, seq_min, seq_sum


class BettiPair:
    """A pair of ascending twist sequences over P^n with len(b) > len(a)."""

    __slots__ = ("n", "a", "b")

    def __init__(self, n: int, a, b):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"ambient dimension must be a positive integer, got {n!r}")
        a = a if isinstance(a, IntSeq) else IntSeq(a)
        b = b if isinstance(b, IntSeq) else IntSeq(b)
        if len(b) <= len(a):
            raise ValueError(f"need len(b) > len(a), got {len(b)} <= {len(a)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("BettiPair is immutable")

    @property
    def l(self) -> int:
        return len(self.a)

    @property
    def r(self) -> int:
        return len(self.b) - len(self.a)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BettiPair)
            and self.n == other.n
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self) -> int:
        return hash((self.n, self.a.entries, self.b.entries))

    def __repr__(self) -> str:
        return f"BettiPair(n={self.n}, a={self.a}, b={self.b})"

    def is_admissible(self) -> bool:
        """True iff a is empty, or r >= n and a_i > b_{n+i} for every i."""
        if not self.a:
            return True
        if self.r < self.n:
            return False
        b = self.b.entries
        return all(ai > b[self.n + i] for i, ai in enumerate(self.a.entries))

    def c1(self) -> int:
        """First Chern class: sum(a) - sum(b)."""
        return self.a.total() - self.b.total()

    def regularity(self) -> int:
        """max(b_last, a_last - 1); just b_last when a is empty."""
        if not self.b:
            raise EmptyPair("regularity of an empty pair is undefined")
        if not self.a:
            return self.b.entries[-1]
        return max(self.b.entries[-1], self.a.entries[-1] - 1)

    def grading_q(self) -> int:
        """Number of entries common to a and b, counted with multiplicity."""
        return len(seq_min(self.a, self.b))

    def add_common(self, c: IntSeq) -> "BettiPair":
        """The pair obtained by appending c to both sides and resorting."""
        return BettiPair(self.n, seq_sum(self.a, c), seq_sum(self.b, c))

    def to_json(self) -> dict:
        return {"n": self.n, "a": self.a.to_json(), "b": self.b.to_json()}

    @classmethod
    def from_json(cls, data) -> "BettiPair":
        try:
            return cls(int(data["n"]), IntSeq.from_json(data["a"]), IntSeq.from_json(data["b"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise BadInput(f"malformed Betti pair: {exc}") from None


def generalization_witness(p: BettiPair, q: BettiPair) -> IntSeq | None:
    """The unique c with q = p + c on both sides, or None when there is none.

    p and q must live over the same ambient dimension.
    """
    if p.n != q.n:
        raise ValueError("pairs live over different ambient dimensions")
    if not (is_sub_multiset(p.a, q.a) and is_sub_multiset(p.b, q.b)):
        return None
    c = seq_diff(q.a, p.a)
    if seq_diff(q.b, p.b) != c:
        return None
    return c


def generalizes(p: BettiPair, q: BettiPair) -> bool:
    """True iff q is obtained from p by adding a common multiset to both sides."""
    return generalization_witness(p, q) is not None


def _ascending_with_sum(length, total, lo, hi):
    """Ascending integer tuples of given length and sum, entries in [lo, hi]."""
    if length == 0:
        if total == 0:
            yield ()
        return
    # remaining entries are >= v, so prune by feasible sum windows
    first_hi = min(hi, total // length)
    for v in range(lo, first_hi + 1):
        rest = total - v
        if rest > hi * (length - 1):
            continue
        for tail in _ascending_with_sum(length - 1, rest, v, hi):
            yield (v,) + tail


def _a_choices(prefix_min, lows, hi, total):
    """Ascending tuples with per-index lower bounds ``lows`` and fixed sum."""
    k = len(lows)
    if k == 0:
        if total == 0:
            yield ()
        return
    lo = max(prefix_min, lows[0])
    for v in range(lo, hi + 1):
        rest = total - v
        if rest < 0:
            break
        if rest > hi * (k - 1) or rest < sum(max(v, w) for w in lows[1:]):
            continue
        for tail in _a_choices(v, lows[1:], hi, rest):
            yield (v,) + tail


def enumerate_admissible(n: int, r: int, c1: int, d: int) -> frozenset[BettiPair]:
    """All admissible pairs over P^n with rank r, first Chern class c1 and
    regularity at most d.

    The search box comes from the finiteness argument: every entry of b is at
    most d and every entry of a at most d+1; the number l of a-entries obeys
    l <= c1 + r*d; and b_1 >= -c1 - (r-1)*d + l.  Split pairs (empty a) are
    the ascending b with sum(b) = -c1 and b_last <= d.
    """
    if not (isinstance(r, int) and r >= 1 and isinstance(n, int) and n >= 1):
        raise ValueError("need integer r >= 1 and n >= 1")
    found = set()
    # split pairs
    lo_split = -c1 - (r - 1) * d
    if lo_split <= d:
        for b in _ascending_with_sum(r, -c1, lo_split, d):
            found.add(BettiPair(n, (), b))
    # pairs with nonempty a exist only for r >= n
    if r >= n:
        for l in range(1, c1 + r * d + 1):
            b_lo = -c1 - (r - 1) * d + l
            if b_lo > d:
                continue
            for b in combinations_with_replacement(range(b_lo, d + 1), l + r):
                target = c1 + sum(b)
                lows = tuple(b[n + i] + 1 for i in range(l))
                if target < sum(lows) or target > l * (d + 1):
                    continue
                for a in _a_choices(lows[0], lows, d + 1, target):
                    pair = BettiPair(n, a, b)
                    if pair.is_admissible() and pair.regularity() <= d:
                        found.add(pair)
    return frozenset(found)
