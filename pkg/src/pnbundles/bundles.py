"""Presentation matrices over F_p and the operations that act on them.

A presentation matrix realizes a Betti pair: rows follow the target twists
b, columns the source twists a, and the entry at (i, j) is zero or
homogeneous of degree a_j - b_i.  The cokernel is a bundle exactly when the
ideal of maximal minors is the unit ideal or primary to the irrelevant
maximal ideal, which is what ``verify_bundle`` decides.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from fractions import Fraction

from .betti import BettiPair, generalization_witness
from .errors import (
    BadInput,
    EmptyA,
    ModulusMismatch,
    NotABundle,
    NotAdmissible,
    NotGeneralization,
    ShapeError,
)
from .poly import Ideal, Poly, format_poly, maximal_minors, monomials, parse_poly
from .seqs import IntSeq


class PresMatrix:
    """A homogeneous matrix of forms presenting a candidate bundle."""

    __slots__ = ("pair", "p", "rows")

    def __init__(self, pair: BettiPair, p: int, rows):
        rows = tuple(tuple(row) for row in rows)
        nvars = pair.n + 1
        if len(rows) != pair.l + pair.r:
            raise ShapeError(f"expected {pair.l + pair.r} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != pair.l:
                raise ShapeError(f"row {i} has {len(row)} entries, expected {pair.l}")
            for j, entry in enumerate(row):
                if not isinstance(entry, Poly):
                    raise ValueError(f"entry ({i},{j}) is not a polynomial")
                if entry.p != p or entry.nvars != nvars:
                    raise ModulusMismatch(f"entry ({i},{j}) lives in the wrong ring")
                if entry:
                    want = pair.a.entries[j] - pair.b.entries[i]
                    if entry.homogeneous_degree() != want:
                        raise ValueError(
                            f"entry ({i},{j}) must be homogeneous of degree {want}"
                        )
        object.__setattr__(self, "pair", pair)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("PresMatrix is immutable")

    @property
    def is_minimal(self) -> bool:
        """No nonzero constant entries."""
        return all(not e or e.degree() > 0 for row in self.rows for e in row)

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PresMatrix)
            and self.pair == other.pair
            and self.p == other.p
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"PresMatrix(pair={self.pair!r}, p={self.p}, {len(self.rows)}x{self.pair.l})"

    def to_json(self) -> dict:
        return {
            "n": self.pair.n,
            "p": self.p,
            "a": self.pair.a.to_json(),
            "b": self.pair.b.to_json(),
            "entries": [[format_poly(e) for e in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data) -> "PresMatrix":
        try:
            pair = BettiPair(int(data["n"]), IntSeq.from_json(data["a"]), IntSeq.from_json(data["b"]))
            p = int(data["p"])
            entries = data["entries"]
            rows = [[parse_poly(s, p, pair.n + 1) for s in row] for row in entries]
        except BadInput:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise BadInput(f"malformed matrix document: {exc}") from None
        try:
            return cls(pair, p, rows)
        except (ShapeError, ModulusMismatch):
            raise
        except ValueError as exc:
            raise BadInput(str(exc)) from None


def explicit_matrix(pair: BettiPair, prime: int) -> PresMatrix:
    """The banded staircase presentation of an admissible pair.

    Column i carries x_j^(a_i - b_{i+j}) in row i+j for j = 0..n; all the
    exponents are positive by admissibility.  At any point of projective
    space the staircase of the last nonvanishing variable is triangular with
    nonzero diagonal, so the matrix has full rank everywhere.
    """
    if not pair.is_admissible():
        raise NotAdmissible(f"{pair} is not admissible")
    if not pair.a:
        raise EmptyA("the explicit construction needs a nonempty a")
    n, l = pair.n, pair.l
    nvars = n + 1
    a, b = pair.a.entries, pair.b.entries
    rows = [[Poly.zero(prime, nvars) for _ in range(l)] for _ in range(len(b))]
    for i in range(l):
        for j in range(n + 1):
            rows[i + j][i] = Poly.variable(j, prime, nvars, power=a[i] - b[i + j])
    return PresMatrix(pair, prime, rows)


def _random_form(p: int, nvars: int, degree: int, rng: random.Random) -> Poly:
    terms = {}
    for e in monomials(nvars, degree):
        c = rng.randrange(p)
        if c:
            terms[e] = c
    return Poly(p, nvars, terms)


def random_minimal_map(pair: BettiPair, prime: int, seed) -> PresMatrix:
    """A seeded random minimal matrix of the pair's shape.

    Entries of positive required degree get uniformly random forms (every
    monomial coefficient uniform in F_p, zero included); entries of degree
    <= 0 are zero, which in particular forces the zero block of any index
    violating admissibility.  No admissibility check is made here.
    """
    rng = random.Random(seed)
    nvars = pair.n + 1
    a, b = pair.a.entries, pair.b.entries
    rows = []
    for bi in b:
        row = []
        for aj in a:
            d = aj - bi
            row.append(_random_form(prime, nvars, d, rng) if d > 0 else Poly.zero(prime, nvars))
        rows.append(row)
    return PresMatrix(pair, prime, rows)


def random_matrix(pair: BettiPair, prime: int, seed) -> PresMatrix:
    """Seeded random minimal presentation of an admissible pair."""
    if not pair.is_admissible():
        raise NotAdmissible(f"{pair} is not admissible")
    return random_minimal_map(pair, prime, seed)


def verify_bundle(m: PresMatrix) -> bool:
    """Decide whether the cokernel of the matrix is a bundle.

    True iff the ideal of maximal minors is the unit ideal or primary to the
    irrelevant maximal ideal; trivially true when there are no columns.
    """
    l = m.pair.l
    if l == 0:
        return True
    minors = maximal_minors(m.rows, l)
    if any(f and f.degree() == 0 for f in minors):
        return True  # a unit minor: the map is a split injection
    seen = set()
    distinct = []
    for f in minors:
        if f and f not in seen:
            seen.add(f)
            distinct.append(f)
    return Ideal(distinct, p=m.p, nvars=m.pair.n + 1).is_m_primary_or_unit()


def minimize_presentation(m: PresMatrix) -> tuple[BettiPair, PresMatrix]:
    """Split off all constant pivots and return the minimal pair and matrix.

    Pivots are chosen at the smallest (row, column) position for
    determinism.  Clearing the pivot column leaves the pivot row supported
    only at positions that are deleted with it, so each round removes one
    source and one target twist of equal value.  The minor ideal is an
    invariant of the cokernel, so the bundle test runs on the reduced matrix
    and NotABundle is raised if it fails.
    """
    rows = [list(row) for row in m.rows]
    a = list(m.pair.a.entries)
    b = list(m.pair.b.entries)
    zero_dim = (0,) * (m.pair.n + 1)
    while True:
        pivot = None
        for i, row in enumerate(rows):
            for j, e in enumerate(row):
                if e and e.degree() == 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i0, j0 = pivot
        cinv = pow(rows[i0][j0].terms[zero_dim], -1, m.p)
        piv_row = rows[i0]
        for i in range(len(rows)):
            if i != i0 and rows[i][j0]:
                factor = rows[i][j0].scale(cinv)
                rows[i] = [rows[i][j] - factor * piv_row[j] for j in range(len(a))]
        del rows[i0]
        for row in rows:
            del row[j0]
        del b[i0]
        del a[j0]
    pair = BettiPair(m.pair.n, IntSeq(a), IntSeq(b))
    reduced = PresMatrix(pair, m.p, rows)
    if not verify_bundle(reduced):
        raise NotABundle("the matrix does not present a bundle")
    return pair, reduced


def split_bound(pair: BettiPair) -> tuple[int, int]:
    """Bounds for the rank of the part without line-bundle summands.

    Returns (n, max j with a_l > b_{l+j}); the upper bound is at least n by
    admissibility.
    """
    if not pair.is_admissible():
        raise NotAdmissible(f"{pair} is not admissible")
    if not pair.a:
        raise EmptyA("split bounds need a nonempty a")
    a_last = pair.a.entries[-1]
    b = pair.b.entries
    l, r = pair.l, pair.r
    high = max(j for j in range(1, r + 1) if a_last > b[l + j - 1])
    return pair.n, high


def slope_and_semistability(pair: BettiPair, displayed_sign: bool = False):
    """The slope c1/r, and a semistability verdict when rank equals n.

    The verdict compares b_1 with -slope by default; ``displayed_sign``
    switches to comparing with +slope instead.  For split pairs or rank
    different from n the verdict is None: Betti numbers do not decide
    semistability there.
    """
    mu = Fraction(pair.c1(), pair.r)
    verdict = None
    if pair.r == pair.n and pair.l > 0:
        b1 = pair.b.entries[0]
        verdict = b1 >= mu if displayed_sign else b1 >= -mu
    return mu, verdict


def _positions(big_entries, small_entries):
    """Split the positions of ``big_entries`` between the small sequence and
    the common multiset, first occurrences going to the small sequence."""
    take_small = Counter(small_entries)
    by_value = defaultdict(list)
    for pos, v in enumerate(big_entries):
        by_value[v].append(pos)
    small_pos, common_pos = [], []
    for v in sorted(by_value):
        slots = by_value[v]
        k = take_small.get(v, 0)
        small_pos.extend(slots[:k])
        common_pos.extend(slots[k:])
    return small_pos, common_pos


class DeformFamily:
    """The pencil psi + t * (phi + identity on the common summand)."""

    __slots__ = ("small", "big", "witness", "prime", "psi", "phi", "_phi_prime")

    def __init__(self, small, big, witness, prime, psi, phi, phi_prime):
        self.small = small
        self.big = big
        self.witness = witness
        self.prime = prime
        self.psi = psi
        self.phi = phi
        self._phi_prime = phi_prime

    def at(self, t: int) -> PresMatrix:
        s = t % self.prime
        rows = [
            [pe + fe.scale(s) for pe, fe in zip(prow, frow)]
            for prow, frow in zip(self.psi.rows, self._phi_prime)
        ]
        return PresMatrix(self.big, self.prime, rows)

    def __call__(self, t: int) -> PresMatrix:
        return self.at(t)


def deform_family(small: BettiPair, big: BettiPair, prime: int, seed) -> DeformFamily:
    """A one-parameter family degenerating from the small pair to the big one.

    Draws seeded random presentations psi of the big pair and phi of the
    small pair (redrawing deterministically until each verifies), embeds phi
    plus the identity on the common summand into the big shape, and returns
    the evaluator t -> psi + t * phi'.  At t = 0 the fiber is psi; at
    generic nonzero t the fiber minimizes to the small pair.
    """
    c = generalization_witness(small, big)
    if c is None:
        raise NotGeneralization(f"{small} does not generalize {big}")
    if not big.is_admissible() or not small.is_admissible():
        raise NotAdmissible("both ends of the family must be admissible")
    master = random.Random(seed)

    def draw(pair):
        for _ in range(64):
            m = random_minimal_map(pair, prime, master.getrandbits(63))
            if verify_bundle(m):
                return m
        raise NotABundle(f"no verified random presentation found for {pair}")

    psi = draw(big)
    phi = draw(small)
    nvars = small.n + 1
    row_small, row_common = _positions(big.b.entries, small.b.entries)
    col_small, col_common = _positions(big.a.entries, small.a.entries)
    phi_prime = [
        [Poly.zero(prime, nvars) for _ in range(big.l)] for _ in range(big.l + big.r)
    ]
    for si, bi in enumerate(row_small):
        for sj, bj in enumerate(col_small):
            phi_prime[bi][bj] = phi.rows[si][sj]
    one = Poly.const(1, prime, nvars)
    for bi, bj in zip(row_common, col_common):
        phi_prime[bi][bj] = one
    return DeformFamily(small, big, c, prime, psi, phi, phi_prime)
