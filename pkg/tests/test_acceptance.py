"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the report lines.
Every tolerance and time bound is pinned here; seeds are fixed so the whole
suite is deterministic.
"""

import random
import time
from itertools import product

from pnbundles.betti import BettiPair, enumerate_admissible
from pnbundles.bundles import (
    deform_family,
    explicit_matrix,
    minimize_presentation,
    random_matrix,
    random_minimal_map,
    verify_bundle,
)
from pnbundles.errors import NotABundle
from pnbundles.generate import bundle_sequences, max_difference
from pnbundles.hilbert import HilbertFn, hilbert_of_betti, minimal_betti, normalize
from pnbundles.lattice import BettiLattice
from pnbundles.poly import Ideal, Poly
from pnbundles.seqs import IntSeq

from _oracles import brute_force_admissible

P = 32003


def report(num, ok, elapsed, limit, detail):
    line = (
        f"criterion {num}: {'PASS' if ok and elapsed < limit else 'FAIL'} "
        f"({elapsed:.2f}s / limit {limit:.0f}s) {detail}"
    )
    print(line)
    assert ok, f"criterion {num} failed: {detail}"
    assert elapsed < limit, f"criterion {num} exceeded {limit}s ({elapsed:.2f}s)"


def test_criterion_1_enumeration_golden():
    start = time.time()
    got = {s.values for s in bundle_sequences(3, 4, 9)}
    want = {
        (1, 1, 1, 1, 1, 4),
        (1, 1, 1, 2, 4),
        (1, 1, 3, 4),
        (1, 2, 2, 4),
        (2, 3, 4),
        (5, 4),
    }
    report(
        1,
        got == want,
        time.time() - start,
        1.0,
        f"rank 4, degree 9 on P^3: {len(got)} sequences",
    )


def test_criterion_2_lattice_golden():
    start = time.time()
    lat = BettiLattice(HilbertFn(3, -1, [5, 4]), 2)
    ok = (
        lat.base == BettiPair(3, [0], [-1] * 5)
        and lat.cmax == IntSeq([0, 1, 2])
        and len(lat) == 8
        and lat.grade_sizes() == (1, 3, 3, 1)
        and len(lat.hasse()) == 12
    )
    # meet/join tables must equal the Boolean-cube tables on subsets of {0,1,2}
    for x, y in product(lat.nodes, lat.nodes):
        sx, sy = set(x.entries), set(y.entries)
        ok = ok and set(lat.meet(x, y).entries) == sx & sy
        ok = ok and set(lat.join(x, y).entries) == sx | sy
    report(2, ok, time.time() - start, 1.0, "8-node cube over B=(5,4), d=2")


def test_criterion_3_round_trip_suite():
    start = time.time()
    cases = 0
    violations = 0
    for n in (1, 2, 3):
        for r in range(1, 6):
            for degree in range(r, 13):
                for seq in bundle_sequences(n, r, degree):
                    anchor = -((-degree) // r) - seq.m
                    h = HilbertFn(n, anchor, seq)
                    if hilbert_of_betti(minimal_betti(h)) != h:
                        violations += 1
                    hn, _ = normalize(h)
                    if minimal_betti(hn).regularity() < -((-degree) // r) - 2:
                        violations += 1
                    cases += 1
    report(
        3,
        cases >= 300 and violations == 0,
        time.time() - start,
        30.0,
        f"{cases} Hilbert functions, {violations} violations",
    )


def _random_admissible_pair(rng):
    """Admissible pair with nonempty a, n <= 3, l <= 3, r <= 5, spread <= 4."""
    while True:
        n = rng.randint(1, 3)
        r = rng.randint(n, 5)
        l = rng.randint(1, 3)
        base = rng.randint(-2, 2)
        b = sorted(rng.randint(base, base + 2) for _ in range(l + r))
        a = sorted(rng.randint(base + 1, base + 4) for _ in range(l))
        pair = BettiPair(n, a, b)
        if pair.is_admissible():
            return pair


def _random_zero_block_pair(rng):
    """A pair with r >= n but some index violating a_i > b_{n+i}."""
    while True:
        n = rng.randint(2, 3)
        r = rng.randint(n, n + 2)
        l = rng.randint(1, 2)
        base = rng.randint(0, 1)
        b = sorted(rng.randint(base, base + 2) for _ in range(l + r))
        a = sorted(rng.randint(base + 1, base + 3) for _ in range(l))
        pair = BettiPair(n, a, b)
        if not pair.is_admissible() and any(
            a[i] <= b[n + i] for i in range(l)
        ):
            return pair


def test_criterion_4_admissibility_iff_bundle():
    start = time.time()
    rng = random.Random(1004)
    good = 0
    for _ in range(50):
        pair = _random_admissible_pair(rng)
        good += verify_bundle(explicit_matrix(pair, P))
    bad = 0
    for _ in range(20):
        pair = _random_zero_block_pair(rng)
        m = random_minimal_map(pair, P, rng.getrandbits(32))
        assert m.is_minimal
        bad += not verify_bundle(m)
    report(
        4,
        good == 50 and bad == 20,
        time.time() - start,
        300.0,
        f"explicit pass {good}/50, forced zero block fail {bad}/20",
    )


def test_criterion_5_random_generation_density():
    start = time.time()
    pair = BettiPair(3, [2], [0, 0, 0, 1, 1])
    hits = sum(verify_bundle(random_matrix(pair, P, seed)) for seed in range(100))
    report(
        5,
        hits >= 90,
        time.time() - start,
        120.0,
        f"{hits}/100 random seeds verify over F_{P}",
    )


def test_criterion_6_groebner_oracle_equivalence():
    start = time.time()
    rng = random.Random(1006)
    agree = 0
    total = 200
    for _ in range(total):
        gens = []
        for _ in range(rng.randrange(1, 7)):
            d = rng.randrange(1, 5)
            e = [0, 0, 0, 0]
            for i in rng.choices(range(4), k=d):
                e[i] += 1
            gens.append(Poly(P, 4, {tuple(e): 1}))
        supports = [
            [i for i, k in enumerate(next(iter(g.terms))) if k] for g in gens
        ]
        pure_powers = {s[0] for s in supports if len(s) == 1}
        combinatorial = pure_powers == {0, 1, 2, 3}
        agree += Ideal(gens).is_m_primary_or_unit() is combinatorial
    report(
        6,
        agree == total,
        time.time() - start,
        30.0,
        f"{agree}/{total} monomial ideals agree with the pure-power test",
    )


def _random_family_ends(rng):
    """small admissible, big = small + c admissible, witness size 1 or 2."""
    while True:
        n = rng.randint(2, 3)
        r = rng.randint(n, n + 1)
        if rng.random() < 0.4:
            small = BettiPair(n, [], sorted(rng.randint(-1, 1) for _ in range(r)))
        else:
            small = _random_admissible_pair(rng)
            if small.n != n or small.l > 1 or small.r > n + 1:
                continue
        d = small.regularity() + 2
        cmax = max_difference(hilbert_of_betti(small), d)
        if len(cmax) < 1:
            continue
        size = min(rng.randint(1, 2), len(cmax))
        c = IntSeq(rng.sample(list(cmax), size))
        big = small.add_common(c)
        if big.is_admissible():
            return small, big


def test_criterion_7_deformation_semicontinuity():
    start = time.time()
    rng = random.Random(1007)
    families_ok = 0
    for k in range(10):
        small, big = _random_family_ends(rng)
        fam = deform_family(small, big, P, seed=9000 + k)
        pair0, _ = minimize_presentation(fam.at(0))
        hits = 0
        for _ in range(10):
            t = 1 + rng.randrange(P - 1)
            try:
                pair_t, _ = minimize_presentation(fam.at(t))
            except NotABundle:
                continue  # a fiber outside the dense open set counts as a miss
            hits += pair_t == small
        if pair0 == big and hits >= 9:
            families_ok += 1
    report(
        7,
        families_ok == 10,
        time.time() - start,
        300.0,
        f"{families_ok}/10 families: t=0 gives big, >=9/10 nonzero t give small",
    )


def test_criterion_8_lattice_axiom_suite():
    start = time.time()
    rng = random.Random(1008)
    pool = []
    for n in (2, 3):
        for r in range(n, 6):
            for degree in range(r, 11):
                pool.extend((n, seq) for seq in bundle_sequences(n, r, degree))
    lattices = []
    while len(lattices) < 20:
        n, seq = pool[rng.randrange(len(pool))]
        h = HilbertFn(n, rng.randint(-2, 2), seq)
        lat = BettiLattice(h, minimal_betti(h).regularity() + rng.randint(0, 3))
        if len(lat) > 1:
            lattices.append(lat)
    checks = 0
    failures = 0
    while checks < 1000:
        lat = lattices[rng.randrange(len(lattices))]
        nodes = lat.nodes
        x, y, z = (nodes[rng.randrange(len(nodes))] for _ in range(3))
        ok = (
            lat.meet(x, y) == lat.meet(y, x)
            and lat.join(x, y) == lat.join(y, x)
            and lat.meet(x, lat.meet(y, z)) == lat.meet(lat.meet(x, y), z)
            and lat.join(x, lat.join(y, z)) == lat.join(lat.join(x, y), z)
            and lat.join(x, lat.meet(x, y)) == x
            and lat.meet(x, lat.join(x, y)) == x
            and lat.grade(lat.join(x, y)) + lat.grade(lat.meet(x, y))
            == lat.grade(x) + lat.grade(y)
            and set(lat.up_set(lat.join(x, y)))
            == set(lat.up_set(x)) & set(lat.up_set(y))
        )
        failures += not ok
        checks += 1
    report(
        8,
        failures == 0,
        time.time() - start,
        30.0,
        f"{checks} meet/join samples across {len(lattices)} lattices, {failures} failures",
    )


def test_criterion_9_finiteness_cross_check():
    start = time.time()
    ok = True
    sizes = []
    for d in (-1, 0, 1):
        got = {
            (p.a.entries, p.b.entries) for p in enumerate_admissible(3, 4, 5, d)
        }
        want = brute_force_admissible(3, 4, 5, d)
        ok = ok and got == want
        sizes.append(len(got))
    report(
        9,
        ok,
        time.time() - start,
        60.0,
        f"exact set equality at d=-1,0,1 (sizes {sizes})",
    )
