"""Command-line front end.

Verbs: enumerate, hilbert, lattice, present, check, deform, admissible.
Every invocation is deterministic given its flags: randomness is seeded,
collections are emitted in sorted order, and JSON is serialized with sorted
keys.  Domain errors exit with code 1 and a structured error object on
standard error; usage errors exit with code 2.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from .betti import BettiPair
from .bundles import (
    PresMatrix,
    deform_family,
    explicit_matrix,
    minimize_presentation,
    random_matrix,
    verify_bundle,
)
from .errors import BadInput, DomainError, NotABundle, UnknownFormat
from .generate import bundle_sequences, bundle_sequences_by_reg
from .hilbert import HilbertFn, minimal_betti, normalize
from .lattice import BettiLattice
from .poly import format_poly
from .seqs import parse_seq, parse_values

DEFAULT_PRIME = 32003
_PRIME_ENV = "PNBUNDLES_PRIME"


def _default_prime() -> int:
    raw = os.environ.get(_PRIME_ENV)
    if raw is None:
        return DEFAULT_PRIME
    try:
        return int(raw)
    except ValueError:
        raise BadInput(f"{_PRIME_ENV} must be an integer, got {raw!r}") from None


def _check_prime(p: int) -> int:
    if p < 2:
        raise BadInput(f"modulus {p} is not a prime")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise BadInput(f"modulus {p} is not a prime")
        d += 1
    return p


def _emit_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _pair(n: int, a_text: str, b_text: str) -> BettiPair:
    try:
        return BettiPair(n, parse_seq(a_text), parse_seq(b_text))
    except ValueError as exc:
        raise BadInput(str(exc)) from None


def _pair_from_args(args) -> BettiPair:
    return _pair(args.n, args.a, args.b)


def _hilbert_from_args(args) -> HilbertFn:
    try:
        return HilbertFn(args.n, args.anchor, parse_values(args.seq))
    except ValueError as exc:
        raise BadInput(str(exc)) from None


def _cmd_enumerate(args) -> str:
    if (args.degree is None) == (args.max_reg is None):
        raise BadInput("enumerate needs exactly one of --degree or --max-reg")
    if args.degree is not None:
        seqs = bundle_sequences(args.n, args.rank, args.degree)
        rows = [list(s.values) for s in seqs]
        if args.format == "json":
            return _emit_json(rows)
        if args.format in ("csv", "text"):
            return "\n".join(",".join(str(v) for v in row) for row in rows)
        raise UnknownFormat(f"enumerate does not support format {args.format!r}")
    hs = bundle_sequences_by_reg(args.n, args.rank, args.max_reg)
    if args.format == "json":
        return _emit_json([{"B": list(h.seq.values), "s0": h.s0} for h in hs])
    if args.format in ("csv", "text"):
        return "\n".join(
            ",".join([str(h.s0)] + [str(v) for v in h.seq.values]) for h in hs
        )
    raise UnknownFormat(f"enumerate does not support format {args.format!r}")


def _cmd_hilbert(args) -> str:
    h = _hilbert_from_args(args)
    base = minimal_betti(h)
    normalized, twist = normalize(h)
    lo, hi = h.s0 - 2, h.s1 + 3
    payload = {
        "n": h.n,
        "s0": h.s0,
        "B": list(h.seq.values),
        "rank": h.r,
        "degree": h.degree,
        "c1": h.c1(),
        "minimal": {"a": base.a.to_json(), "b": base.b.to_json()},
        "regularity": base.regularity(),
        "normalize_twist": twist,
        "normalized_s0": normalized.s0,
        "values": {str(t): h.value(t) for t in range(lo, hi + 1)},
    }
    if args.format == "json":
        return _emit_json(payload)
    if args.format in ("csv", "text"):
        lines = [f"{k}={payload[k]}" for k in ("n", "s0", "B", "rank", "degree", "c1", "regularity")]
        lines.append(f"minimal_a={base.a.to_json()}")
        lines.append(f"minimal_b={base.b.to_json()}")
        lines.append(f"normalize_twist={twist}")
        lines.extend(f"H({t})={h.value(t)}" for t in range(lo, hi + 1))
        return "\n".join(lines)
    raise UnknownFormat(f"hilbert does not support format {args.format!r}")


def _cmd_lattice(args) -> str:
    h = _hilbert_from_args(args)
    lat = BettiLattice(h, args.max_reg)
    return lat.export(args.format).rstrip("\n")


def _cmd_present(args) -> str:
    pair = _pair_from_args(args)
    prime = _check_prime(args.prime)
    if args.mode == "explicit":
        m = explicit_matrix(pair, prime)
    else:
        m = random_matrix(pair, prime, args.seed)
    if args.format == "json":
        return _emit_json(m.to_json())
    if args.format == "text":
        return "\n".join(" | ".join(format_poly(e) for e in row) for row in m.rows)
    raise UnknownFormat(f"present does not support format {args.format!r}")


def _read_matrix(source: str) -> PresMatrix:
    if source == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise BadInput(f"cannot read {source}: {exc}") from None
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise BadInput(f"invalid JSON in {source}: {exc}") from None
    if isinstance(doc, dict) and "p" in doc:
        try:
            _check_prime(int(doc["p"]))
        except (TypeError, ValueError):
            raise BadInput(f"bad modulus in {source}") from None
    return PresMatrix.from_json(doc)


def _check_one(source: str) -> dict:
    m = _read_matrix(source)
    ok = verify_bundle(m)
    return {
        "source": source,
        "n": m.pair.n,
        "p": m.p,
        "a": m.pair.a.to_json(),
        "b": m.pair.b.to_json(),
        "minimal": m.is_minimal,
        "bundle": ok,
    }


def _cmd_check(args) -> str:
    sources = args.matrix
    if args.jobs > 1 and len(sources) > 1 and "-" not in sources:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_check_one, sources))
    else:
        results = [_check_one(s) for s in sources]
    payload = results[0] if len(results) == 1 else results
    if args.format == "json":
        return _emit_json(payload)
    if args.format in ("csv", "text"):
        return "\n".join(f"{r['source']},{str(r['bundle']).lower()}" for r in results)
    raise UnknownFormat(f"check does not support format {args.format!r}")


def _cmd_deform(args) -> str:
    small = _pair(args.n, args.small_a, args.small_b)
    big = _pair(args.n, args.big_a, args.big_b)
    prime = _check_prime(args.prime)
    fam = deform_family(small, big, prime, args.seed)
    rng = random.Random(args.seed ^ 0x5EED)
    pair0, _ = minimize_presentation(fam.at(0))
    samples = []
    for _ in range(args.samples):
        t = 1 + rng.randrange(prime - 1)
        try:
            pair_t, _ = minimize_presentation(fam.at(t))
        except NotABundle:
            # the fiber left the dense open set of bundles at this parameter
            samples.append({"t": t, "error": "NotABundle", "matches_small": False})
            continue
        samples.append(
            {
                "t": t,
                "a": pair_t.a.to_json(),
                "b": pair_t.b.to_json(),
                "matches_small": pair_t == small,
            }
        )
    payload = {
        "n": args.n,
        "p": prime,
        "seed": args.seed,
        "small": {"a": small.a.to_json(), "b": small.b.to_json()},
        "big": {"a": big.a.to_json(), "b": big.b.to_json()},
        "witness": fam.witness.to_json(),
        "at_zero": {"a": pair0.a.to_json(), "b": pair0.b.to_json(), "matches_big": pair0 == big},
        "samples": samples,
    }
    if args.format == "json":
        return _emit_json(payload)
    if args.format in ("csv", "text"):
        lines = [f"0,{str(payload['at_zero']['matches_big']).lower()}"]
        lines.extend(f"{s['t']},{str(s['matches_small']).lower()}" for s in samples)
        return "\n".join(lines)
    raise UnknownFormat(f"deform does not support format {args.format!r}")


def _cmd_admissible(args) -> str:
    pair = _pair_from_args(args)
    verdict = pair.is_admissible()
    if args.format == "json":
        return _emit_json(verdict)
    if args.format in ("csv", "text"):
        return str(verdict).lower()
    raise UnknownFormat(f"admissible does not support format {args.format!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pnbundles",
        description="Betti data, Hilbert functions, lattices and presentation "
        "matrices of bundles on projective n-space.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, formats, default_format):
        p.add_argument("--format", choices=formats, default=default_format)

    p_enum = sub.add_parser("enumerate", help="bundle sequences by degree or by regularity")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--rank", type=int, required=True)
    p_enum.add_argument("--degree", type=int)
    p_enum.add_argument("--max-reg", type=int, dest="max_reg")
    p_enum.add_argument("--jobs", type=int, default=1)
    add_common(p_enum, ["json", "csv", "text"], "json")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_hil = sub.add_parser("hilbert", help="inspect one Hilbert function")
    p_hil.add_argument("--n", type=int, required=True)
    p_hil.add_argument("--seq", required=True, help="bundle sequence, e.g. 5,4 or 1^5,4")
    p_hil.add_argument("--anchor", type=int, default=0)
    add_common(p_hil, ["json", "csv", "text"], "json")
    p_hil.set_defaults(func=_cmd_hilbert)

    p_lat = sub.add_parser("lattice", help="the graded lattice up to a regularity bound")
    p_lat.add_argument("--n", type=int, required=True)
    p_lat.add_argument("--seq", required=True)
    p_lat.add_argument("--anchor", type=int, default=0)
    p_lat.add_argument("--max-reg", type=int, dest="max_reg", required=True)
    add_common(p_lat, ["dot", "json"], "dot")
    p_lat.set_defaults(func=_cmd_lattice)

    p_pres = sub.add_parser("present", help="an explicit or random presentation matrix")
    p_pres.add_argument("--n", type=int, required=True)
    p_pres.add_argument("--a", required=True)
    p_pres.add_argument("--b", required=True)
    p_pres.add_argument("--mode", choices=["explicit", "random"], default="explicit")
    p_pres.add_argument("--prime", type=int, default=None)
    p_pres.add_argument("--seed", type=int, default=0)
    add_common(p_pres, ["json", "text"], "json")
    p_pres.set_defaults(func=_cmd_present)

    p_check = sub.add_parser("check", help="verify that matrices present bundles")
    p_check.add_argument("matrix", nargs="+", help='matrix JSON files, or "-" for stdin')
    p_check.add_argument("--jobs", type=int, default=1)
    add_common(p_check, ["json", "csv", "text"], "json")
    p_check.set_defaults(func=_cmd_check)

    p_def = sub.add_parser("deform", help="a degeneration family between two pairs")
    p_def.add_argument("--n", type=int, required=True)
    p_def.add_argument("--small-a", dest="small_a", required=True)
    p_def.add_argument("--small-b", dest="small_b", required=True)
    p_def.add_argument("--big-a", dest="big_a", required=True)
    p_def.add_argument("--big-b", dest="big_b", required=True)
    p_def.add_argument("--samples", type=int, default=10)
    p_def.add_argument("--prime", type=int, default=None)
    p_def.add_argument("--seed", type=int, default=0)
    add_common(p_def, ["json", "csv", "text"], "json")
    p_def.set_defaults(func=_cmd_deform)

    p_adm = sub.add_parser("admissible", help="test a pair for admissibility")
    p_adm.add_argument("--n", type=int, required=True)
    p_adm.add_argument("--a", required=True)
    p_adm.add_argument("--b", required=True)
    add_common(p_adm, ["json", "csv", "text"], "json")
    p_adm.set_defaults(func=_cmd_admissible)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "prime") and args.prime is None:
            args.prime = _default_prime()
        out = args.func(args)
    except DomainError as exc:
        sys.stderr.write(_emit_json({"error": exc.code, "detail": str(exc)}) + "\n")
        return 1
    sys.stdout.write(out + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
