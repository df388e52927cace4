"""Command-line interface.

Exit codes: 0 success, 1 failed --expect-verified, 2 input errors (bad ring
files, violated axioms, unknown claim ids, malformed ideal literals).
"""

from __future__ import annotations

import argparse
import json
import sys

from .claims import CLAIM_IDS, run_all_claims, run_claim
from .corpus import default_corpus, load_corpus
from .ideals import (
    all_ideals,
    classify_ring,
    ideal_generated,
    is_maximal,
    is_ppri,
    is_primary,
    is_prime,
    is_principal,
    is_semiprime,
    prime_spectrum,
    radical,
)
from .quotients import quotient_ring
from .reports import REFUTED, render_report
from .ringfile import RingFileError, load_ring_file
from .rings import RingAxiomError
from .zmodel import (
    audit_ex2,
    box_oracle_check,
    parse_z_ideal,
    z_is_maximal,
    z_is_prime,
    z_principal_witness,
)

__all__ = ["main"]


def _parse_elements(ring, text: str) -> list[int]:
    """Comma-separated element indices or names (names must be comma-free)."""
    lookup = {name: i for i, name in enumerate(ring.element_names)}
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok in lookup:
            out.append(lookup[tok])
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise ValueError(f"unknown element {tok!r} in {ring.label}") from None
    return out


def _flags_lines(ring) -> list[str]:
    flags = classify_ring(ring)
    lines = [
        f"is_domain: {flags.is_domain}",
        f"is_field: {flags.is_field}",
        f"is_boolean: {flags.is_boolean}",
        f"is_pprir: {flags.is_pprir}",
    ]
    if flags.witness is not None:
        lines.append(f"non-principal prime: {flags.witness}")
    return lines


def _cmd_describe(args) -> int:
    ring = load_ring_file(args.ringfile)
    print(f"label: {ring.label}")
    print(f"order: {ring.order}")
    print(f"zero: {ring.element_names[ring.zero]}")
    print(f"one: {ring.element_names[ring.one]}")
    for line in _flags_lines(ring):
        print(line)
    return 0


def _cmd_ideals(args) -> int:
    ring = load_ring_file(args.ringfile)
    lattice = all_ideals(ring)
    if args.dot:
        print(lattice.to_dot())
        return 0
    if args.json:
        doc = {
            "ring": ring.label,
            "ideals": [str(i) for i in lattice.ideals],
            "containment": [list(e) for e in lattice.containment_edges()],
        }
        print(json.dumps(doc, indent=2, ensure_ascii=False))
        return 0
    print(f"{ring.label}: {len(lattice)} ideals")
    for i, ideal in enumerate(lattice.ideals):
        print(f"  [{i}] {ideal}")
    for i, j in lattice.containment_edges():
        print(f"  [{i}] < [{j}]")
    return 0


def _cmd_spectrum(args) -> int:
    ring = load_ring_file(args.ringfile)
    for prime in prime_spectrum(ring):
        print(str(prime))
    return 0


def _cmd_classify_ideal(args) -> int:
    ring = load_ring_file(args.ringfile)
    ideal = ideal_generated(ring, _parse_elements(ring, args.elements))
    principal, generator = is_principal(ring, ideal)
    print(f"ideal: {ideal}")
    print(f"size: {len(ideal)}")
    print(f"proper: {ideal.is_proper}")
    print(f"is_prime: {is_prime(ring, ideal)}")
    print(f"is_maximal: {is_maximal(ring, ideal)}")
    print(f"is_semiprime: {is_semiprime(ring, ideal)}")
    print(f"is_primary: {is_primary(ring, ideal)}")
    print(f"is_principal: {principal}")
    if principal:
        print(f"generator: {ring.element_names[generator]}")
    print(f"is_ppri: {is_ppri(ring, ideal)}")
    print(f"radical: {radical(ring, ideal)}")
    return 0


def _cmd_quotient(args) -> int:
    ring = load_ring_file(args.ringfile)
    ideal = ideal_generated(ring, _parse_elements(ring, args.elements))
    pres = quotient_ring(ring, ideal)
    q = pres.quotient
    if args.json:
        doc = {
            "base": ring.label,
            "ideal": str(ideal),
            "quotient": q.label,
            "order": q.order,
            "cosets": [
                sorted(ring.element_names[b] for b in range(ring.order) if mask >> b & 1)
                for mask in pres.cosets
            ],
        }
        print(json.dumps(doc, indent=2, ensure_ascii=False))
        return 0
    print(f"quotient: {q.label}")
    print(f"order: {q.order}")
    for line in _flags_lines(q):
        print(line)
    return 0


def _cmd_audit(args) -> int:
    corpus = default_corpus() if args.corpus == "default" else load_corpus(args.corpus)
    if args.claim == "all":
        reports = run_all_claims(corpus)
    else:
        reports = run_claim(args.claim, corpus)
    print(render_report(reports, "json" if args.json else "text"))
    for expected in args.expect_verified or []:
        if expected != "all" and expected not in CLAIM_IDS:
            raise ValueError(f"unknown claim id {expected!r} in --expect-verified")
        hits = [r for r in reports if r.claim == expected and r.status == REFUTED]
        if hits:
            print(f"expectation failed: {expected} refuted on {', '.join(r.ring for r in hits)}", file=sys.stderr)
            return 1
    return 0


def _cmd_zmodel(args) -> int:
    if args.zcommand == "example2":
        outcome = audit_ex2()
        print(f"EX2 zmodel {outcome.status} {outcome.witness}")
        return 0
    ideal = parse_z_ideal(args.literal)
    witness = z_principal_witness(ideal)
    print(f"ideal: {ideal}")
    print(f"is_prime: {z_is_prime(ideal)}")
    print(f"is_maximal: {z_is_maximal(ideal)}")
    print(f"principal witness: {witness} (box oracle: {box_oracle_check(ideal, witness)})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringaudit",
        description="Ideal lattices, quotients and claim audits for finite commutative rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="order, identities and classification flags of a ring file")
    p.add_argument("ringfile")
    p.set_defaults(func=_cmd_describe)

    p = sub.add_parser("ideals", help="full ideal lattice of a ring file")
    p.add_argument("ringfile")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", action="store_true", help="emit a DOT digraph of the covering relation")
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser("spectrum", help="prime ideals of a ring file, one per line")
    p.add_argument("ringfile")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("classify-ideal", help="predicates for the ideal generated by elements")
    p.add_argument("ringfile")
    p.add_argument("--elements", required=True, help="comma-separated element indices or names")
    p.set_defaults(func=_cmd_classify_ideal)

    p = sub.add_parser("quotient", help="quotient by the ideal generated by elements")
    p.add_argument("ringfile")
    p.add_argument("--elements", required=True, help="comma-separated element indices or names")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("audit", help="run claim checkers over a corpus")
    p.add_argument("--corpus", default="default", help='"default" or a directory of ring files')
    p.add_argument("--claim", default="all", choices=("all",) + CLAIM_IDS)
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--expect-verified",
        action="append",
        metavar="CLAIM",
        help="exit 1 if this claim has any refuted report (repeatable)",
    )
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("zmodel", help="symbolic ideals of Z^k")
    zsub = p.add_subparsers(dest="zcommand", required=True)
    z = zsub.add_parser("example2", help="the prime, principal, non-maximal chain in Z x Z")
    z.set_defaults(func=_cmd_zmodel)
    z = zsub.add_parser("ideal", help="classify an ideal literal such as Z^2:(1,0)")
    z.add_argument("literal")
    z.set_defaults(func=_cmd_zmodel)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RingFileError, RingAxiomError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
