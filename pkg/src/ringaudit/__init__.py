"""ringaudit: ideal lattices, quotients and claim audits for finite
commutative rings, plus a small symbolic model of Z^k ideals."""

from .claims import CLAIM_IDS, run_all_claims, run_claim
from .corpus import Corpus, default_corpus, load_corpus
from .ideals import (
    Classification,
    Ideal,
    IdealLattice,
    all_ideals,
    classify_ring,
    ideal_from_members,
    ideal_generated,
    is_maximal,
    is_ppri,
    is_pprir,
    is_primary,
    is_prime,
    is_principal,
    is_semiprime,
    minimal_primes_over,
    parse_ideal,
    prime_spectrum,
    principal_ideal,
    radical,
    sum_ideals,
    unit_ideal,
    zero_ideal,
)
from .quotients import (
    QuotientPresentation,
    RingHom,
    audit_thm1,
    audit_thm3,
    check_hom,
    classify_hom,
    endomorphisms,
    kernel,
    quotient_ring,
)
from .reports import (
    REFUTED,
    SKIPPED,
    VERIFIED,
    ClaimOutcome,
    ClaimReport,
    parse_report_json,
    render_report,
)
from .ringfile import RingFileError, document_for, load_ring_file, ring_from_document
from .rings import (
    FiniteRing,
    RingAxiomError,
    additive_order,
    make_algebra,
    make_boolean,
    make_product,
    make_table_ring,
    make_zn,
)
from .zmodel import (
    ZProductIdeal,
    audit_ex2,
    box_oracle_check,
    parse_z_ideal,
    z_contains,
    z_is_maximal,
    z_is_prime,
    z_principal_witness,
)

__version__ = "0.1.0"
