"""Empirical checks of the failure lemmas and bounds.

Every check yields ``CheckRecord`` rows. Suites group them the way the
``verify`` command runs them; the order of ``CHECKS`` fixes the exit code
reported for the first failing check.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..config import InternalConfig
from ..elgamal import ElGamal
from ..exceptions import BoundViolation, LemmaViolation
from ..gf import FieldCtx, LPoly, builtin_modulus, divisors, field_new, is_prime, parse_lpoly
from ..protocol import blinded_plaintext
from .bounds import count_irreducible, omega_bruteforce, omega_h
from .cosets import CosetDecomposition, cyclotomic_cosets, decompose
from .failure import epsilon, eta, transcript_failure_fraction

logger = logging.getLogger(__name__)

CHECKS = (
    "lemma1.coset_size_divides_n",
    "lemma1.coset_count",
    "lemma1.irreducible_upper_bound",
    "lemma2.one_in_U",
    "lemma3.root_property",
    "lemma4.epsilon_lower_bound",
    "lemma5.prime_n_bound",
    "omega.epsilon_lower_bound",
    "lemma7.h_non_decreasing",
    "lemma8.omega_decreasing",
    "lemma9.omega_floor",
    "theorem.eta_lower_bound",
    "elgamal.roundtrip",
    "elgamal.homomorphism",
    "oracle.epsilon_transcripts",
    "omega.bruteforce_agreement",
    "omega_p.eta_lower_bound",
)

SUITES = ("lemmas-small", "bounds", "cosets", "elgamal", "oracle", "all")

# Members of the primitive-coefficient class used by the root sweep (p = 2)
CLASS_P_SAMPLES = ("g", "t+g", "g^2*t^2+1")


@dataclass(frozen=True)
class CheckRecord:
    check: str
    subject: str
    lhs: str
    rhs: str
    holds: bool

    def as_row(self) -> Dict[str, object]:
        return {"check": self.check, "subject": self.subject, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def _record(check: str, subject: str, lhs, rhs, holds: bool) -> CheckRecord:
    if not holds:
        logger.warning(f"check {check} failed for {subject}: {lhs} vs {rhs}")
    return CheckRecord(check, subject, str(lhs), str(rhs), bool(holds))


def in_class_P(ctx: FieldCtx, F: LPoly) -> bool:
    """True when exactly one coefficient of F is outside GF(p) and that one is primitive."""
    outside = [c for c in F.coeffs if not c.in_prime_field()]
    return len(outside) == 1 and ctx.is_primitive(outside[0])


@dataclass(frozen=True)
class RootReport:
    """Root count of E on one conjugacy class D_u."""

    u: int
    size: int
    v_vanishes: bool
    roots: int

    @property
    def holds(self) -> bool:
        return self.v_vanishes or self.roots <= 1


def _root_reports(ctx: FieldCtx, decomposition: CosetDecomposition, F: LPoly, s: int, r: int) -> List[RootReport]:
    x = decomposition.x
    V = ctx.repr_as_kpoly(ctx.pow(ctx.alpha, s))
    W = ctx.repr_as_kpoly(ctx.mul(ctx.pow(ctx.pow(ctx.alpha, x), s), blinded_plaintext(ctx, F, r)))
    reports = []
    for u in decomposition.U:
        v_values = [ctx.eval_kpoly(V, beta) for beta in decomposition.D[u]]
        if all(v.is_zero() for v in v_values):
            reports.append(RootReport(u, decomposition.class_size(u), True, 0))
            continue
        roots = 0
        for beta, v_value in zip(decomposition.D[u], v_values):
            shifted = ctx.add(ctx.eval_lpoly(F, beta), ctx.embed(r))
            if ctx.sub(ctx.eval_kpoly(W, beta), ctx.mul(ctx.pow(v_value, x), shifted)).is_zero():
                roots += 1
        reports.append(RootReport(u, decomposition.class_size(u), False, roots))
    return reports


def lemma_root_check(
    ctx: FieldCtx, x: int, F: LPoly, s: int, r: int, decomposition: Optional[CosetDecomposition] = None
) -> List[RootReport]:
    """Per class D_u of the valid set: V vanishes on all of D_u, or E has at most one root there.

    Raises:
        ValueError: F is not in the primitive-coefficient class
        LemmaViolation: some class has V nonvanishing and two or more roots of E
    """
    if not in_class_P(ctx, F):
        raise ValueError("the root property is only claimed for the primitive-coefficient class")
    decomposition = decomposition or decompose(ctx, x)
    reports = _root_reports(ctx, decomposition, F, s, r)
    for report in reports:
        if not report.holds:
            raise LemmaViolation(
                f"x={x}, s={s}, r={r}: E has {report.roots} roots on the class of g^{report.u}"
            )
    return reports


def exploratory_root_search(ctx: FieldCtx, F: LPoly, limit: int = 10) -> List[Dict[str, int]]:
    """Find (x, s, r, u) where E has two or more roots on a class with V nonvanishing.

    Meant for F outside the primitive-coefficient class, where nothing is
    claimed; hits are reported, never asserted.
    """
    hits: List[Dict[str, int]] = []
    for x in range(ctx.q):
        decomposition = decompose(ctx, x)
        for s in range(ctx.q):
            for r in range(ctx.p):
                for report in _root_reports(ctx, decomposition, F, s, r):
                    if not report.holds:
                        hits.append({"x": x, "s": s, "r": r, "u": report.u, "roots": report.roots})
                        if len(hits) >= limit:
                            return hits
    logger.info(f"exploratory root search found {len(hits)} hit(s)")
    return hits


def _field(p: int, n: int) -> FieldCtx:
    return field_new(p, n, builtin_modulus(p, n))


# ----------------------------------------------------------------------
# coset checks


def check_cosets(n_values: Iterable[int], p: int = 2) -> List[CheckRecord]:
    records = []
    for n in n_values:
        q = p ** n - 1
        table = cyclotomic_cosets(q, p)
        sizes = table.sizes()
        bad = sorted(d for d in sizes if n % d)
        records.append(_record("lemma1.coset_size_divides_n", f"p={p},n={n}", sorted(sizes), f"divisors of {n}", not bad))
        for d in divisors(n):
            # N_p(1) counts t, which is no minimal polynomial of a group element
            expected = count_irreducible(p, d, "enumerate") - (1 if d == 1 else 0)
            found = sizes.get(d, 0)
            records.append(_record("lemma1.coset_count", f"p={p},n={n},d={d}", found, expected, found == expected))
    return records


def check_irreducible_bound(d_values: Iterable[int], p: int = 2) -> List[CheckRecord]:
    records = []
    for d in d_values:
        count = count_irreducible(p, d, "enumerate")
        bound = Fraction(p ** d - p, d)
        records.append(_record("lemma1.irreducible_upper_bound", f"p={p},d={d}", count, bound, count <= bound))
    return records


# ----------------------------------------------------------------------
# small exhaustive lemma checks


def check_one_in_U(n_values: Iterable[int]) -> List[CheckRecord]:
    records = []
    for n in n_values:
        ctx = _field(2, n)
        missing = [x for x in range(ctx.q) if 1 not in decompose(ctx, x).U]
        records.append(_record("lemma2.one_in_U", f"n={n},all x", len(missing), 0, not missing))
    return records


def check_root_property(n_values: Iterable[int], samples: Sequence[str] = CLASS_P_SAMPLES) -> List[CheckRecord]:
    records = []
    for n in n_values:
        ctx = _field(2, n)
        decompositions = [decompose(ctx, x) for x in range(ctx.q)]
        for text in samples:
            F = parse_lpoly(ctx, text)
            if not in_class_P(ctx, F):
                logger.info(f"skipping F={text} at n={n}: not in the primitive-coefficient class")
                continue
            violations = 0
            for decomposition in decompositions:
                for s in range(ctx.q):
                    for r in range(ctx.p):
                        violations += sum(
                            not report.holds for report in _root_reports(ctx, decomposition, F, s, r)
                        )
            records.append(_record("lemma3.root_property", f"n={n},F={text}", violations, 0, violations == 0))
    return records


# ----------------------------------------------------------------------
# bound checks


def _epsilon_records(n: int, ctx: FieldCtx, epsilons: Dict[int, Fraction], omega: Fraction) -> List[CheckRecord]:
    records = []
    decomposition_failures: List[str] = []
    omega_failures: List[str] = []
    prime_failures: List[str] = []
    for x, value in epsilons.items():
        decomposition = decompose(ctx, x)
        bound = 1 - Fraction(len(decomposition.U), decomposition.size)
        if value < bound:
            decomposition_failures.append(f"x={x}: {value} < {bound}")
        if value < 1 - omega:
            omega_failures.append(f"x={x}: {value}")
        if is_prime(n) and not value > 1 - Fraction(2, n):
            prime_failures.append(f"x={x}: {value}")
    minimum = min(epsilons.values())
    records.append(_record("lemma4.epsilon_lower_bound", f"n={n},all x", len(decomposition_failures), 0, not decomposition_failures))
    if is_prime(n):
        records.append(_record("lemma5.prime_n_bound", f"n={n},min over x", minimum, 1 - Fraction(2, n), not prime_failures))
    records.append(_record("omega.epsilon_lower_bound", f"n={n},min over x", minimum, 1 - omega, not omega_failures))
    return records


def eta_floor(n: int, omega: Fraction) -> Fraction:
    """1 - 2/n for prime n >= 7, 1 - omega(n) otherwise."""
    if n >= 7 and is_prime(n):
        return 1 - Fraction(2, n)
    return 1 - omega


def check_epsilon_bounds(n_values: Iterable[int], workers: Optional[int] = None) -> List[CheckRecord]:
    """Decomposition, prime-degree and omega bounds on epsilon, plus the eta floor, for F = g."""
    records = []
    for n in n_values:
        ctx = _field(2, n)
        F = parse_lpoly(ctx, "g")
        stats = eta(ctx, F, workers=workers)
        omega = omega_h(2, n).omega
        records.extend(_epsilon_records(n, ctx, stats.epsilons, omega))
        floor = eta_floor(n, omega)
        records.append(_record("theorem.eta_lower_bound", f"n={n}", stats.eta, floor, stats.eta >= floor))
    return records


def check_omega_sequence(n_min: int, n_max: int, p: int = 2) -> List[CheckRecord]:
    """h non-decreasing, omega strictly decreasing and omega(n) >= 5/(n+9) for n >= 7."""
    records = []
    bound_records = {n: omega_h(p, n) for n in range(n_min, n_max + 1)}
    h_drops = [n for n in range(n_min, n_max) if bound_records[n + 1].h < bound_records[n].h]
    omega_rises = [n for n in range(n_min, n_max) if not bound_records[n + 1].omega < bound_records[n].omega]
    floor_misses = [n for n in range(max(7, n_min), n_max + 1) if bound_records[n].omega < Fraction(5, n + 9)]
    span = f"p={p},n={n_min}..{n_max}"
    records.append(_record("lemma7.h_non_decreasing", span, len(h_drops), 0, not h_drops))
    records.append(_record("lemma8.omega_decreasing", span, len(omega_rises), 0, not omega_rises))
    records.append(_record("lemma9.omega_floor", span, len(floor_misses), 0, not floor_misses))
    return records


def check_omega_bruteforce(n_values: Iterable[int], p: int = 2, strategy: str = "box") -> List[CheckRecord]:
    records = []
    for n in n_values:
        structured = omega_h(p, n).omega
        brute = omega_bruteforce(p, n, strategy)
        records.append(_record("omega.bruteforce_agreement", f"p={p},n={n},{strategy}", structured, brute, structured == brute))
    return records


def odd_eta_fields(max_order: Optional[int] = None) -> List[Tuple[int, int]]:
    """(p, n) with p odd where the eta enumeration stays within ``max_order``."""
    max_order = InternalConfig.max_eta_order_odd_p if max_order is None else max_order
    return [
        (p, n)
        for p in InternalConfig.omega_odd_p
        for n in range(2, InternalConfig.omega_odd_max_n + 1)
        if p ** n <= max_order
    ]


def check_odd_eta_bounds(fields: Iterable[Tuple[int, int]], workers: Optional[int] = None) -> List[CheckRecord]:
    """eta(F = g) >= 1 - omega_p(n) in odd characteristic."""
    records = []
    for p, n in fields:
        ctx = _field(p, n)
        stats = eta(ctx, parse_lpoly(ctx, "g"), workers=workers)
        floor = 1 - omega_h(p, n).omega
        records.append(_record("omega_p.eta_lower_bound", f"p={p},n={n}", stats.eta, floor, stats.eta >= floor))
    return records


def verify_bounds(
    n_values: Iterable[int],
    workers: Optional[int] = None,
    omega_max_n: int = InternalConfig.omega_check_max_n,
    raise_on_failure: bool = False,
) -> List[CheckRecord]:
    """Bound checks over the given field degrees plus the omega sequence up to ``omega_max_n``.

    Odd characteristics get the brute-force omega comparison up to
    ``InternalConfig.omega_odd_max_n`` and the eta floor wherever eta is enumerable.

    Raises:
        BoundViolation: ``raise_on_failure`` is set and a check fails
    """
    n_values = list(n_values)
    records = check_epsilon_bounds(n_values, workers=workers)
    records += check_omega_sequence(2, omega_max_n)
    records += check_omega_bruteforce(range(2, 9))
    for p in InternalConfig.omega_odd_p:
        records += check_omega_bruteforce(range(2, InternalConfig.omega_odd_max_n + 1), p=p, strategy="vertices")
    records += check_odd_eta_bounds(odd_eta_fields(), workers=workers)
    if raise_on_failure:
        for record in records:
            if not record.holds:
                raise BoundViolation(f"{record.check} failed for {record.subject}: {record.lhs} vs {record.rhs}")
    return records


# ----------------------------------------------------------------------
# ElGamal and oracle checks


def check_elgamal(n: int = 3) -> List[CheckRecord]:
    """Exhaustive roundtrip and homomorphism over GF(2^n)."""
    ctx = _field(2, n)
    scheme = ElGamal(ctx)
    group = list(ctx.group_elements())
    roundtrip_misses = 0
    homomorphism_misses = 0
    for x in range(ctx.q):
        keys = scheme.keygen(x)
        for m in group:
            for s in range(ctx.q):
                c = scheme.encrypt(keys.pk, m, s)
                if scheme.decrypt(keys.sk, c) != m:
                    roundtrip_misses += 1
                other = scheme.encrypt(keys.pk, ctx.gen_pow(s), (s + x) % ctx.q)
                combined = scheme.decrypt(keys.sk, scheme.multiply(c, other))
                if combined != ctx.mul(m, ctx.gen_pow(s)):
                    homomorphism_misses += 1
    subject = f"q={ctx.q},all (x, m, s)"
    return [
        _record("elgamal.roundtrip", subject, roundtrip_misses, 0, roundtrip_misses == 0),
        _record("elgamal.homomorphism", subject, homomorphism_misses, 0, homomorphism_misses == 0),
    ]


def check_oracle(n_values: Iterable[int] = (2, 3), odd_fields: Sequence = ((3, 2),)) -> List[CheckRecord]:
    """Vectorised epsilon, scalar epsilon and executed transcripts agree for F = g."""
    records = []
    fields = [(2, n) for n in n_values] + list(odd_fields)
    for p, n in fields:
        ctx = _field(p, n)
        F = parse_lpoly(ctx, "g")
        mismatches = []
        for x in range(ctx.q):
            fast = epsilon(ctx, x, F, "vectorized")
            slow = epsilon(ctx, x, F, "scalar")
            executed = transcript_failure_fraction(ctx, x, F)
            if not fast == slow == executed:
                mismatches.append(x)
        records.append(_record("oracle.epsilon_transcripts", f"p={p},n={n},all x", len(mismatches), 0, not mismatches))
    return records


# ----------------------------------------------------------------------
# suites


def _suite_cosets(workers: Optional[int] = None, n_max: Optional[int] = None) -> List[CheckRecord]:
    n_range = range(2, InternalConfig.coset_check_max_n + 1)
    return check_cosets(n_range) + check_irreducible_bound(n_range)


def _suite_lemmas_small(workers: Optional[int] = None, n_max: Optional[int] = None) -> List[CheckRecord]:
    return check_one_in_U(range(InternalConfig.bounds_min_n, InternalConfig.bounds_max_n + 1)) + check_root_property(
        range(2, InternalConfig.lemma_small_max_n + 1)
    )


def _suite_bounds(workers: Optional[int] = None, n_max: Optional[int] = None) -> List[CheckRecord]:
    n_max = InternalConfig.bounds_max_n if n_max is None else n_max
    return verify_bounds(range(InternalConfig.bounds_min_n, n_max + 1), workers=workers)


SUITE_RUNNERS: Dict[str, Callable[..., List[CheckRecord]]] = {
    "cosets": _suite_cosets,
    "lemmas-small": _suite_lemmas_small,
    "bounds": _suite_bounds,
    "elgamal": lambda workers=None, n_max=None: check_elgamal(),
    "oracle": lambda workers=None, n_max=None: check_oracle(),
}


def run_suite(name: str, workers: Optional[int] = None, n_max: Optional[int] = None) -> List[CheckRecord]:
    """Run one named suite (or ``all``) and return its records in check order."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
    names = [s for s in SUITES if s != "all"] if name == "all" else [name]
    records: List[CheckRecord] = []
    for suite in names:
        logger.info(f"running verification suite {suite}")
        records.extend(SUITE_RUNNERS[suite](workers=workers, n_max=n_max))
    return sorted(records, key=lambda record: CHECKS.index(record.check))
