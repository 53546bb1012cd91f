"""Satellite corrections to Casson-Gordon signatures and the condition sieve.

A configuration infects a base knot along paired curves: each site carries a
companion knot J on one curve and -J on its partner, so the correction to the
Casson-Gordon signature of a character is

    2 sigma_J0(w^chi(z0)) + 2 sum_i [sigma_Ji(w^chi(z_i)) - sigma_Ji(w^chi(z_i'))],

with sigma(w^0) = 0 by convention. Companions are scaled by an overall factor
c (Gilmer's bound for the base knot, known only abstractly), so ledger
arithmetic is carried out in integer linear forms a*c + b and certified for
every c >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cover import Character, CoverPresentation, HomologyClass, enumerate_characters
from .errors import InputError, SingularOmegaError
from .intmatrix import DEFAULT_ENUM_CAP, _prime_power
from .knots import KnotExpr, RationalAngle, seifert_matrix, tl_signature


@dataclass(frozen=True)
class InfectionSite:
    """One infection slot: lift classes of the curve pair and the companion knot.

    ``z_prime`` is None for a single-curve site (the companion has no partner,
    as for the distinguished site 0). ``copies_per_c`` scales the companion:
    the knot tied in is the (copies_per_c * c)-fold connected sum.
    """

    label: int
    z: HomologyClass
    z_prime: HomologyClass | None
    companion: KnotExpr
    copies_per_c: int = 1

    def __post_init__(self):
        if self.copies_per_c < 0:
            raise InputError("copies_per_c must be non-negative")


SYMBOLIC_C = None  # scale marker: certificates stay conditional on c >= max(c0, 2)


@dataclass(frozen=True)
class InfectionConfig:
    base: CoverPresentation
    sites: tuple
    modulus: int
    scale_c: int | None = SYMBOLIC_C

    def __post_init__(self):
        _prime_power(self.modulus)
        labels = [s.label for s in self.sites]
        if len(set(labels)) != len(labels):
            raise InputError("site labels must be distinct")
        n = self.base.generator_count
        for s in self.sites:
            if len(s.z.coefficients) != n:
                raise InputError(f"site {s.label}: z has wrong dimension")
            if s.z_prime is not None and len(s.z_prime.coefficients) != n:
                raise InputError(f"site {s.label}: z_prime has wrong dimension")
        if self.scale_c is not None and self.scale_c < 1:
            raise InputError("scale c must be positive (or symbolic)")

    def sorted_sites(self) -> list[InfectionSite]:
        return sorted(self.sites, key=lambda s: s.label)


@lru_cache(maxsize=256)
def _companion_sigma_table(companion: KnotExpr, q: int) -> tuple:
    """sigma_J(w_q^a) for a = 0..q-1, with sigma at a = 0 taken to be 0."""
    K = seifert_matrix(companion)
    out = [0]
    for a in range(1, q):
        out.append(tl_signature(K, RationalAngle(a, q)))
    return tuple(out)


def _site_table(site: InfectionSite, q: int) -> tuple:
    """Per-c signature coefficients of the site companion at all exponents."""
    try:
        base = _companion_sigma_table(site.companion, q)
    except SingularOmegaError as exc:
        raise SingularOmegaError(exc.denominator, site.label) from exc
    return tuple(site.copies_per_c * v for v in base)


def _check_membership(cfg: InfectionConfig, chi: Character):
    if chi.modulus != cfg.modulus:
        raise InputError("character modulus does not match the configuration")
    rel = cfg.base.relation_matrix
    if any(v % cfg.modulus for v in rel.matvec(chi.values)):
        raise InputError("character does not lie in the cover's character group")


def cg_correction(cfg: InfectionConfig, chi: Character) -> int:
    """Total satellite correction for chi.

    With a concrete scale the exact integer is returned; with a symbolic scale
    the returned value is the integer coefficient of c.
    """
    _check_membership(cfg, chi)
    q = cfg.modulus
    coeff = 0
    for site in cfg.sorted_sites():
        table = _site_table(site, q)
        a = chi.evaluate(site.z)
        if site.z_prime is None:
            coeff += 2 * table[a]
        else:
            b = chi.evaluate(site.z_prime)
            coeff += 2 * (table[a] - table[b])
    return coeff * cfg.scale_c if cfg.scale_c is not None else coeff


@dataclass(frozen=True)
class ConditionReport:
    per_site: tuple  # ((label, satisfied), ...) in label order
    all_satisfied: bool

    def site(self, label: int) -> bool:
        for lab, ok in self.per_site:
            if lab == label:
                return ok
        raise KeyError(label)


def conditions_satisfied(cfg: InfectionConfig, chi: Character) -> ConditionReport:
    """Vanishing conditions per site: chi(z) = 0 for single-curve sites,
    chi(z) = +-chi(z') for paired sites."""
    _check_membership(cfg, chi)
    q = cfg.modulus
    rows = []
    for site in cfg.sorted_sites():
        a = chi.evaluate(site.z)
        if site.z_prime is None:
            ok = a == 0
        else:
            b = chi.evaluate(site.z_prime)
            ok = a == b or (a + b) % q == 0
        rows.append((site.label, ok))
    return ConditionReport(per_site=tuple(rows), all_satisfied=all(ok for _, ok in rows))


def small_character_set(cfg: InfectionConfig,
                        cap: int = DEFAULT_ENUM_CAP) -> list[Character]:
    """All characters satisfying every site condition, in canonical order."""
    return [chi for chi in enumerate_characters(cfg.base, cfg.modulus, cap)
            if conditions_satisfied(cfg, chi).all_satisfied]


@dataclass(frozen=True)
class SiteProfile:
    """Exact per-c signature statistics of one site's companion."""

    label: int
    single_curve: bool
    values: tuple  # per-c signature coefficient at exponent a = 0..q-1
    max_magnitude: int
    min_nonzero: int
    min_violation_gap: int
    max_gap: int


def _profile_site(site: InfectionSite, q: int) -> SiteProfile:
    vals = _site_table(site, q)
    nonzero_exps = [abs(vals[a]) for a in range(1, q)]
    max_mag = max(nonzero_exps, default=0)
    min_nz = min(nonzero_exps, default=0)
    gaps = [abs(vals[a] - vals[b])
            for a in range(q) for b in range(q)
            if a != b and (a + b) % q != 0]
    return SiteProfile(
        label=site.label,
        single_curve=site.z_prime is None,
        values=vals,
        max_magnitude=max_mag,
        min_nonzero=min_nz,
        min_violation_gap=min(gaps, default=0),
        max_gap=max(gaps, default=0),
    )


def signature_profile(cfg: InfectionConfig) -> dict[int, SiteProfile]:
    """Exact tables from true computed signatures, keyed by site label."""
    return {site.label: _profile_site(site, cfg.modulus)
            for site in cfg.sorted_sites()}


@dataclass(frozen=True)
class LinearInC:
    """The integer linear form slope*c + intercept in the scale parameter c."""

    slope: int
    intercept: int

    def holds_for_all_c_ge_2(self) -> bool:
        """Positivity of the form for every c >= 2."""
        return self.slope >= 0 and 2 * self.slope + self.intercept > 0


@dataclass(frozen=True)
class LedgerCase:
    copy: int
    site: int
    bound: LinearInC
    holds: bool


@dataclass(frozen=True)
class SeparationLedger:
    cases: tuple
    separated: bool
    target_genus: int
    copies: int
    copy_multipliers: tuple


def verify_separation_profile(cfg: InfectionConfig, g: int, copies: int = 1,
                              copy_multipliers=None) -> SeparationLedger:
    """Certify that a violated condition forces a correction too large for genus g.

    One case per (copy, site) slot, taken as the maximal violated slot: the
    slot's minimal contribution must exceed the base-term allowance (one c per
    copy), the accumulated maxima of all earlier slots, and the Gilmer
    threshold 4g. Each case is recorded as an exact integer form in c and the
    ledger is separated only when every case is positive for all c >= 2.
    """
    if copies < 1:
        raise InputError("copies must be at least 1")
    if copy_multipliers is None:
        copy_multipliers = (1,) * copies
    copy_multipliers = tuple(int(m) for m in copy_multipliers)
    if len(copy_multipliers) != copies:
        raise InputError("need one multiplier per copy")
    if any(m < 1 for m in copy_multipliers):
        raise InputError("copy multipliers must be positive")

    profiles = [signature_profile(cfg)[s.label] for s in cfg.sorted_sites()]
    cases = []
    accumulated = 0  # sum of 2 * rho * max-arm over all earlier slots
    for k in range(1, copies + 1):
        rho = copy_multipliers[k - 1]
        for prof in profiles:
            min_arm = prof.min_nonzero if prof.single_curve else prof.min_violation_gap
            max_arm = prof.max_magnitude if prof.single_curve else prof.max_gap
            bound = LinearInC(slope=2 * rho * min_arm - copies - accumulated,
                              intercept=-4 * g)
            cases.append(LedgerCase(copy=k, site=prof.label, bound=bound,
                                    holds=bound.holds_for_all_c_ge_2()))
            accumulated += 2 * rho * max_arm
    separated = bool(cases) and all(c.holds for c in cases)
    return SeparationLedger(cases=tuple(cases), separated=separated, target_genus=g,
                            copies=copies, copy_multipliers=copy_multipliers)
