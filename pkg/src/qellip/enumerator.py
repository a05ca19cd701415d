"""
Exhaustive enumeration and certification over bounded regions of invariants.

All results are over numerical invariants only: nothing here claims that an
enumerated configuration is realized by an actual quasi-elliptic surface.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Iterator

from qellip.invariants import FiberDatum, FiberKind, SurfaceConfig, min_chi, require_valid
from qellip.threshold import stable_threshold


class CaseLabel(str, enum.Enum):
    I = "I"
    II_1 = "II-1"
    II_2 = "II-2"
    III_1 = "III-1"
    III_2 = "III-2"
    III_3 = "III-3"


class ContractViolation(RuntimeError):
    """A config reached a code path its validation should have ruled out."""


# Per-case stable thresholds proved for characteristic 3.
PROVED_CASE_BOUNDS = {
    3: {
        CaseLabel.I: 3,
        CaseLabel.II_1: 3,
        CaseLabel.II_2: 5,
        CaseLabel.III_1: 1,
        CaseLabel.III_2: 3,
        CaseLabel.III_3: 5,
    },
    # Only a global, conditional bound is known in characteristic 2 (valid
    # once the "question-3-3" configurations are excluded).
    2: {label: 4 for label in CaseLabel},
}

PROVED_GLOBAL_BOUND = {3: 5, 2: 4}


@dataclass(frozen=True)
class Exclusion:
    name: str
    version: int
    description: str
    predicate: Callable[[SurfaceConfig], bool]


def _question_3_3(config: SurfaceConfig) -> bool:
    return (
        config.g == 1
        and config.chi == 0
        and config.t == 0
        and len(config.fibers) == 1
        and config.fibers[0].kind is FiberKind.TAME
    )


EXCLUSIONS = {
    "question-3-3": Exclusion(
        "question-3-3",
        1,
        "elliptic base, chi = 0, t = 0, exactly one tame multiple fiber",
        _question_3_3,
    ),
}


@dataclass(frozen=True)
class RegionBounds:
    p: int
    g_max: int = 4
    chi_plus_t_max: int = 6
    lambda_max: int = 6
    exclusions: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "exclusions", tuple(self.exclusions))
        if self.p not in (2, 3):
            raise ValueError(f"p must be 2 or 3, got {self.p}")
        for name in ("g_max", "chi_plus_t_max", "lambda_max"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        unknown = [e for e in self.exclusions if e not in EXCLUSIONS]
        if unknown:
            raise ValueError(f"unknown exclusion(s): {', '.join(unknown)}; known: {', '.join(EXCLUSIONS)}")

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "g_max": self.g_max,
            "chi_plus_t_max": self.chi_plus_t_max,
            "lambda_max": self.lambda_max,
            "exclusions": list(self.exclusions),
        }


@dataclass(frozen=True)
class CaseSummary:
    count: int
    max_stable: int | None
    proved_bound: int
    passed: bool

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "max_stable": self.max_stable,
            "proved_bound": self.proved_bound,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class CertificationReport:
    bounds: RegionBounds
    configs_checked: int
    max_stable: int
    extremal_configs: tuple[SurfaceConfig, ...]
    per_case: dict
    subcase_checks: tuple[Check, ...]
    tail_checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return (
            all(s.passed for s in self.per_case.values())
            and all(c.passed for c in self.subcase_checks)
            and all(c.passed for c in self.tail_checks)
        )

    def to_dict(self) -> dict:
        return {
            "scope": "numerical invariants only",
            "bounds": self.bounds.to_dict(),
            "configs_checked": self.configs_checked,
            "max_stable": self.max_stable,
            "extremal_configs": [c.to_dict() for c in self.extremal_configs],
            "per_case": {label.value: s.to_dict() for label, s in self.per_case.items()},
            "subcase_checks": [c.to_dict() for c in self.subcase_checks],
            "tail_checks": [c.to_dict() for c in self.tail_checks],
            "pass": self.passed,
        }


def _fiber_multisets(p: int, max_fibers: int, max_wild: int) -> Iterator[tuple[FiberDatum, ...]]:
    tame = FiberDatum.tame(p)
    wild_residues = range(p - 1, -1, -1)
    for lam in range(max_fibers + 1):
        for n_wild in range(min(lam, max_wild) + 1):
            tames = (tame,) * (lam - n_wild)
            for ws in combinations_with_replacement(wild_residues, n_wild):
                yield tames + tuple(FiberDatum.wild(a) for a in ws)


def _kappa_one(p: int, base: int, residues: Iterable[int]) -> bool:
    return p * base + sum(residues) >= 1


def enumerate_configs(bounds: RegionBounds) -> Iterator[SurfaceConfig]:
    """Valid Kodaira-dimension-1 configs inside ``bounds``, one per fiber multiset.

    Order is g, chi, t ascending, then number of fibers, then fewer wild
    fibers first; fibers inside a config are tame first, then descending a.
    """
    p = bounds.p
    excluded = [EXCLUSIONS[name].predicate for name in bounds.exclusions]
    for g in range(bounds.g_max + 1):
        for chi in range(min_chi(g), bounds.chi_plus_t_max + 1):
            for t in range(0, bounds.chi_plus_t_max - chi + 1):
                base = 2 * g - 2 + chi + t
                for fibers in _fiber_multisets(p, bounds.lambda_max, t):
                    if not _kappa_one(p, base, (f.a for f in fibers)):
                        continue
                    config = SurfaceConfig(p, g, chi, t, fibers)
                    if any(pred(config) for pred in excluded):
                        continue
                    yield config


def classify_case(config: SurfaceConfig) -> CaseLabel:
    require_valid(config)
    g, s = config.g, config.chi + config.t
    if g >= 2:
        return CaseLabel.I
    if g == 1:
        if s >= 1:
            return CaseLabel.II_1
        if config.chi == 0 and config.t == 0:
            return CaseLabel.II_2
    else:
        if s >= 3:
            return CaseLabel.III_1
        if s == 2:
            return CaseLabel.III_2
        if s == 1:
            return CaseLabel.III_3
    raise ContractViolation(f"no case applies to {config}; validation should have rejected it")


def _genus_tail(m0: int = 3) -> Check:
    # For g >= 2 the base coefficient is already >= 2g-2+min_chi(g) > 0, so the
    # LHS of the criterion is non-decreasing in m and dominated below by m0 * base.
    values = {}
    ok = True
    for g in range(2, 8):
        base = 2 * g - 2 + min_chi(g)
        lhs, rhs = m0 * base, 2 * g + 1
        values[g] = lhs - rhs
        ok = ok and base >= 1 and lhs >= rhs
    # over one period g -> g+3: 2g-2 grows by 6 and min_chi drops by 1
    lhs_growth = m0 * Fraction(6 - 1)
    rhs_growth = Fraction(6)
    periodic = all(min_chi(g + 3) == min_chi(g) - 1 for g in range(0, 30))
    ok = ok and periodic and lhs_growth - rhs_growth > 0
    return Check(
        "genus-tail",
        ok,
        {
            "m": m0,
            "lhs_minus_rhs_g2_to_g7": {str(g): v for g, v in values.items()},
            "lhs_growth_per_period": int(lhs_growth),
            "rhs_growth_per_period": int(rhs_growth),
        },
    )


def _fiber_monotonicity(corpus: list[SurfaceConfig], stable: dict) -> Check:
    checked = 0
    counterexamples = []
    for config in corpus:
        s = stable[config]
        extra = [FiberDatum.tame(config.p)]
        if config.n_wild < config.t:
            extra += [FiberDatum.wild(a) for a in range(config.p)]
        for fib in extra:
            grown = config.with_fiber(fib)
            checked += 1
            s2 = stable_threshold(grown).stable_m
            if s2 > s:
                counterexamples.append({"config": grown.to_dict(), "before": s, "after": s2})
    return Check(
        "fiber-monotonicity",
        not counterexamples,
        {"pairs_checked": checked, "counterexamples": counterexamples[:5]},
    )


def _chi_t_tail(corpus: list[SurfaceConfig], stable: dict, bounds: RegionBounds) -> Check:
    checked = 0
    counterexamples = []
    for config in corpus:
        s = stable[config]
        for grown in (config.replace(chi=config.chi + 1), config.replace(t=config.t + 1)):
            checked += 1
            s2 = stable_threshold(grown).stable_m
            if s2 > s:
                counterexamples.append({"config": grown.to_dict(), "before": s, "after": s2})
    # Beyond the region, the linear term alone forces the criterion.
    beyond = bounds.chi_plus_t_max + 1
    global_bound = PROVED_GLOBAL_BOUND[bounds.p]
    linear = {}
    linear_ok = True
    for g in range(bounds.g_max + 1):
        base = 2 * g - 2 + beyond
        if base < 1:
            linear_ok = False
            linear[str(g)] = None
            continue
        m0 = -(-(2 * g + 1) // base)
        linear[str(g)] = m0
        linear_ok = linear_ok and m0 <= global_bound
    return Check(
        "chi-t-tail",
        not counterexamples and linear_ok,
        {
            "pairs_checked": checked,
            "counterexamples": counterexamples[:5],
            "chi_plus_t_beyond": beyond,
            "linear_term_threshold_by_genus": linear,
        },
    )


def tail_checks(p: int, corpus: list[SurfaceConfig] | None = None, bounds: RegionBounds | None = None) -> list[Check]:
    """The three arguments that carry the finite search to unbounded g, lambda and chi + t."""
    if p not in (2, 3):
        raise ValueError(f"p must be 2 or 3, got {p}")
    bounds = bounds or RegionBounds(p)
    if corpus is None:
        corpus = list(enumerate_configs(bounds))
    stable = {c: stable_threshold(c).stable_m for c in corpus}
    return [
        _genus_tail(),
        _fiber_monotonicity(corpus, stable),
        _chi_t_tail(corpus, stable, bounds),
    ]


def _case_iii_2_split(records: list[tuple[SurfaceConfig, CaseLabel, int]]) -> list[Check]:
    with_tame = [s for c, lab, s in records if lab is CaseLabel.III_2 and c.n_tame > 0]
    without = [s for c, lab, s in records if lab is CaseLabel.III_2 and c.n_tame == 0]
    return [
        Check(
            "III-2 with a tame fiber",
            all(s <= 2 for s in with_tame),
            {"count": len(with_tame), "max_stable": max(with_tame, default=None), "bound": 2},
        ),
        Check(
            "III-2 without tame fibers",
            all(s <= 3 for s in without),
            {"count": len(without), "max_stable": max(without, default=None), "bound": 3},
        ),
    ]


def certify_bound(bounds: RegionBounds) -> CertificationReport:
    corpus = list(enumerate_configs(bounds))
    records = []
    stable = {}
    for config in corpus:
        s = stable_threshold(config).stable_m
        stable[config] = s
        records.append((config, classify_case(config), s))

    max_stable = max((s for _, _, s in records), default=0)
    extremal = tuple(c for c, _, s in records if s == max_stable) if records else ()

    case_bounds = PROVED_CASE_BOUNDS[bounds.p]
    per_case = {}
    for label in CaseLabel:
        values = [s for _, lab, s in records if lab is label]
        top = max(values, default=None)
        per_case[label] = CaseSummary(
            count=len(values),
            max_stable=top,
            proved_bound=case_bounds[label],
            passed=top is None or top <= case_bounds[label],
        )

    subcases = _case_iii_2_split(records) if bounds.p == 3 else []
    tails = [
        _genus_tail(),
        _fiber_monotonicity(corpus, stable),
        _chi_t_tail(corpus, stable, bounds),
    ]
    return CertificationReport(
        bounds=bounds,
        configs_checked=len(records),
        max_stable=max_stable,
        extremal_configs=extremal,
        per_case=per_case,
        subcase_checks=tuple(subcases),
        tail_checks=tuple(tails),
    )


def render_report(report: CertificationReport) -> str:
    """Human-readable table for a certification report."""
    b = report.bounds
    lines = [
        f"certification over numerical invariants: p={b.p}, g<={b.g_max}, "
        f"chi+t<={b.chi_plus_t_max}, lambda<={b.lambda_max}"
        + (f", excluding {', '.join(b.exclusions)}" if b.exclusions else ""),
        f"configs checked: {report.configs_checked}",
        f"max stable threshold: {report.max_stable}",
        "extremal configs:",
    ]
    lines += [f"  {c}" for c in report.extremal_configs]
    lines.append(f"{'case':<8}{'count':>8}{'max':>6}{'bound':>7}  result")
    for label, s in report.per_case.items():
        top = "-" if s.max_stable is None else str(s.max_stable)
        lines.append(f"{label.value:<8}{s.count:>8}{top:>6}{s.proved_bound:>7}  {'pass' if s.passed else 'FAIL'}")
    for c in report.subcase_checks + report.tail_checks:
        lines.append(f"{c.name}: {'pass' if c.passed else 'FAIL'}")
    lines.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)
