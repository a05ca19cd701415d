"""
Numerical invariants of a quasi-elliptic fibration S -> B.

A surface is described only through the data that enter its canonical
bundle formula: the characteristic p, the genus g of the base curve,
chi = chi(O_S), the torsion length t of R^1 phi_* O_S, and one residue a_i
per multiple fiber.  Every multiple fiber has multiplicity exactly p, so the
multiplicity is not stored.

Rule identifiers reported by :func:`validate` are stable strings and are
part of the CLI output contract.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

SUPPORTED_CHARACTERISTICS = (2, 3)

_CONFIG_FIELDS = ("p", "g", "chi", "t", "fibers")
_FIBER_FIELDS = ("kind", "a")


class FiberKind(str, enum.Enum):
    TAME = "tame"
    WILD = "wild"


class InvalidConfigError(ValueError):
    """Raised when an operation is called on a config that fails validation."""

    def __init__(self, violations):
        self.violations = list(violations)
        detail = "; ".join(f"{rule}: {msg}" for rule, msg in self.violations)
        super().__init__(f"invalid surface config ({detail})")


@dataclass(frozen=True, order=True)
class FiberDatum:
    kind: FiberKind
    a: int

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "a": self.a}

    @classmethod
    def tame(cls, p: int) -> "FiberDatum":
        return cls(FiberKind.TAME, p - 1)

    @classmethod
    def wild(cls, a: int) -> "FiberDatum":
        return cls(FiberKind.WILD, a)

    def __str__(self) -> str:
        return f"{self.kind.value[0].upper()}{self.a}"


@dataclass(frozen=True)
class SurfaceConfig:
    p: int
    g: int
    chi: int
    t: int
    fibers: tuple[FiberDatum, ...] = field(default_factory=tuple)

    def __post_init__(self):
        # accept lists for convenience; stored as a tuple so the value stays hashable
        object.__setattr__(self, "fibers", tuple(self.fibers))

    @property
    def residues(self) -> list[int]:
        return [f.a for f in self.fibers]

    @property
    def n_wild(self) -> int:
        return sum(1 for f in self.fibers if f.kind is FiberKind.WILD)

    @property
    def n_tame(self) -> int:
        return sum(1 for f in self.fibers if f.kind is FiberKind.TAME)

    def with_fiber(self, fiber: FiberDatum) -> "SurfaceConfig":
        return SurfaceConfig(self.p, self.g, self.chi, self.t, self.fibers + (fiber,))

    def replace(self, **changes) -> "SurfaceConfig":
        data = {"p": self.p, "g": self.g, "chi": self.chi, "t": self.t, "fibers": self.fibers}
        data.update(changes)
        return SurfaceConfig(**data)

    def canonical(self) -> "SurfaceConfig":
        """Same config with fibers in canonical order (tame first, then descending a)."""
        ordered = sorted(self.fibers, key=lambda f: (f.kind is not FiberKind.TAME, -f.a))
        return self.replace(fibers=tuple(ordered))

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "g": self.g,
            "chi": self.chi,
            "t": self.t,
            "fibers": [f.to_dict() for f in self.fibers],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "SurfaceConfig":
        """Parse the flat config record.  Unknown or missing fields raise ``ValueError``."""
        if not isinstance(data, Mapping):
            raise ValueError("config must be a mapping")
        unknown = sorted(set(data) - set(_CONFIG_FIELDS))
        if unknown:
            raise ValueError(f"unknown config field(s): {', '.join(unknown)}")
        missing = [k for k in _CONFIG_FIELDS if k not in data]
        if missing:
            raise ValueError(f"missing config field(s): {', '.join(missing)}")
        for key in ("p", "g", "chi", "t"):
            if not _is_int(data[key]):
                raise ValueError(f"field {key!r} must be an integer")
        if not isinstance(data["fibers"], list):
            raise ValueError("field 'fibers' must be a list")
        fibers = []
        for i, raw in enumerate(data["fibers"]):
            if not isinstance(raw, Mapping):
                raise ValueError(f"fibers[{i}] must be a mapping")
            extra = sorted(set(raw) - set(_FIBER_FIELDS))
            if extra:
                raise ValueError(f"unknown field(s) in fibers[{i}]: {', '.join(extra)}")
            if "kind" not in raw or "a" not in raw:
                raise ValueError(f"fibers[{i}] needs both 'kind' and 'a'")
            try:
                kind = FiberKind(raw["kind"])
            except ValueError:
                raise ValueError(
                    f"fibers[{i}].kind must be 'tame' or 'wild', got {raw['kind']!r}"
                ) from None
            if not _is_int(raw["a"]):
                raise ValueError(f"fibers[{i}].a must be an integer")
            fibers.append(FiberDatum(kind, raw["a"]))
        return cls(data["p"], data["g"], data["chi"], data["t"], tuple(fibers))

    def __str__(self) -> str:
        fibers = ",".join(str(f) for f in self.fibers)
        return f"(p={self.p}, g={self.g}, chi={self.chi}, t={self.t}, [{fibers}])"


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[str, str], ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [{"rule": r, "message": m} for r, m in self.violations],
        }


def min_chi(g: int) -> int:
    """Least integer chi(O_S) allowed over a base of genus ``g``: ceil((1 - g) / 3)."""
    if not _is_int(g) or g < 0:
        raise ValueError(f"genus must be a non-negative integer, got {g!r}")
    return -((g - 1) // 3)


def validate(config: SurfaceConfig, strict: bool = False) -> ValidationReport:
    """Check every invariant of ``config``; never raises.

    With ``strict`` the additional rule ``t > 0 => at least one wild fiber``
    is enforced.  It is off by default because the case analysis never
    relies on it.
    """
    v: list[tuple[str, str]] = []
    p, g, chi, t = config.p, config.g, config.chi, config.t
    p_ok = _is_int(p) and p in SUPPORTED_CHARACTERISTICS
    if not p_ok:
        v.append(("characteristic", f"p must be 2 or 3 (quasi-elliptic surfaces), got {p!r}"))
    g_ok = _is_int(g) and g >= 0
    if not g_ok:
        v.append(("genus-nonnegative", f"g must be a non-negative integer, got {g!r}"))
    if not _is_int(chi):
        v.append(("chi-integer", f"chi must be an integer, got {chi!r}"))
    elif g_ok and chi < min_chi(g):
        v.append((
            "chi-lower-bound",
            f"chi below lower bound ceil((1-g)/3): chi={chi} < min_chi({g})={min_chi(g)}",
        ))
    if not _is_int(t) or t < 0:
        v.append(("torsion-nonnegative", f"t must be a non-negative integer, got {t!r}"))
    for i, fib in enumerate(config.fibers):
        if not isinstance(fib, FiberDatum) or not isinstance(fib.kind, FiberKind):
            v.append(("fiber-kind", f"fibers[{i}] is not a tame/wild fiber datum"))
            continue
        if not _is_int(fib.a):
            v.append(("residue-range", f"fibers[{i}].a must be an integer, got {fib.a!r}"))
            continue
        if p_ok and not 0 <= fib.a <= p - 1:
            v.append(("residue-range", f"fibers[{i}].a={fib.a} outside [0, {p - 1}]"))
        if p_ok and fib.kind is FiberKind.TAME and fib.a != p - 1:
            v.append(("tame-residue", f"tame fiber fibers[{i}] has a={fib.a}, must be p-1={p - 1}"))
    n_wild = sum(1 for f in config.fibers if isinstance(f, FiberDatum) and f.kind is FiberKind.WILD)
    if _is_int(t) and t >= 0 and n_wild > t:
        v.append(("wild-count", f"wild count {n_wild} > t = {t}"))
    if strict and _is_int(t) and t > 0 and n_wild == 0:
        v.append(("strict-torsion-wild", f"t = {t} > 0 but no wild fiber (strict mode)"))
    return ValidationReport(tuple(v))


def require_valid(config: SurfaceConfig) -> None:
    report = validate(config)
    if not report.valid:
        raise InvalidConfigError(report.violations)


def kodaira_value(config: SurfaceConfig) -> Fraction:
    """2g - 2 + chi + t + sum(a_i) / p as an exact rational."""
    require_valid(config)
    return Fraction(2 * config.g - 2 + config.chi + config.t) + Fraction(sum(config.residues), config.p)


def kodaira_dim_is_one(config: SurfaceConfig) -> bool:
    return kodaira_value(config) > 0
