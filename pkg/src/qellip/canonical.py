"""
Degree bookkeeping for the pluricanonical divisors mK_S.

The canonical class pushes down to the base curve as

    K_S ~ phi^*(K_B - f) + sum a_i F_i,      -deg f = chi + t,

so mK_S restricted away from the multiple fibers is the pullback of a
divisor D_m on B of degree

    deg D_m = m (2g - 2 + chi + t) + sum floor(m a_i / p).

Plurigenera are read off D_m through Riemann-Roch on B.  This uses
h^0(S, mK_S) = h^0(B, D_m), which holds because the leftover multiples
(m a_i mod p) F_i stay strictly below the fiber multiplicity p.
"""

from __future__ import annotations

from dataclasses import dataclass

from qellip.invariants import SurfaceConfig, require_valid


@dataclass(frozen=True)
class CanonicalClass:
    p: int
    g: int
    base_coeff: int
    residues: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"p": self.p, "g": self.g, "base_coeff": self.base_coeff, "residues": list(self.residues)}


@dataclass(frozen=True)
class PlurigenusBounds:
    m: int
    degree: int
    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_dict(self) -> dict:
        return {"m": self.m, "degree": self.degree, "lower": self.lower, "upper": self.upper}


def canonical_data(config: SurfaceConfig) -> CanonicalClass:
    require_valid(config)
    base = 2 * config.g - 2 + config.chi + config.t
    return CanonicalClass(config.p, config.g, base, tuple(config.residues))


def _check_m(m: int, least: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < least:
        raise ValueError(f"m must be an integer >= {least}, got {m!r}")


def base_degree(config: SurfaceConfig, m: int) -> int:
    """Degree of D_m on the base curve."""
    _check_m(m, 0)
    cc = canonical_data(config)
    return m * cc.base_coeff + sum((m * a) // cc.p for a in cc.residues)


def gives_fibration(config: SurfaceConfig, m: int) -> bool:
    """True when deg D_m >= 2g + 1, so |mK_S| recovers the fibration."""
    _check_m(m, 1)
    return base_degree(config, m) >= 2 * config.g + 1


def plurigenus_bounds(config: SurfaceConfig, m: int) -> PlurigenusBounds:
    """Bounds on dim H^0(S, mK_S) from the degree of D_m alone.

    Where numerical data cannot decide the value (degree 0 on an elliptic
    base, or the special range 0 <= d <= 2g - 2 for g >= 2) an interval is
    returned; the upper end in the special range is Clifford's bound.
    """
    _check_m(m, 0)
    d = base_degree(config, m)
    g = config.g
    if d < 0:
        lo = hi = 0
    elif g == 0:
        lo = hi = d + 1
    elif g == 1:
        if d >= 1:
            lo = hi = d
        else:
            lo, hi = 0, 1
    elif d >= 2 * g - 1:
        lo = hi = d - g + 1
    else:
        lo, hi = max(d - g + 1, 0), d // 2 + 1
    return PlurigenusBounds(m, d, lo, hi)
