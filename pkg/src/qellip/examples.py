"""Built-in configurations and plurigenus tables."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from qellip.canonical import gives_fibration, plurigenus_bounds
from qellip.invariants import FiberDatum, SurfaceConfig, require_valid


@dataclass(frozen=True)
class PlurigenusRecord:
    m: int
    degree: int
    h0_lower: int
    h0_upper: int
    gives_fibration: bool

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "degree": self.degree,
            "h0_lower": self.h0_lower,
            "h0_upper": self.h0_upper,
            "gives_fibration": self.gives_fibration,
        }


def example_surface_3_1() -> SurfaceConfig:
    """Rational base, chi = 1, two tame fibers: |4K_S| fails, |mK_S| works for m >= 5."""
    return SurfaceConfig(3, 0, 1, 0, (FiberDatum.tame(3), FiberDatum.tame(3)))


def question_3_3_config() -> SurfaceConfig:
    """Characteristic 2, elliptic base, chi = 0, a single tame fiber."""
    return SurfaceConfig(2, 1, 0, 0, (FiberDatum.tame(2),))


BUILTIN = {
    "example-3-1": example_surface_3_1,
    "question-3-3": question_3_3_config,
}


def plurigenus_table(config: SurfaceConfig, m_max: int) -> list[PlurigenusRecord]:
    if not isinstance(m_max, int) or m_max < 1:
        raise ValueError(f"m_max must be an integer >= 1, got {m_max!r}")
    require_valid(config)
    rows = []
    for m in range(1, m_max + 1):
        b = plurigenus_bounds(config, m)
        rows.append(PlurigenusRecord(m, b.degree, b.lower, b.upper, gives_fibration(config, m)))
    return rows


_COLUMNS = ("m", "degree", "h0_lower", "h0_upper", "gives_fibration")


def table_to_csv(rows: list[PlurigenusRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_COLUMNS)
    for r in rows:
        writer.writerow([r.m, r.degree, r.h0_lower, r.h0_upper, str(r.gives_fibration).lower()])
    return buf.getvalue()


def table_to_text(rows: list[PlurigenusRecord]) -> str:
    def h0(r):
        return str(r.h0_lower) if r.h0_lower == r.h0_upper else f"[{r.h0_lower},{r.h0_upper}]"

    lines = [f"{'m':>4} {'deg D_m':>8} {'h0(mK)':>8}  fibration"]
    for r in rows:
        lines.append(f"{r.m:>4} {r.degree:>8} {h0(r):>8}  {'yes' if r.gives_fibration else 'no'}")
    return "\n".join(lines)
