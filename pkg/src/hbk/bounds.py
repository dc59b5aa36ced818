"""Lower bounds for the unknotting number and the Gordian distance."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from .algebra import AlexanderBiquandle
from .coloring import coloring_dimension
from .diagram import Diagram
from .exceptions import EmptyGcdClassError
from .flow import DEFAULT_FLOW_CAP, Flow, enumerate_flows, flow_space, gcd_of_flow


@dataclass
class DimProfile:
    """Multiset of coloring dimensions per gcd class of flows."""

    m: int
    by_gcd: dict[int, Counter[int]] = field(default_factory=dict)

    def add(self, gcd: int, dim: int) -> None:
        self.by_gcd.setdefault(gcd, Counter())[dim] += 1

    @property
    def total(self) -> int:
        return sum(sum(c.values()) for c in self.by_gcd.values())

    @property
    def max_dim(self) -> int:
        return max(max(c) for c in self.by_gcd.values())

    def dims(self, gcd: int) -> Counter[int]:
        if gcd not in self.by_gcd:
            raise EmptyGcdClassError(gcd)
        return self.by_gcd[gcd]

    def to_dict(self) -> dict[str, Any]:
        return {
            str(g): {
                "flows": sum(c.values()),
                "min_dim": min(c),
                "max_dim": max(c),
                "dims": {str(k): c[k] for k in sorted(c)},
            }
            for g, c in sorted(self.by_gcd.items())
        }


def _flow_dimension(job: tuple[Diagram, AlexanderBiquandle, Flow]) -> tuple[int, int]:
    d, ab, phi = job
    return gcd_of_flow(phi), coloring_dimension(d, phi, ab)


def flow_dim_profile(
    d: Diagram,
    ab: AlexanderBiquandle,
    m: int,
    cap: int = DEFAULT_FLOW_CAP,
    jobs: int = 1,
) -> DimProfile:
    """Coloring dimension of every Z_m-flow of ``d``, grouped by gcd.

    With ``jobs > 1`` the flows are evaluated in a process pool; results
    are aggregated in enumeration order so the profile does not depend on
    the pool size.
    """
    ab.require_family(m)
    flows = enumerate_flows(flow_space(d, m), cap)
    work = ((d, ab, phi) for phi in flows)
    results: Iterable[tuple[int, int]]
    profile = DimProfile(m)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_flow_dimension, work, chunksize=16)
            for gcd, dim in results:
                profile.add(gcd, dim)
    else:
        for gcd, dim in map(_flow_dimension, work):
            profile.add(gcd, dim)
    return profile


def unknotting_lower_bound(
    d: Diagram,
    ab: AlexanderBiquandle,
    m: int,
    cap: int = DEFAULT_FLOW_CAP,
    jobs: int = 1,
) -> int:
    return flow_dim_profile(d, ab, m, cap, jobs).max_dim - 1


def directed_bound(source: DimProfile, target: DimProfile) -> int:
    """Max over source flows of the least |d1 − d2| within the same gcd class."""
    best = 0
    for gcd, dims in source.by_gcd.items():
        target_dims = target.dims(gcd)
        for d1 in dims:
            best = max(best, min(abs(d1 - d2) for d2 in target_dims))
    return best


def gordian_lower_bound(
    d1: Diagram,
    d2: Diagram,
    ab: AlexanderBiquandle,
    m: int,
    cap: int = DEFAULT_FLOW_CAP,
    jobs: int = 1,
) -> int:
    return directed_bound(
        flow_dim_profile(d1, ab, m, cap, jobs), flow_dim_profile(d2, ab, m, cap, jobs)
    )


@dataclass
class DirectedBound:
    source: str
    target: str
    bound: int


@dataclass
class BoundReport:
    bound: int
    directions: list[DirectedBound]
    flows_examined: int
    profiles: dict[str, DimProfile]
    warnings: list[str] = field(default_factory=list)
    upper_bound: Optional[int] = None

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "bound": self.bound,
            "direction_details": [
                {"from": d.source, "to": d.target, "bound": d.bound}
                for d in self.directions
            ],
            "flows_examined": self.flows_examined,
            "per_gcd_summary": {
                name: profile.to_dict() for name, profile in self.profiles.items()
            },
        }
        if self.upper_bound is not None:
            doc["upper_bound"] = self.upper_bound
        if self.warnings:
            doc["warnings"] = list(self.warnings)
        return doc


def unknotting_report(
    d: Diagram,
    ab: AlexanderBiquandle,
    m: int,
    cap: int = DEFAULT_FLOW_CAP,
    jobs: int = 1,
) -> BoundReport:
    profile = flow_dim_profile(d, ab, m, cap, jobs)
    bound = profile.max_dim - 1
    return BoundReport(
        bound=bound,
        directions=[DirectedBound(d.name, "trivial", bound)],
        flows_examined=profile.total,
        profiles={d.name: profile},
    )


def distance_report(
    d1: Diagram,
    d2: Diagram,
    ab: AlexanderBiquandle,
    m: int,
    cap: int = DEFAULT_FLOW_CAP,
    jobs: int = 1,
) -> BoundReport:
    """Both directed Gordian bounds; the reported bound is the larger one."""
    p1 = flow_dim_profile(d1, ab, m, cap, jobs)
    p2 = flow_dim_profile(d2, ab, m, cap, jobs)
    warnings = []
    if p1.total != p2.total:
        warnings.append(
            f"flow counts differ ({p1.total} vs {p2.total}); "
            "the diagrams may have different genus"
        )
    names = (d1.name, d2.name) if d1.name != d2.name else ("first", "second")
    directions = [
        DirectedBound(names[0], names[1], directed_bound(p1, p2)),
        DirectedBound(names[1], names[0], directed_bound(p2, p1)),
    ]
    return BoundReport(
        bound=max(x.bound for x in directions),
        directions=directions,
        flows_examined=p1.total + p2.total,
        profiles={names[0]: p1, names[1]: p2},
        warnings=warnings,
    )
