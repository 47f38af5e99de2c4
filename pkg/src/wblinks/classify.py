"""Bounded exhaustive classification of link-initiating blowup weights.

Candidates are generated as ascending tuples (so "up to permutation" is
structural), pruned by the cheap interior-movable inequality, filtered by
blowup terminality, and the survivors run through the full link pipeline.
The top weight is bounded both by the caller's bound and by the interior
inequality itself, which caps the otherwise unbounded direction.

The published answer sets are finite (4 triples, 421 quadruples) but no
a-priori bound on the top weight is available for dimension 4; stabilization
under bound doubling is the empirical surrogate, exposed separately.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ._kernels import _scan_dim3, _scan_dim4
from .link import DivContraction, Link, build_link

DEFAULT_BOUND = 256


@dataclass(frozen=True)
class ClassificationRun:
    dim: int
    bound: int
    accepted: tuple[tuple[int, ...], ...]
    shape_counts: dict[str, int]
    stabilized: bool | None
    duration: float


def shape_of(weights: tuple[int, ...]) -> str:
    """Equality-pattern bucket of an ascending accepted tuple."""
    if weights[0] == 1 and all(w == 1 for w in weights[:-1]):
        return "(" + ",".join(["1"] * (len(weights) - 1)) + ",d)"
    if len(weights) == 4 and weights[0] == weights[1] == 1:
        return "(1,1,c,d)"
    if all(x < y for x, y in zip(weights, weights[1:])):
        return "strictly-increasing"
    if weights[0] == 1:
        return "one-equality-with-1"
    if len(weights) == 4 and weights[2] == weights[3]:
        return "(a,b,c,c)-fibration"
    return "one-equality-no-1"


def _partitions(dim: int, bound: int):
    if dim == 3:
        return [(a,) for a in range(1, bound + 1)]
    return [(a, b) for a in range(1, bound + 1) for b in range(a, bound + 1)]


def _scan_partition(args):
    dim, bound, head = args
    if dim == 3:
        (a,) = head
        return [(a, b, c) for b, c in _scan_dim3(a, bound)]
    a, b = head
    return [(a, b, c, d) for c, d in _scan_dim4(a, b, bound)]


def _survivors(dim: int, bound: int, jobs: int) -> list[tuple[int, ...]]:
    tasks = [(dim, bound, head) for head in _partitions(dim, bound)]
    if jobs <= 1:
        chunks = map(_scan_partition, tasks)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_scan_partition, tasks, chunksize=16))
    out: list[tuple[int, ...]] = []
    for chunk in chunks:
        out.extend(chunk)
    return out


def default_jobs() -> int:
    env = os.environ.get("WBLINKS_JOBS")
    if env:
        return max(1, int(env))
    return 1


def classify(dim: int, bound: int, jobs: int = 1) -> ClassificationRun:
    """Classify all ascending weight tuples with top weight <= bound.

    Deterministic: the accepted list is lexicographically sorted regardless
    of worker count or execution order.
    """
    if dim not in (3, 4):
        raise ValueError(f"dim must be 3 or 4, got {dim}")
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    start = time.perf_counter()
    accepted = sorted(
        ws for ws in _survivors(dim, bound, jobs)
        if isinstance(build_link(ws, dim), Link)
    )
    counts: dict[str, int] = {}
    for ws in accepted:
        key = shape_of(ws)
        counts[key] = counts.get(key, 0) + 1
    return ClassificationRun(
        dim=dim,
        bound=bound,
        accepted=tuple(accepted),
        shape_counts=counts,
        stabilized=None,
        duration=time.perf_counter() - start,
    )


def stabilization_check(dim: int, bound: int, jobs: int = 1) -> bool:
    """True iff the accepted set is unchanged when the bound doubles."""
    return (
        classify(dim, bound, jobs).accepted
        == classify(dim, 2 * bound, jobs).accepted
    )


def end_summary(ws: tuple[int, ...], dim: int) -> tuple[str, tuple[int, ...]]:
    """(end kind, end-model weight multiset) for an accepted tuple."""
    result = build_link(ws, dim)
    if not isinstance(result, Link):
        raise ValueError(f"{ws} does not initiate a link")
    if isinstance(result.end, DivContraction):
        return "divisorial_contraction", result.end.target_weights
    return "fibration", result.end.fiber_weights
