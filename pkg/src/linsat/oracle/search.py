"""Isomorph-free exhaustive search for linear saturation and extremal numbers.

Generation is by canonical augmentation over edges: a hypergraph C with
at least one edge is accepted as a child of P = C - e only when e lies in
the same automorphism orbit as C's canonical deletion edge (the edge that
lands last in C's canonical encoding). Each isomorphism class therefore
has exactly one accepted parent class, and within one parent isomorphic
children are collapsed by their canonical form.
"""

from __future__ import annotations

import os
import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..errors import BudgetExceeded, HypergraphError
from ..hypercore import Edge, LinearHypergraph, candidate_edges
from ..saturation import cycle_through, is_saturated
from .canonical import canonical_form


@dataclass
class Budget:
    max_seconds: float | None = None
    max_nodes: int | None = None


@dataclass
class SearchResult:
    optimum: int | None
    witness: LinearHypergraph | None
    explored: int
    exhausted: bool


class _Meter:
    def __init__(self, budget: Budget | None):
        self.budget = budget or Budget()
        self.start = time.monotonic()
        self.nodes = 0

    def charge(self, nodes: int):
        self.nodes += nodes
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExceeded(f"node budget {b.max_nodes} exhausted")
        if b.max_seconds is not None and time.monotonic() - self.start > b.max_seconds:
            raise BudgetExceeded(f"time budget {b.max_seconds}s exhausted")


def _deletion_edge(C: LinearHypergraph, form) -> Edge:
    pos = form.labeling
    return max(C.edges, key=lambda e: sorted(pos[v] for v in e))


def _children(args) -> list[tuple[Edge, ...]]:
    """Accepted children of one parent, as edge lists, in deterministic order."""
    n, k, edges, t = args
    P = LinearHypergraph(range(n), k, edges)
    seen = {}
    for e in candidate_edges(P):
        if t is not None and cycle_through(P, e, t) is not None:
            continue
        C = P.add_edge(e)
        form = canonical_form(C)
        star = _deletion_edge(C, form)
        if star != e and canonical_form(C, e).key != canonical_form(C, star).key:
            continue
        key = form.key
        if key not in seen:
            seen[key] = C.edges
    return [seen[key] for key in sorted(seen)]


def _levels(n: int, k: int, t: int | None, max_edges: int | None, meter: _Meter, workers: int) -> Iterator[list[LinearHypergraph]]:
    if n < 0 or k < 2:
        raise HypergraphError(f"invalid parameters n={n}, k={k}")
    level = [LinearHypergraph(range(n), k)]
    meter.charge(1)
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        m = 0
        while level:
            yield level
            if max_edges is not None and m >= max_edges:
                return
            tasks = [(n, k, H.edges, t) for H in level]
            if pool is None:
                results = []
                for task in tasks:
                    results.append(_children(task))
                    meter.charge(len(results[-1]))
            else:
                results = list(pool.map(_children, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
                meter.charge(sum(map(len, results)))
            level = [LinearHypergraph(range(n), k, edges) for batch in results for edges in batch]
            m += 1
    finally:
        if pool is not None:
            pool.shutdown()


def enumerate_free(
    n: int,
    k: int,
    t: int | None,
    max_edges: int | None = None,
    budget: Budget | None = None,
    workers: int = 1,
) -> Iterator[LinearHypergraph]:
    """One representative per isomorphism class of Berge-C_t-free linear
    k-graphs on n vertices with at most ``max_edges`` edges, by edge count.

    ``t=None`` drops the cycle restriction and enumerates all linear k-graphs.
    """
    meter = _Meter(budget)
    for level in _levels(n, k, t, max_edges, meter, workers):
        yield from level


def _default_workers(workers):
    return workers if workers is not None else 1


def brute_force_sat(n: int, k: int, t: int, budget: Budget | None = None, workers: int | None = None) -> SearchResult:
    """Minimum edge count of a linear Berge-C_t-saturated k-graph on n vertices.

    Levels are scanned upward from zero edges; no bound is assumed, so the
    result can be compared against closed-form lower bounds. The witness is
    the first saturated class in canonical order.
    """
    meter = _Meter(budget)
    explored = 0
    try:
        for m, level in enumerate(_levels(n, k, t, None, meter, _default_workers(workers))):
            for H in level:
                explored += 1
                if is_saturated(H, t).saturated:
                    return SearchResult(m, H, explored, True)
                meter.charge(0)
    except BudgetExceeded as exc:
        exc.partial = SearchResult(None, None, explored, False)
        raise
    raise AssertionError("an edge-maximal Berge-C_t-free hypergraph is always saturated")


def brute_force_ex(n: int, k: int, t: int, budget: Budget | None = None, workers: int | None = None) -> SearchResult:
    """Maximum edge count of a Berge-C_t-free linear k-graph on n vertices.

    An edge-maximal free hypergraph is automatically saturated, so this is
    also the maximum over saturated hypergraphs.
    """
    meter = _Meter(budget)
    explored = 0
    best_m, best = None, None
    try:
        for m, level in enumerate(_levels(n, k, t, None, meter, _default_workers(workers))):
            explored += len(level)
            best_m, best = m, level[0]
    except BudgetExceeded as exc:
        exc.partial = SearchResult(best_m, best, explored, False)
        raise
    return SearchResult(best_m, best, explored, True)


def saturated_classes(n: int, k: int, t: int, max_edges: int | None = None, budget: Budget | None = None):
    """Every saturated class (one representative each) with at most ``max_edges`` edges."""
    for H in enumerate_free(n, k, t, max_edges, budget):
        if is_saturated(H, t).saturated:
            yield H


def available_workers() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
