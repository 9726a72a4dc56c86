"""Bundled exact invariant values for one graph.

:func:`compute_record` runs every exact solver a bounds campaign
needs (degree profile, forcing numbers, domination, independence,
Hamiltonicity, cycle-tree shape, star-freeness) and freezes the
results in an :class:`InvariantRecord`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .forcing import k_forcing_number
from .graph import Graph, GraphError, components, degree_profile
from .invariants import (
    ExactScopeError,
    connected_k_domination,
    hamiltonian_cycle,
    is_cycle_tree,
    k_independence_number,
    min_star_free_index,
    path_cover_number,
    vertex_k_connected,
)

DEFAULT_MAX_N = 12


@dataclass(frozen=True)
class InvariantRecord:
    """Exact invariant values for one graph.

    Dict-valued fields are keyed by the forcing/domination index they
    were computed at. ``forcing`` always covers any extra indices the
    star-freeness bounds need (k(r-1), 2k, r-1).
    """

    n: int
    m: int
    max_degree: int
    min_degree: int
    leaf_count: int
    degree_histogram: Mapping[int, int]
    component_count: int
    connected: bool
    tree: bool
    forcing: Mapping[int, int]
    gamma_c: int | None
    gamma_kc: Mapping[int, int | None]
    alpha: Mapping[int, int]
    k_connected: Mapping[int, bool]
    hamiltonian: bool
    chord_count: int | None
    cycle_tree_q: int | None
    star_free_index: int
    path_cover: int | None = None
    ks: tuple[int, ...] = field(default_factory=tuple)

    @property
    def degree3_count(self) -> int:
        return self.degree_histogram.get(3, 0)


def compute_record(
    g: Graph, ks: Sequence[int], max_n: int = DEFAULT_MAX_N
) -> InvariantRecord:
    """Compute every invariant the bound formulas and gates consume."""
    if g.n < 1:
        raise GraphError("invariants undefined for the empty graph")
    if g.n > max_n:
        raise ExactScopeError(f"exact invariants capped at n={max_n}, got {g.n}")
    ks = tuple(sorted(set(ks)))
    if any(k < 1 for k in ks):
        raise ValueError(f"forcing indices must be positive: {ks}")

    max_deg, min_deg, leaves, hist = degree_profile(g)
    comp_count = len(components(g))
    connected = comp_count == 1
    tree = connected and g.m == g.n - 1

    r = min_star_free_index(g)
    forcing_ks = set(ks) | {1}
    for k in ks:
        forcing_ks.add(k * (r - 1))
        forcing_ks.add(2 * k)
    forcing_ks.add(r - 1)
    forcing = {k: k_forcing_number(g, k).value for k in sorted(forcing_ks)}

    gamma_kc: dict[int, int | None] = {}
    for k in set(ks) | {1}:
        res = connected_k_domination(g, k)
        gamma_kc[k] = res[0] if res else None
    alpha = {k: k_independence_number(g, k)[0] for k in set(ks) | {1}}
    k_conn = {k: vertex_k_connected(g, k) for k in ks}

    ham = hamiltonian_cycle(g) if g.n >= 3 else None
    cycle_tree, q = is_cycle_tree(g)
    pc = path_cover_number(g)[0] if tree else None

    return InvariantRecord(
        n=g.n,
        m=g.m,
        max_degree=max_deg,
        min_degree=min_deg,
        leaf_count=leaves,
        degree_histogram=dict(hist),
        component_count=comp_count,
        connected=connected,
        tree=tree,
        forcing=forcing,
        gamma_c=gamma_kc[1],
        gamma_kc=gamma_kc,
        alpha=alpha,
        k_connected=k_conn,
        hamiltonian=ham is not None,
        chord_count=(g.m - g.n) if ham is not None else None,
        cycle_tree_q=q if cycle_tree else None,
        star_free_index=r,
        path_cover=pc,
        ks=ks,
    )
