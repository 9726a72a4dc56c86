"""Every proved bound as a pure formula behind its hypothesis gate.

Bound values are exact rationals and are never floored; equality
detection compares Fractions. A graph failing a gate yields a
not-applicable report, never a vacuous pass. A violated bound in a
report signals an implementation bug (all bounds are proven) and is
surfaced through ``satisfied=False``, never dropped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .graph import Graph, GraphError
from .records import InvariantRecord, compute_record


class BoundId(enum.Enum):
    """Identifies one proved inequality (see README for the formulas)."""

    LOWER_DEG = "LOWER_DEG"    # F_k >= min_degree - k + 1
    MAIN = "MAIN"              # F_k <= (D-k+1)n / (D-k+1+min(d,k))
    KCOR = "KCOR"              # F_k <= (D-k+1)n / (D+1), d >= k
    RATIO = "RATIO"            # F_1 <= Dn/(D+1)
    CONN_KDOM = "CONN_KDOM"    # F_k <= n - gamma_{k,c}, k-connected
    CONN_DOM = "CONN_DOM"      # F_1 <= n - gamma_c, connected
    MAIN2 = "MAIN2"            # F_k <= ((D-2)n+2)/(D+k-2), k-connected
    COR3 = "COR3"              # F_1 <= ((D-2)n+2)/(D-1), connected
    CHAIN = "CHAIN"            # n - gamma_c <= ((D-2)n+2)/(D-1)
    GAMMA_LOWER = "GAMMA_LOWER"  # gamma_c >= (n-2)/(D-1)
    HAM_CHORDS = "HAM_CHORDS"  # F_1 <= t + 1, Hamiltonian with t >= 1 chords
    HAM_CUBIC = "HAM_CUBIC"    # F_1 <= n_3/2 + 1, Hamiltonian, D = 3
    CYCLE_TREE = "CYCLE_TREE"  # F_1 <= 2q for cycle-trees
    TREE_LEAF = "TREE_LEAF"    # ceil(n_1/2) <= F_1 <= n_1 - 1 for trees
    TREE_COR = "TREE_COR"      # F_1 <= ((D-2)n+2)/(D-1) - 1 for trees
    K1R = "K1R"                # F_{k(r-1)} <= n - alpha_k, K_{1,r}-free
    K1R_ALPHA = "K1R_ALPHA"    # F_{r-1} <= n - alpha_1, K_{1,r}-free
    CLAWFREE = "CLAWFREE"      # F_{2k} <= n - alpha_k, claw-free

    @property
    def order(self) -> int:
        return list(BoundId).index(self)


ALL_BOUNDS = tuple(BoundId)


class MissingInvariantError(GraphError):
    """The invariant record lacks a field a bound needs at this k."""


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one bound check on one graph.

    ``side`` says whether the formula bounds the exact quantity from
    above or below; slack is non-negative whenever the inequality holds.
    """

    graph_id: str | int | None
    k: int
    bound: BoundId
    side: str  # "upper" | "lower"
    applicable: bool
    bound_value: Fraction | None = None
    exact_value: int | None = None
    slack: Fraction | None = None
    equality: bool | None = None
    satisfied: bool | None = None
    detail: tuple[tuple[str, int], ...] = field(default_factory=tuple)


def _forcing(rec: InvariantRecord, index: int) -> int:
    try:
        return rec.forcing[index]
    except KeyError:
        raise MissingInvariantError(
            f"record lacks the forcing number at index {index}"
        ) from None


def _k_connected(rec: InvariantRecord, k: int) -> bool:
    try:
        return rec.k_connected[k]
    except KeyError:
        raise MissingInvariantError(
            f"record lacks the {k}-connectivity flag"
        ) from None


def _checks(bound: BoundId, k: int, rec: InvariantRecord):
    """Yield (side, bound value, exact value, detail) for applicable checks."""
    n, dmax, dmin = rec.n, rec.max_degree, rec.min_degree

    if bound is BoundId.LOWER_DEG:
        yield "lower", Fraction(dmin - k + 1), _forcing(rec, k), ()

    elif bound is BoundId.MAIN:
        if n >= 2 and dmax >= k and dmin >= 1:
            val = Fraction((dmax - k + 1) * n, dmax - k + 1 + min(dmin, k))
            yield "upper", val, _forcing(rec, k), ()

    elif bound is BoundId.KCOR:
        if n >= 2 and dmin >= k:
            yield "upper", Fraction((dmax - k + 1) * n, dmax + 1), _forcing(rec, k), ()

    elif bound is BoundId.RATIO:
        if k == 1 and dmin >= 1:
            yield "upper", Fraction(dmax * n, dmax + 1), _forcing(rec, 1), ()

    elif bound is BoundId.CONN_KDOM:
        if _k_connected(rec, k):
            gkc = rec.gamma_kc.get(k)
            if gkc is None:
                raise MissingInvariantError(
                    f"record lacks the connected {k}-domination number"
                )
            yield "upper", Fraction(n - gkc), _forcing(rec, k), ()

    elif bound is BoundId.CONN_DOM:
        if k == 1 and rec.connected and n >= 2:
            yield "upper", Fraction(n - rec.gamma_c), _forcing(rec, 1), ()

    elif bound is BoundId.MAIN2:
        if _k_connected(rec, k) and dmax >= 2:
            val = Fraction((dmax - 2) * n + 2, dmax + k - 2)
            yield "upper", val, _forcing(rec, k), ()

    elif bound is BoundId.COR3:
        if k == 1 and rec.connected and dmax >= 2:
            yield "upper", Fraction((dmax - 2) * n + 2, dmax - 1), _forcing(rec, 1), ()

    elif bound is BoundId.CHAIN:
        if k == 1 and rec.connected and dmax >= 2:
            val = Fraction((dmax - 2) * n + 2, dmax - 1)
            yield "upper", val, n - rec.gamma_c, ()

    elif bound is BoundId.GAMMA_LOWER:
        if k == 1 and rec.connected and dmax >= 2:
            yield "lower", Fraction(n - 2, dmax - 1), rec.gamma_c, ()

    elif bound is BoundId.HAM_CHORDS:
        if k == 1 and rec.hamiltonian and rec.chord_count >= 1 and n >= 4:
            t = rec.chord_count
            yield "upper", Fraction(t + 1), _forcing(rec, 1), (("chords", t),)

    elif bound is BoundId.HAM_CUBIC:
        if k == 1 and rec.hamiltonian and dmax == 3 and rec.degree3_count >= 2:
            val = Fraction(rec.degree3_count, 2) + 1
            yield "upper", val, _forcing(rec, 1), (("degree3", rec.degree3_count),)

    elif bound is BoundId.CYCLE_TREE:
        if k == 1 and rec.cycle_tree_q is not None:
            q = rec.cycle_tree_q
            yield "upper", Fraction(2 * q), _forcing(rec, 1), (("cycles", q),)

    elif bound is BoundId.TREE_LEAF:
        if k == 1 and rec.tree and n >= 2:
            f1 = _forcing(rec, 1)
            yield "lower", Fraction((rec.leaf_count + 1) // 2), f1, ()
            yield "upper", Fraction(rec.leaf_count - 1), f1, ()

    elif bound is BoundId.TREE_COR:
        if k == 1 and rec.tree and dmax >= 2:
            val = Fraction((dmax - 2) * n + 2, dmax - 1) - 1
            yield "upper", val, _forcing(rec, 1), ()

    elif bound is BoundId.K1R:
        if dmin >= 1:
            r = rec.star_free_index
            idx = k * (r - 1)
            val = Fraction(n - rec.alpha[k])
            yield "upper", val, _forcing(rec, idx), (("r", r), ("index", idx))

    elif bound is BoundId.K1R_ALPHA:
        if k == 1 and dmin >= 1:
            r = rec.star_free_index
            val = Fraction(n - rec.alpha[1])
            yield "upper", val, _forcing(rec, r - 1), (("r", r), ("index", r - 1))

    elif bound is BoundId.CLAWFREE:
        if dmin >= 1 and rec.star_free_index == 3:
            val = Fraction(n - rec.alpha[k])
            yield "upper", val, _forcing(rec, 2 * k), (("index", 2 * k),)

    else:  # pragma: no cover
        raise AssertionError(f"unhandled bound {bound}")


def bound_value(
    bound: BoundId, g: Graph, k: int, rec: InvariantRecord, side: str | None = None
) -> Fraction | None:
    """The exact rational bound value, or None when hypotheses fail.

    ``side`` selects the direction for the one two-sided bound
    (TREE_LEAF); by default the first applicable direction is returned.
    """
    if g.n != rec.n:
        raise MissingInvariantError("record does not match the graph")
    for got_side, value, _, _ in _checks(bound, k, rec):
        if side is None or got_side == side:
            return value
    return None


def evaluate_bounds(
    g: Graph,
    ks: Sequence[int],
    ids: Sequence[BoundId] = ALL_BOUNDS,
    graph_id: str | int | None = None,
    rec: InvariantRecord | None = None,
) -> list[BoundReport]:
    """Evaluate bounds against exact values; one report per check.

    Reports come out sorted by k, then bound id (declaration order),
    then side. TREE_LEAF contributes a lower and an upper report.
    """
    if rec is None:
        rec = compute_record(g, ks)
    reports = []
    for k in sorted(set(ks)):
        for bound in ids:
            produced = False
            for side, value, exact, detail in _checks(bound, k, rec):
                produced = True
                slack = value - exact if side == "upper" else Fraction(exact) - value
                reports.append(
                    BoundReport(
                        graph_id=graph_id,
                        k=k,
                        bound=bound,
                        side=side,
                        applicable=True,
                        bound_value=value,
                        exact_value=exact,
                        slack=slack,
                        equality=slack == 0,
                        satisfied=slack >= 0,
                        detail=detail,
                    )
                )
            if not produced:
                reports.append(
                    BoundReport(
                        graph_id=graph_id,
                        k=k,
                        bound=bound,
                        side="upper" if bound not in _LOWER_ONLY else "lower",
                        applicable=False,
                    )
                )
    return reports


_LOWER_ONLY = frozenset({BoundId.LOWER_DEG, BoundId.GAMMA_LOWER})


@dataclass(frozen=True)
class ComparisonReport:
    """Exact comparison of the two general upper bounds at one k."""

    k: int
    general_value: Fraction       # MAIN
    connected_value: Fraction     # MAIN2
    tighter: str                  # "MAIN" | "MAIN2" | "tie"
    improvement_asserted: bool    # MAIN2 <= MAIN is claimed for this input


def comparison_main2_vs_main(
    g: Graph, k: int, rec: InvariantRecord | None = None
) -> ComparisonReport:
    """Compare MAIN2 against MAIN for one graph and k.

    MAIN2 is claimed to improve on MAIN for k-connected graphs with
    min degree >= k and k <= 2; for k >= 3 the comparison is
    informational only. Requires both bounds applicable.
    """
    if rec is None:
        rec = compute_record(g, [k])
    main = bound_value(BoundId.MAIN, g, k, rec)
    main2 = bound_value(BoundId.MAIN2, g, k, rec)
    if main is None or main2 is None:
        raise GraphError("both bounds must be applicable for the comparison")
    if main2 < main:
        tighter = "MAIN2"
    elif main < main2:
        tighter = "MAIN"
    else:
        tighter = "tie"
    asserted = _k_connected(rec, k) and rec.min_degree >= k and k <= 2
    return ComparisonReport(
        k=k,
        general_value=main,
        connected_value=main2,
        tighter=tighter,
        improvement_asserted=asserted,
    )
