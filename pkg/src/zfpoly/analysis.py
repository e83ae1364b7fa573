"""Structural checks on zero forcing polynomials.

Extremal coefficient formulas, the all-minimum-sets characterization,
coefficient monotonicity, recognizability of families, and the equivalence
class of graphs sharing a cycle's polynomial.
"""
from __future__ import annotations

import itertools
from math import comb
from multiprocessing import Pool

from .closed_forms import poly_complete, poly_cycle, poly_path, poly_threshold
from .forcing import _closure_table
from .graphs import (
    Graph,
    edge_pair_order,
    graph_from_edge_mask,
    is_connected,
    is_isomorphic,
)
from .polynomial import ZfPolynomial, zf_polynomial


def is_path_graph(g: Graph) -> bool:
    """Structural path test: connected, max degree <= 2, exactly two ends."""
    if g.n == 0:
        return False
    if g.n == 1:
        return True
    degs = g.degrees()
    if max(degs) > 2:
        return False
    if sum(1 for d in degs if d <= 1) != 2:
        return False
    return is_connected(g)


def extremal_coefficients(g: Graph) -> tuple[int, int, int, int]:
    """The four characterized coefficients (sizes n, n-1, n-2, 1), computed
    from graph structure rather than by enumeration.

    Size n: only the full set.  Size n-1: one non-isolated vertex may be
    dropped.  Size n-2: a pair may be dropped iff both are non-isolated and
    their punctured neighborhoods differ.  Size 1: paths have two
    single-vertex forcing sets (one when n = 1), everything else none.
    """
    n = g.n
    if n < 1:
        raise ValueError("requires a nonempty graph")
    second = sum(1 for v in range(n) if g.adj[v])
    third = 0
    for u in range(n):
        if not g.adj[u]:
            continue
        for v in range(u + 1, n):
            if not g.adj[v]:
                continue
            if g.adj[u] & ~(1 << v) != g.adj[v] & ~(1 << u):
                third += 1
    if n == 1:
        z1 = 1
    elif is_path_graph(g):
        z1 = 2
    else:
        z1 = 0
    return 1, second, third, z1


def all_min_sets_forcing(g: Graph) -> bool:
    """True iff every set of size Z(G) is a zero forcing set."""
    if g.n < 1:
        raise ValueError("requires a nonempty graph")
    poly = zf_polynomial(g)
    z = poly.zero_forcing_number()
    return poly.coeffs[z] == comb(g.n, z)


def _hall_ok(coeffs: tuple[int, ...], n: int) -> bool:
    return all(coeffs[i] <= coeffs[i + 1] for i in range(1, (n - 1) // 2 + 1) if 2 * i < n)


def hall_monotonicity_holds(g: Graph) -> bool:
    """Coefficient i never exceeds coefficient i+1 for 1 <= i < n/2."""
    poly = zf_polynomial(g)
    return _hall_ok(poly.coeffs, g.n)


def path_bound_holds(g: Graph) -> bool:
    """Every coefficient is at most the path's coefficient of the same size."""
    if g.n < 1:
        raise ValueError("requires a nonempty graph")
    poly = zf_polynomial(g)
    bound = poly_path(g.n)
    return all(a <= b for a, b in zip(poly.coeffs, bound.coeffs))


def recognizes_path(p: ZfPolynomial) -> bool:
    """True iff p is the polynomial of the path on p.n vertices."""
    return p.n >= 1 and p == poly_path(p.n)


def recognizes_complete(p: ZfPolynomial) -> bool:
    """True iff p is the polynomial of the complete graph on p.n vertices."""
    return p.n >= 1 and p == poly_complete(p.n)


# ---------------------------------------------------------------------------
# Graphs sharing a cycle's polynomial


def _cycle_match_worker(args: tuple[int, int, int]) -> list[int]:
    """Edge masks in [lo, hi) whose polynomial equals the n-cycle's."""
    n, lo, hi = args
    target = poly_cycle(n).coeffs
    pairs = edge_pair_order(n)
    full = (1 << n) - 1
    matches = []
    for emask in range(lo, hi):
        adj = [0] * n
        m = emask
        while m:
            b = m & -m
            m ^= b
            u, v = pairs[b.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        # cheap rejects first: the top three coefficients are structural
        if any(not a for a in adj):
            continue  # an isolated vertex forces coefficient n-1 below n
        third = 0
        for u in range(n):
            au = adj[u]
            for v in range(u + 1, n):
                if au & ~(1 << v) != adj[v] & ~(1 << u):
                    third += 1
        if third != target[n - 2]:
            continue
        table = _closure_table(adj, n)
        coeffs = [0] * (n + 1)
        for mask in range(full + 1):
            if table[mask] == full:
                coeffs[mask.bit_count()] += 1
        if tuple(coeffs) == target:
            matches.append(emask)
    return matches


def cycle_polynomial_class(n: int, jobs: int = 1) -> list[Graph]:
    """Isomorphism-class representatives of all n-vertex graphs whose
    polynomial equals the n-cycle's, by exhaustive labeled sweep."""
    if not 3 <= n <= 7:
        raise ValueError("cycle polynomial class sweep supports 3 <= n <= 7")
    total = 1 << (n * (n - 1) // 2)
    if jobs > 1:
        step = max(1, total // (jobs * 8))
        ranges = [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
        with Pool(jobs) as pool:
            chunks = pool.map(_cycle_match_worker, ranges)
        matches = [e for chunk in chunks for e in chunk]
    else:
        matches = _cycle_match_worker((n, 0, total))
    reps: list[Graph] = []
    fingerprints: list[tuple] = []
    for emask in matches:
        g = graph_from_edge_mask(n, emask)
        fp = tuple(sorted(g.degrees()))
        new = True
        for rep, rep_fp in zip(reps, fingerprints):
            if fp == rep_fp and is_isomorphic(g, rep):
                new = False
                break
        if new:
            reps.append(g)
            fingerprints.append(fp)
    return reps


def same_poly_threshold_family(k: int) -> list[tuple[str, ZfPolynomial]]:
    """Threshold strings with 1-blocks of sizes 2..k (every order) separated by
    0-blocks of size 2, with their polynomials; all polynomials agree."""
    if not 3 <= k <= 5:
        raise ValueError("threshold family sweep supports 3 <= k <= 5")
    out = []
    for perm in itertools.permutations(range(2, k + 1)):
        b = "00".join("1" * s for s in perm)
        out.append((b, poly_threshold(b)))
    return out
