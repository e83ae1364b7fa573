"""Forts and the fort-cover formulation of the zero forcing number.

A fort is a nonempty vertex set F such that no vertex outside F has exactly
one neighbor in F.  Every zero forcing set meets every fort, and the minimum
fort transversal has size Z(G); the exact hitting-set solver below realizes
that integer program.
"""
from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import binom
from .graphs import Graph, SizeCapError, vertices_of
from .polynomial import ZfPolynomial, enumeration_cap, zf_polynomial

FORT_COUNT_BOUND_MAX = 20


@dataclass(frozen=True)
class FortFamily:
    """All forts of a graph, sorted by (size, mask) and duplicate-free."""

    n: int
    forts: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "forts": [vertices_of(f) for f in self.forts]}


def is_fort(g: Graph, mask: int) -> bool:
    """True iff mask is nonempty and no outside vertex sees exactly one member."""
    if mask & ~g.vertex_mask:
        raise ValueError("fort candidate has vertices outside the graph")
    if not mask:
        return False
    outside = g.vertex_mask & ~mask
    while outside:
        b = outside & -outside
        outside ^= b
        inside = g.adj[b.bit_length() - 1] & mask
        if inside and not (inside & (inside - 1)):
            return False
    return True


def _fort_masks(adj: tuple[int, ...], n: int) -> list[int]:
    full = (1 << n) - 1
    out = []
    for mask in range(1, full + 1):
        outside = full & ~mask
        ok = True
        while outside:
            b = outside & -outside
            outside ^= b
            inside = adj[b.bit_length() - 1] & mask
            if inside and not (inside & (inside - 1)):
                ok = False
                break
        if ok:
            out.append(mask)
    out.sort(key=lambda m: (m.bit_count(), m))
    return out


def enumerate_forts(g: Graph) -> FortFamily:
    """All forts by full subset scan."""
    cap = enumeration_cap()
    if g.n > cap:
        raise SizeCapError(f"fort enumeration over {g.n} vertices exceeds cap {cap}")
    return FortFamily(g.n, tuple(_fort_masks(g.adj, g.n)))


# ---------------------------------------------------------------------------
# Exact minimum hitting set (branch and bound)


def _greedy_cover(forts: list[int], n: int) -> int:
    """Greedy incumbent: repeatedly take the vertex hitting most uncovered forts."""
    chosen = 0
    uncovered = list(forts)
    while uncovered:
        best_v, best_hits = -1, -1
        for v in range(n):
            bit = 1 << v
            hits = sum(1 for f in uncovered if f & bit)
            if hits > best_hits:
                best_v, best_hits = v, hits
        chosen |= 1 << best_v
        uncovered = [f for f in uncovered if not (f >> best_v) & 1]
    return chosen


def _packing_bound(uncovered: list[int], allowed: int) -> int:
    """Count of pairwise-disjoint uncovered forts, restricted to allowed vertices."""
    taken = 0
    count = 0
    for f in uncovered:
        cand = f & allowed
        if cand and not (cand & taken):
            taken |= cand
            count += 1
    return count


class _HittingSetSearch:
    """Fail-first branch and bound over forts.

    Branches on the uncovered fort with fewest remaining candidate vertices;
    a fort reduced to one candidate forces that vertex.  Sibling branches
    exclude previously tried candidates, so the enumeration is exact.
    """

    def __init__(self, forts: list[int], n: int, limit: int | None = None):
        self.forts = forts
        self.n = n
        if limit is not None:
            self.best_size = limit + 1
            self.best_mask: int | None = None
        else:
            greedy = _greedy_cover(forts, n)
            self.best_size = greedy.bit_count()
            self.best_mask = greedy

    def _dfs(self, chosen: int, count: int, excluded: int, uncovered: list[int]) -> None:
        if not uncovered:
            if count < self.best_size:
                self.best_size = count
                self.best_mask = chosen
            return
        allowed = ~excluded
        if count + _packing_bound(uncovered, allowed) >= self.best_size:
            return
        pivot_cand, pivot_width = 0, self.n + 1
        for f in uncovered:
            cand = f & allowed
            width = cand.bit_count()
            if width == 0:
                return  # some fort can no longer be hit
            if width < pivot_width:
                pivot_cand, pivot_width = cand, width
                if width == 1:
                    break
        cand = pivot_cand
        while cand:
            bit = cand & -cand
            cand ^= bit
            rest = [f for f in uncovered if not f & bit]
            self._dfs(chosen | bit, count + 1, excluded, rest)
            excluded |= bit

    def run(self) -> tuple[int, int | None]:
        self._dfs(0, 0, 0, self.forts)
        return self.best_size, self.best_mask


def _min_hitting_set_size(forts: list[int], n: int) -> int:
    if not forts:
        return 0
    size, _ = _HittingSetSearch(forts, n).run()
    return size


def _completable(forts: list[int], n: int, chosen: int, excluded: int, budget: int) -> bool:
    """Is there a hitting set of total size <= budget extending chosen/excluded?"""
    uncovered = [f for f in forts if not f & chosen]
    if not uncovered:
        return True
    remaining = budget - chosen.bit_count()
    if remaining <= 0:
        return False
    search = _HittingSetSearch(uncovered, n, limit=remaining)
    search._dfs(0, 0, excluded, uncovered)
    return search.best_mask is not None


def min_fort_cover(g: Graph) -> tuple[int, int]:
    """Minimum-size transversal of all forts: (size, witness mask).

    Among optimal witnesses, the one whose sorted vertex list is
    lexicographically smallest is returned.
    """
    family = enumerate_forts(g)
    forts = list(family.forts)
    if not forts:
        return 0, 0
    size = _min_hitting_set_size(forts, g.n)
    chosen = 0
    excluded = 0
    for v in range(g.n):
        bit = 1 << v
        if _completable(forts, g.n, chosen | bit, excluded, size):
            chosen |= bit
            if chosen.bit_count() == size:
                break
        else:
            excluded |= bit
    return size, chosen


def fort_count_bound_holds(g: Graph) -> tuple[int, int, bool]:
    """Compare the fort count against 2^n minus the number of zero forcing sets."""
    if g.n > FORT_COUNT_BOUND_MAX:
        raise SizeCapError(f"fort count bound check capped at {FORT_COUNT_BOUND_MAX} vertices")
    lhs = len(enumerate_forts(g).forts)
    total_zfs = int(zf_polynomial(g).evaluate(1))
    rhs = (1 << g.n) - total_zfs
    return lhs, rhs, lhs <= rhs


def small_fort_coefficient_bound(g: Graph) -> list[tuple[int, int, int, bool]] | None:
    """Per-size comparison z(G;i) <= C(n,i) - C(n-i-1,i) when a small fort exists.

    Applies when some fort has size at most Z(G)+1; returns None otherwise.
    Rows are (i, coefficient, bound, holds).
    """
    family = enumerate_forts(g)
    poly = zf_polynomial(g)
    if g.n == 0 or not family.forts:
        return None
    z = poly.zero_forcing_number()
    smallest = min(f.bit_count() for f in family.forts)
    if smallest > z + 1:
        return None
    rows = []
    for i in range(1, g.n + 1):
        bound = binom(g.n, i) - binom(g.n - i - 1, i)
        rows.append((i, poly.coeffs[i], bound, poly.coeffs[i] <= bound))
    return rows
