"""Zero forcing color change rule: closures, force lists, forcing chains.

A colored vertex with exactly one uncolored neighbor forces that neighbor.
All functions are pure; vertex sets are int bitmasks as in :mod:`.graphs`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, vertices_of


def _sweep_closure(adj: Sequence[int], colored: int) -> int:
    """Fixpoint of the color change rule by repeated full sweeps."""
    while True:
        new = colored
        rem = colored
        while rem:
            b = rem & -rem
            rem ^= b
            unc = adj[b.bit_length() - 1] & ~colored
            if unc and not (unc & (unc - 1)):
                new |= unc
        if new == colored:
            return colored
        colored = new


def _closure_table(adj: Sequence[int], n: int) -> list[int]:
    """Closure of every subset at once.

    Masks are processed in decreasing order; applying any one force and
    looking up the (already computed) closure of the larger set is valid
    because the rule is confluent.
    """
    full = (1 << n) - 1
    table = [0] * (full + 1)
    table[full] = full
    for mask in range(full - 1, -1, -1):
        res = mask
        rem = mask
        while rem:
            b = rem & -rem
            rem ^= b
            unc = adj[b.bit_length() - 1] & ~mask
            if unc and not (unc & (unc - 1)):
                res = table[mask | unc]
                break
        table[mask] = res
    return table


def _check_subset(g: Graph, colored: int) -> None:
    if colored & ~g.vertex_mask:
        raise ValueError("colored set contains vertices outside the graph")


def closure(g: Graph, colored: int) -> int:
    """Set of colored vertices once no further force is possible."""
    _check_subset(g, colored)
    return _sweep_closure(g.adj, colored)


def closure_table(g: Graph) -> list[int]:
    """List mapping every subset mask to its closure; index by subset."""
    return _closure_table(g.adj, g.n)


def is_zero_forcing_set(g: Graph, colored: int) -> bool:
    """True iff the closure of the set is the whole vertex set."""
    _check_subset(g, colored)
    return _sweep_closure(g.adj, colored) == g.vertex_mask


@dataclass(frozen=True)
class ForceRecord:
    """A replayable chronological list of forces starting from an initial set."""

    initial: int
    forces: tuple[tuple[int, int], ...]
    closure: int

    def to_json_dict(self) -> dict:
        return {
            "initial": vertices_of(self.initial),
            "forces": [[u, v] for u, v in self.forces],
            "closure": vertices_of(self.closure),
        }


def chronological_forces(g: Graph, colored: int) -> ForceRecord:
    """Deterministic force list reaching the closure.

    Tie-break: at every step the applicable force with the smallest
    (forcer, forced) pair is performed.
    """
    _check_subset(g, colored)
    adj = g.adj
    state = colored
    forces: list[tuple[int, int]] = []
    while True:
        step = None
        for u in range(g.n):
            if (state >> u) & 1:
                unc = adj[u] & ~state
                if unc and not (unc & (unc - 1)):
                    step = (u, unc.bit_length() - 1)
                    break
        if step is None:
            break
        forces.append(step)
        state |= 1 << step[1]
    return ForceRecord(colored, tuple(forces), state)


def forcing_chains(record: ForceRecord) -> list[tuple[int, ...]]:
    """Partition the closure into maximal chains of consecutive forces.

    Each chain starts at an initially colored vertex and ends at a terminal
    vertex; initial vertices that never force give chains of length zero.
    Chains are ordered by their starting vertex.
    """
    successor = dict(record.forces)
    if len(successor) != len(record.forces):
        raise ValueError("a vertex forces more than once in the record")
    chains = []
    for head in vertices_of(record.initial):
        chain = [head]
        while chain[-1] in successor:
            chain.append(successor[chain[-1]])
        chains.append(tuple(chain))
    return chains
