"""Closed-form zero forcing polynomials for the standard families.

Complete graphs, complete multipartite graphs, paths, cycles, wheels (via
inclusion-exclusion over consecutive runs of a cycle), and threshold graphs
(via a block-index expansion over the generating string).
"""
from __future__ import annotations

from math import comb

from .graphs import BlockPartition, block_partition
from .polynomial import ZfPolynomial


def binom(a: int, b: int) -> int:
    """Binomial coefficient extended to 0 for b > a and any negative argument."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def poly_complete(n: int) -> ZfPolynomial:
    """x^n + n*x^(n-1); a single vertex gives x."""
    if n < 1:
        raise ValueError("complete graph polynomial requires n >= 1")
    if n == 1:
        return ZfPolynomial(1, (0, 1))
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    coeffs[n - 1] = n
    return ZfPolynomial(n, tuple(coeffs))


def poly_multipartite(parts: list[int]) -> ZfPolynomial:
    """Complete multipartite polynomial; valid only when every part has size >= 2."""
    if len(parts) < 2:
        raise ValueError("need at least 2 parts")
    if any(a < 2 for a in parts):
        raise ValueError("every part must have size >= 2")
    n = sum(parts)
    cross = 0
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            cross += parts[i] * parts[j]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    coeffs[n - 1] = n
    coeffs[n - 2] = cross
    return ZfPolynomial(n, tuple(coeffs))


def poly_path(n: int) -> ZfPolynomial:
    """Coefficient i is C(n,i) - C(n-i-1,i)."""
    if n < 1:
        raise ValueError("path polynomial requires n >= 1")
    coeffs = [0] * (n + 1)
    for i in range(1, n + 1):
        coeffs[i] = binom(n, i) - binom(n - i - 1, i)
    return ZfPolynomial(n, tuple(coeffs))


def _exact_div(num: int, den: int) -> int:
    if num % den:
        raise ArithmeticError(f"{num} is not divisible by {den}; formula misuse")
    return num // den


def poly_cycle(n: int) -> ZfPolynomial:
    """Coefficient i is C(n,i) - (n/i)*C(n-i-1,i-1) for i >= 2.

    The fraction is evaluated multiply-then-divide; each whole term counts
    sets and is integral even though n/i alone need not be.
    """
    if n < 3:
        raise ValueError("cycle polynomial requires n >= 3")
    coeffs = [0] * (n + 1)
    for i in range(2, n + 1):
        coeffs[i] = binom(n, i) - _exact_div(n * binom(n - i - 1, i - 1), i)
    return ZfPolynomial(n, tuple(coeffs))


def count_consecutive_selections(n: int, k: int, m: int) -> int:
    """Number of k-subsets of an n-cycle containing m consecutive vertices.

    Inclusion-exclusion over the runs' starting positions.  The k = n case
    (the full cycle, which trivially contains any m <= n in a row) lies
    outside the alternating sum's derivation and is defined directly.
    """
    if m < 3:
        raise ValueError("run length m must be >= 3")
    if n < 3:
        raise ValueError("cycle length n must be >= 3")
    if k < m or k > n:
        return 0
    if k == n:
        return 1 if n >= m else 0
    total = 0
    for t in range(1, n + 1):
        b1 = binom(n - m * t - 1, t - 1)
        b2 = binom(n - (m + 1) * t, k - m * t)
        term = _exact_div(n * b1, t) * b2
        total += term if t % 2 else -term
    return total


def poly_wheel(n: int) -> ZfPolynomial:
    """Hub-containing sets counted via the rim cycle, hub-free sets via
    consecutive-run selections of length 3 on the rim."""
    if n < 5:
        raise ValueError("wheel polynomial requires n >= 5 (use poly_complete(4) for the 4-wheel)")
    rim = poly_cycle(n - 1)
    coeffs = [0] * (n + 1)
    for i in range(1, n + 1):
        coeffs[i] = rim.coeffs[i - 1] + count_consecutive_selections(n - 1, i, 3)
    return ZfPolynomial(n, tuple(coeffs))


# ---------------------------------------------------------------------------
# Threshold graphs


def _require_usable(blocks: BlockPartition) -> None:
    if not blocks.canonical:
        raise ValueError("binary string must start with two equal symbols")
    if not blocks.connected:
        raise ValueError("binary string must end in '1' (connected threshold graph)")


def block_exclusion_sets(blocks: BlockPartition) -> set[frozenset[int]]:
    """All sets of block indices (1-based) from which a zero forcing set of the
    threshold graph excludes exactly one vertex each.

    Built left to right over the 1-blocks.  Each state pairs an index set with
    an indicator bit that is 1 exactly when a 1-block has been excluded and no
    included 0-vertex follows the rightmost excluded 1-block; in that state a
    length-1 0-block cannot be skipped while also excluding from the next
    1-block.
    """
    _require_usable(blocks)
    t = len(blocks.blocks)
    if t % 2 == 1:
        state: set[tuple[frozenset[int], int]] = {(frozenset(), 0), (frozenset({1}), 1)}
        s = 3
    else:
        state = {
            (frozenset(), 0),
            (frozenset({1}), 0),
            (frozenset({2}), 1),
            (frozenset({1, 2}), 1),
        }
        s = 4
    while s <= t:
        gap_is_single = blocks.blocks[s - 2][1] == 1  # |B_{s-1}|
        nxt: set[tuple[frozenset[int], int]] = set()
        for subset, k in state:
            if k == 1 and gap_is_single:
                nxt.add((subset, 0))
                nxt.add((subset | {s - 1}, 1))
                nxt.add((subset | {s}, 1))
            else:
                nxt.add((subset, 0))
                nxt.add((subset | {s - 1}, 0))
                nxt.add((subset | {s}, 1))
                nxt.add((subset | {s - 1, s}, 1))
        state = nxt
        s += 2
    return {subset for subset, _ in state}


def poly_threshold(b: str) -> ZfPolynomial:
    """Zero forcing polynomial of the threshold graph generated by ``b``.

    Requires a canonical connected string of length >= 2 (first two symbols
    equal, last symbol '1').  For non-canonical strings, compose the graph
    builder with brute-force enumeration instead.
    """
    if len(b) < 2:
        raise ValueError("threshold polynomial requires a string of length >= 2")
    blocks = block_partition(b)
    _require_usable(blocks)
    n = len(b)
    sizes = [length for _, length in blocks.blocks]
    coeffs = [0] * (n + 1)
    for subset in block_exclusion_sets(blocks):
        prod = 1
        for i in subset:
            prod *= sizes[i - 1]
        coeffs[n - len(subset)] += prod
    return ZfPolynomial(n, tuple(coeffs))


def threshold_zfs_check(b: str, included: int) -> bool:
    """Direct zero-forcing-set test on a threshold graph's generating string.

    ``included`` is a bitmask over string positions.  True iff the set
    excludes at most one vertex per block and, between any two excluded
    1-vertices, some 0-vertex is included.
    """
    if len(b) < 2:
        raise ValueError("requires a string of length >= 2")
    blocks = block_partition(b)
    _require_usable(blocks)
    n = len(b)
    if included & ~((1 << n) - 1):
        raise ValueError("included mask has bits outside the string")
    pos = 0
    for _, length in blocks.blocks:
        block_mask = ((1 << length) - 1) << pos
        if (block_mask & ~included).bit_count() > 1:
            return False
        pos += length
    pending_excluded_one = False
    zero_seen_since = False
    for p in range(n):
        inc = (included >> p) & 1
        if b[p] == "1":
            if not inc:
                if pending_excluded_one and not zero_seen_since:
                    return False
                pending_excluded_one = True
                zero_seen_since = False
        elif inc:
            zero_seen_since = True
    return True
