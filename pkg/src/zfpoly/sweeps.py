"""Corpus sweeps machine-checking the structural results.

Exhaustive sweeps visit every labeled graph up to a small order; randomized
sweeps draw seeded graphs at larger orders.  Work splits over contiguous
ranges of the labeled-graph counter, and reports are deterministic for a
fixed seed regardless of worker count.
"""
from __future__ import annotations

import itertools
import random
from math import comb
from multiprocessing import Pool
from time import perf_counter

from .analysis import cycle_polynomial_class
from .closed_forms import (
    count_consecutive_selections,
    poly_complete,
    poly_cycle,
    poly_multipartite,
    poly_path,
    poly_threshold,
    poly_wheel,
    threshold_zfs_check,
)
from .forcing import _closure_table
from .forts import _min_hitting_set_size
from .graphs import (
    Graph,
    complete,
    complete_multipartite,
    cycle,
    cycle_plus_chord,
    disjoint_union,
    edge_pair_order,
    empty,
    from_edge_list,
    is_isomorphic,
    join,
    path,
    threshold_from_string,
    wheel,
)
from .polynomial import zf_polynomial

EXHAUSTIVE_MAX_N = 7

# Individual per-graph checks; suites select subsets of these.
CHECK_KEYS = (
    "extremal",          # the four characterized coefficients match enumeration
    "zero-range",        # coefficients vanish exactly below the first nonzero one
    "all-min-sets",      # every minimum-size set forces iff complete or empty
    "hall",              # coefficient monotonicity below n/2
    "multiplicativity",  # polynomial is the product over connected components
    "fort-transversal",  # no zero forcing set avoids a fort
    "fort-count-bound",  # fort count at most 2^n minus the zero forcing set count
    "ip",                # minimum fort cover size equals the zero forcing number
    "ham-bound",         # Hamiltonian-path graphs obey the path coefficient bound
    "recognizability",   # path/complete polynomials characterize path/complete
    "unimodality",       # conjecture: coefficients rise then fall
    "path-bound",        # conjecture: coefficients at most the path's
    "reversal",          # reversing the chains of a minimum set forces again
)

CONJECTURE_CHECKS = frozenset({"unimodality", "path-bound"})

SWEEP_SUITE_CHECKS = {
    "extremal": frozenset({"extremal", "zero-range", "all-min-sets"}),
    "hall": frozenset({"hall"}),
    "multiplicativity": frozenset({"multiplicativity"}),
    "forts": frozenset({"fort-transversal", "fort-count-bound", "ham-bound"}),
    "ip": frozenset({"ip"}),
    "recognizability": frozenset({"recognizability"}),
    "conjectures": CONJECTURE_CHECKS,
}

SUITES = tuple(sorted(SWEEP_SUITE_CHECKS)) + ("closed-forms", "all")

IP_RANDOM_COUNT = 100
CONJECTURE_RANDOM_COUNT = 500
RANDOM_N_RANGE = (8, 14)


# ---------------------------------------------------------------------------
# Per-graph kernel.  Works on raw adjacency lists to keep the inner loop lean.


def _components_masks(adj: list[int], n: int) -> list[int]:
    seen = 0
    comps = []
    for v in range(n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grow = 0
            rem = frontier
            while rem:
                b = rem & -rem
                rem ^= b
                grow |= adj[b.bit_length() - 1]
            frontier = grow & ~comp
            comp |= grow
        comps.append(comp)
        seen |= comp
    return comps


def _is_path_shape(adj: list[int], n: int) -> bool:
    if n == 1:
        return True
    ends = 0
    for a in adj:
        d = a.bit_count()
        if d > 2:
            return False
        if d <= 1:
            ends += 1
    return ends == 2 and len(_components_masks(adj, n)) == 1


def _has_ham_path(adj: list[int], n: int, full: int) -> bool:
    if n <= 1:
        return True
    ends = [0] * (full + 1)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, full + 1):
        ep = ends[mask]
        if not ep:
            continue
        rem = ep
        while rem:
            b = rem & -rem
            rem ^= b
            nxt = adj[b.bit_length() - 1] & ~mask
            while nxt:
                nb = nxt & -nxt
                nxt ^= nb
                ends[mask | nb] |= nb
    return ends[full] != 0


def _fort_masks_fast(adj: list[int], n: int, full: int) -> list[int]:
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
    return out


def _component_coeffs(adj: list[int], comp: int) -> list[int]:
    verts = []
    rem = comp
    while rem:
        b = rem & -rem
        rem ^= b
        verts.append(b.bit_length() - 1)
    index = {v: i for i, v in enumerate(verts)}
    k = len(verts)
    sub = [0] * k
    for v in verts:
        nb = adj[v] & comp
        while nb:
            b = nb & -nb
            nb ^= b
            sub[index[v]] |= 1 << index[b.bit_length() - 1]
    subfull = (1 << k) - 1
    table = _closure_table(sub, k)
    coeffs = [0] * (k + 1)
    for mask in range(subfull + 1):
        if table[mask] == subfull:
            coeffs[mask.bit_count()] += 1
    return coeffs


class _GraphContext:
    """Per-order constants shared across a scan."""

    def __init__(self, n: int):
        self.n = n
        self.pairs = edge_pair_order(n)
        self.full = (1 << n) - 1
        self.full_edges = (1 << len(self.pairs)) - 1
        self.path_coeffs = tuple(poly_path(n).coeffs)
        self.complete_coeffs = tuple(poly_complete(n).coeffs)


_CTX_CACHE: dict[int, _GraphContext] = {}


def _context(n: int) -> _GraphContext:
    ctx = _CTX_CACHE.get(n)
    if ctx is None:
        ctx = _CTX_CACHE[n] = _GraphContext(n)
    return ctx


def _check_one(n: int, emask: int, checks: frozenset, ctx: _GraphContext) -> list[tuple[str, str]]:
    """Run the requested checks on one labeled graph; returns (check, detail) pairs."""
    full = ctx.full
    adj = [0] * n
    m = emask
    while m:
        b = m & -m
        m ^= b
        u, v = ctx.pairs[b.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    table = _closure_table(adj, n)
    coeffs = [0] * (n + 1)
    for mask in range(full + 1):
        if table[mask] == full:
            coeffs[mask.bit_count()] += 1
    z = next(i for i, c in enumerate(coeffs) if c)
    bad: list[tuple[str, str]] = []

    if "extremal" in checks:
        second = sum(1 for a in adj if a)
        third = 0
        for u in range(n):
            au = adj[u]
            if not au:
                continue
            for v in range(u + 1, n):
                av = adj[v]
                if av and au & ~(1 << v) != av & ~(1 << u):
                    third += 1
        is_path = _is_path_shape(adj, n)
        z1 = 1 if n == 1 else (2 if is_path else 0)
        if coeffs[n] != 1:
            bad.append(("extremal", f"top coefficient {coeffs[n]} != 1"))
        if coeffs[n - 1] != second:
            bad.append(("extremal", f"size n-1: {coeffs[n - 1]} != {second}"))
        if n >= 2 and coeffs[n - 2] != third:
            bad.append(("extremal", f"size n-2: {coeffs[n - 2]} != {third}"))
        if coeffs[1] != z1:
            bad.append(("extremal", f"size 1: {coeffs[1]} != {z1}"))

    if "zero-range" in checks and any(coeffs[i] == 0 for i in range(z, n + 1)):
        bad.append(("zero-range", f"zero coefficient above the first nonzero index {z}"))

    if "all-min-sets" in checks:
        every_min_forces = coeffs[z] == comb(n, z)
        extreme = emask == 0 or emask == ctx.full_edges
        if every_min_forces != extreme:
            bad.append(("all-min-sets", f"all-minimum-sets {every_min_forces} vs complete/empty {extreme}"))

    if "hall" in checks:
        for i in range(1, (n - 1) // 2 + 1):
            if 2 * i < n and coeffs[i] > coeffs[i + 1]:
                bad.append(("hall", f"coefficient {i} exceeds coefficient {i + 1}"))
                break

    if "multiplicativity" in checks:
        comps = _components_masks(adj, n)
        if len(comps) > 1:
            prod = [1]
            for comp in comps:
                sub = _component_coeffs(adj, comp)
                nxt = [0] * (len(prod) + len(sub) - 1)
                for i, a in enumerate(prod):
                    if a:
                        for j, c in enumerate(sub):
                            if c:
                                nxt[i + j] += a * c
                prod = nxt
            if prod != coeffs:
                bad.append(("multiplicativity", "component product differs from direct enumeration"))

    forts: list[int] | None = None
    if checks & {"fort-transversal", "fort-count-bound", "ip"}:
        forts = _fort_masks_fast(adj, n, full)

    if "fort-transversal" in checks:
        # A zero forcing set avoiding F exists iff the largest F-avoiding set,
        # V minus F, is itself forcing (closure is monotone; tested directly
        # in the unit suite).
        for f in forts:
            if table[full & ~f] == full:
                bad.append(("fort-transversal", f"fort {f:#x} avoided by a zero forcing set"))
                break

    if "fort-count-bound" in checks:
        if len(forts) > (full + 1) - sum(coeffs):
            bad.append(("fort-count-bound", f"{len(forts)} forts > 2^n - {sum(coeffs)}"))

    if "ip" in checks:
        cover = _min_hitting_set_size(forts, n)
        if cover != z:
            bad.append(("ip", f"minimum fort cover {cover} != zero forcing number {z}"))

    if "ham-bound" in checks and _has_ham_path(adj, n, full):
        pathc = ctx.path_coeffs
        if any(coeffs[i] > pathc[i] for i in range(n + 1)):
            bad.append(("ham-bound", "Hamiltonian-path graph exceeds the path bound"))
        if (tuple(coeffs) == pathc) != _is_path_shape(adj, n):
            bad.append(("ham-bound", "path-bound equality profile does not single out the path"))

    if "recognizability" in checks:
        if (tuple(coeffs) == ctx.path_coeffs) != _is_path_shape(adj, n):
            bad.append(("recognizability", "path polynomial does not characterize paths"))
        if (tuple(coeffs) == ctx.complete_coeffs) != (emask == ctx.full_edges):
            bad.append(("recognizability", "complete polynomial does not characterize complete graphs"))

    if "unimodality" in checks:
        seg = coeffs[z:]
        i = 0
        while i + 1 < len(seg) and seg[i + 1] >= seg[i]:
            i += 1
        while i + 1 < len(seg) and seg[i + 1] <= seg[i]:
            i += 1
        if i != len(seg) - 1:
            bad.append(("unimodality", f"coefficients {coeffs} are not unimodal"))

    if "path-bound" in checks:
        pathc = ctx.path_coeffs
        if any(coeffs[i] > pathc[i] for i in range(n + 1)):
            bad.append(("path-bound", f"coefficients {coeffs} exceed the path's"))

    if "reversal" in checks:
        for mask in range(full + 1):
            if mask.bit_count() != z or table[mask] != full:
                continue
            state = mask
            forcers = 0
            while state != full:
                progressed = False
                for u in range(n):
                    if (state >> u) & 1:
                        unc = adj[u] & ~state
                        if unc and not (unc & (unc - 1)):
                            forcers |= 1 << u
                            state |= unc
                            progressed = True
                            break
                if not progressed:  # unreachable for a forcing set
                    break
            tails = full & ~forcers  # chain terminals: colored vertices that never force
            if table[tails] != full:
                bad.append(("reversal", f"reversed chains of {mask:#x} do not force"))
                break

    return bad


def _scan_worker(args: tuple[int, int, int, frozenset]) -> tuple[int, list[tuple[str, int, int, str]]]:
    n, lo, hi, checks = args
    ctx = _context(n)
    bad: list[tuple[str, int, int, str]] = []
    for emask in range(lo, hi):
        for check, detail in _check_one(n, emask, checks, ctx):
            bad.append((check, n, emask, detail))
    return hi - lo, bad


def _random_worker(args: tuple[list[tuple[int, int]], frozenset]) -> tuple[int, list[tuple[str, int, int, str]]]:
    specs, checks = args
    bad: list[tuple[str, int, int, str]] = []
    for n, emask in specs:
        for check, detail in _check_one(n, emask, checks, _context(n)):
            bad.append((check, n, emask, detail))
    return len(specs), bad


def _record(check: str, n: int, graph, detail: str) -> dict:
    return {"check": check, "n": n, "graph": graph, "detail": detail}


def _run_jobs(worker, arglist, jobs: int):
    if jobs > 1 and len(arglist) > 1:
        with Pool(jobs) as pool:
            yield from pool.imap(worker, arglist)
    else:
        for args in arglist:
            yield worker(args)


def exhaustive_sweep(checks, max_n: int, jobs: int = 1, min_n: int = 1) -> tuple[int, list[dict]]:
    """Run checks on every labeled graph with min_n <= n <= max_n.

    Returns (graphs checked, failure records ordered by (n, graph)).
    """
    checks = frozenset(checks)
    unknown = checks - set(CHECK_KEYS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    if max_n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive sweep capped at {EXHAUSTIVE_MAX_N} vertices")
    total_graphs = 0
    records: list[dict] = []
    for n in range(min_n, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        if jobs > 1 and total >= (1 << 14):
            step = max(1, total // (jobs * 16))
            arglist = [(n, lo, min(lo + step, total), checks) for lo in range(0, total, step)]
        else:
            arglist = [(n, 0, total, checks)]
        for count, bad in _run_jobs(_scan_worker, arglist, jobs):
            total_graphs += count
            records.extend(_record(c, gn, e, d) for c, gn, e, d in bad)
    return total_graphs, records


def random_graph_specs(count: int, n_lo: int, n_hi: int, seed: int) -> list[tuple[int, int]]:
    """Seeded (n, edge mask) specs with edge probability drawn per graph."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        p = rng.uniform(0.15, 0.85)
        emask = 0
        for b in range(n * (n - 1) // 2):
            if rng.random() < p:
                emask |= 1 << b
        out.append((n, emask))
    return out


def random_sweep(checks, specs: list[tuple[int, int]], jobs: int = 1) -> tuple[int, list[dict]]:
    """Run checks on an explicit list of (n, edge mask) graphs."""
    checks = frozenset(checks)
    if jobs > 1 and len(specs) > 1:
        step = max(1, len(specs) // (jobs * 4))
        arglist = [(specs[i:i + step], checks) for i in range(0, len(specs), step)]
    else:
        arglist = [(specs, checks)]
    total = 0
    records: list[dict] = []
    for count, bad in _run_jobs(_random_worker, arglist, jobs):
        total += count
        records.extend(_record(c, gn, e, d) for c, gn, e, d in bad)
    return total, records


# ---------------------------------------------------------------------------
# Closed-form oracle suite


def _count_consecutive_direct(n: int, m: int) -> dict[int, int]:
    """Direct tally, by subset size, of n-cycle subsets with an m-run.

    Independent of the alternating-sum formula: a rotate-and-AND detects a
    circular run of m chosen vertices.
    """
    full = (1 << n) - 1
    tallies = {k: 0 for k in range(n + 1)}
    if m > n:
        return tallies
    for mask in range(full + 1):
        run = mask
        for s in range(1, m):
            run &= ((mask >> s) | (mask << (n - s))) & full
            if not run:
                break
        if run:
            tallies[mask.bit_count()] += 1
    return tallies


def _partitions_min2(max_total: int) -> list[list[int]]:
    """Non-increasing part lists, parts >= 2, at least two parts, sum <= max_total."""
    results: list[list[int]] = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if len(acc) >= 2:
            results.append(list(acc))
        for part in range(min(cap, remaining), 1, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(max_total, max_total, [])
    return results


def _brute_coeffs(g: Graph) -> tuple[int, ...]:
    return zf_polynomial(g, engine="table").coeffs


def _threshold_string_worker(b: str) -> list[tuple[str, str, str]]:
    """Check one threshold string: closed-form polynomial and the direct
    zero-forcing-set characterization, both against enumeration."""
    bad = []
    g = threshold_from_string(b)
    n = g.n
    full = (1 << n) - 1
    table = _closure_table(g.adj, n)
    coeffs = [0] * (n + 1)
    for mask in range(full + 1):
        if table[mask] == full:
            coeffs[mask.bit_count()] += 1
    if tuple(coeffs) != poly_threshold(b).coeffs:
        bad.append(("threshold-poly", b, "closed form differs from enumeration"))
    for mask in range(full + 1):
        if threshold_zfs_check(b, mask) != (table[mask] == full):
            bad.append(("threshold-zfs-check", b, f"characterization wrong on mask {mask:#x}"))
            break
    return bad


def canonical_connected_strings(length: int) -> list[str]:
    """All binary strings of one length whose first two symbols agree and whose
    last symbol is '1' (one generating string per connected threshold graph)."""
    if length < 2:
        raise ValueError("need length >= 2")
    out = []
    for bits in range(1 << (length - 2)):
        # positions 1..length-2 are free, the last position is '1',
        # and position 0 copies position 1
        tail = [(bits >> i) & 1 for i in range(length - 2)] + [1]
        symbols = [tail[0]] + tail
        out.append("".join("01"[s] for s in symbols))
    return out


def run_closed_forms_suite(max_n: int = 12, jobs: int = 1, lemma_max_n: int = 14) -> tuple[int, list[dict]]:
    """Closed forms against brute-force enumeration for every admissible size.

    Returns (instances checked, failure records).
    """
    checked = 0
    records: list[dict] = []

    def fail(check: str, n, graph, detail: str) -> None:
        records.append(_record(check, n, graph, detail))

    for n in range(1, max_n + 1):
        checked += 1
        if poly_path(n).coeffs != _brute_coeffs(path(n)):
            fail("family-path", n, f"path:{n}", "closed form differs from enumeration")
    for n in range(3, max_n + 1):
        checked += 1
        if poly_cycle(n).coeffs != _brute_coeffs(cycle(n)):
            fail("family-cycle", n, f"cycle:{n}", "closed form differs from enumeration")
    for n in range(1, max_n + 1):
        checked += 1
        if poly_complete(n).coeffs != _brute_coeffs(complete(n)):
            fail("family-complete", n, f"complete:{n}", "closed form differs from enumeration")
    for n in range(5, max_n + 1):
        checked += 1
        if poly_wheel(n).coeffs != _brute_coeffs(wheel(n)):
            fail("family-wheel", n, f"wheel:{n}", "closed form differs from enumeration")
    for parts in _partitions_min2(max_n):
        checked += 1
        if poly_multipartite(parts).coeffs != _brute_coeffs(complete_multipartite(parts)):
            fail("family-multipartite", sum(parts), f"multipartite:{parts}",
                 "closed form differs from enumeration")

    # consecutive-run selections against direct counting
    for m in (3, 4):
        for n in range(3, lemma_max_n + 1):
            direct = _count_consecutive_direct(n, m)
            for k in range(n + 1):
                checked += 1
                got = count_consecutive_selections(n, k, m)
                if got != direct[k]:
                    fail("consecutive-selections", n, f"(n={n},k={k},m={m})",
                         f"formula {got} != direct {direct[k]}")

    # single-chord cycles share the cycle polynomial
    for n in range(4, min(10, max_n) + 1):
        target = poly_cycle(n).coeffs
        for i in range(n):
            for j in range(n):
                if i < j and (j - i) % n not in (1, n - 1):
                    checked += 1
                    if _brute_coeffs(cycle_plus_chord(n, i, j)) != target:
                        fail("chord-invariance", n, f"cycle-chord:{n}:{i}:{j}",
                             "chorded cycle polynomial differs from the cycle's")

    # permutation-invariant threshold families
    for k in (3, 4):
        perms = ["00".join("1" * s for s in perm)
                 for perm in itertools.permutations(range(2, k + 1))]
        polys = [poly_threshold(b) for b in perms]
        checked += len(perms)
        if any(p != polys[0] for p in polys):
            fail("threshold-permutation", len(perms[0]), f"k={k}",
                 "permuted block sizes changed the polynomial")

    # every canonical connected string, closed form + characterization
    strings = []
    for length in range(2, max_n + 1):
        strings.extend(canonical_connected_strings(length))
    if jobs > 1:
        step = max(1, len(strings) // (jobs * 8))
        chunks = [strings[i:i + step] for i in range(0, len(strings), step)]
        with Pool(jobs) as pool:
            results = pool.map(_threshold_batch_worker, chunks)
        bads = [item for chunk in results for item in chunk]
    else:
        bads = _threshold_batch_worker(strings)
    checked += len(strings)
    for check, b, detail in bads:
        fail(check, len(b), f"threshold:{b}", detail)

    return checked, records


def _threshold_batch_worker(strings: list[str]) -> list[tuple[str, str, str]]:
    bad = []
    for b in strings:
        bad.extend(_threshold_string_worker(b))
    return bad


# ---------------------------------------------------------------------------
# Recognizability class lists


def expected_cycle_class(n: int) -> list[Graph]:
    """The graphs whose polynomial should equal the n-cycle's: the cycle, every
    single-chord class, and the two exceptional graphs at n = 4 and n = 6."""
    reps = [cycle(n)]
    for d in range(2, n // 2 + 1):
        reps.append(cycle_plus_chord(n, 0, d))
    if n == 4:
        reps.append(from_edge_list(4, [(0, 1), (2, 3)]))  # two disjoint edges
    if n == 6:
        reps.append(join(disjoint_union(path(4), empty(1)), complete(1)))
    return reps


def verify_cycle_class(n: int, jobs: int = 1) -> list[dict]:
    """Compare the swept polynomial class against the expected class list."""
    found = cycle_polynomial_class(n, jobs=jobs)
    expected = expected_cycle_class(n)
    records = []
    if len(found) != len(expected):
        records.append(_record("cycle-class", n, f"n={n}",
                               f"found {len(found)} classes, expected {len(expected)}"))
    for g in expected:
        if sum(1 for h in found if is_isomorphic(g, h)) != 1:
            records.append(_record("cycle-class", n, f"n={n}",
                                   "an expected class is missing or duplicated"))
    for h in found:
        if not any(is_isomorphic(g, h) for g in expected):
            records.append(_record("cycle-class", n, f"n={n}",
                                   f"unexpected class with edges {h.edges()}"))
    return records


# ---------------------------------------------------------------------------
# Suite runner


def run_suite(
    suite: str,
    max_n: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    ip_random_count: int = IP_RANDOM_COUNT,
    conjecture_random_count: int = CONJECTURE_RANDOM_COUNT,
) -> dict:
    """Run one named check suite and return a report dict."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    t0 = perf_counter()
    failures: list[dict] = []
    warnings: list[dict] = []
    checked = 0

    def classify(records):
        for rec in records:
            (warnings if rec["check"] in CONJECTURE_CHECKS else failures).append(rec)

    if suite == "closed-forms":
        count, records = run_closed_forms_suite(max_n=max_n or 12, jobs=jobs)
        checked += count
        classify(records)
    else:
        sweep_max = min(max_n or EXHAUSTIVE_MAX_N, EXHAUSTIVE_MAX_N)
        if suite == "all":
            checks = frozenset(CHECK_KEYS)
        else:
            checks = SWEEP_SUITE_CHECKS[suite]
        count, records = exhaustive_sweep(checks, sweep_max, jobs=jobs)
        checked += count
        classify(records)
        if "ip" in checks and ip_random_count:
            specs = random_graph_specs(ip_random_count, *RANDOM_N_RANGE, seed)
            count, records = random_sweep({"ip"}, specs, jobs=jobs)
            checked += count
            classify(records)
        if checks & CONJECTURE_CHECKS and conjecture_random_count:
            specs = random_graph_specs(conjecture_random_count, *RANDOM_N_RANGE, seed + 1)
            count, records = random_sweep(checks & CONJECTURE_CHECKS, specs, jobs=jobs)
            checked += count
            classify(records)
        if suite in ("recognizability", "all"):
            for n in range(3, sweep_max + 1):
                checked += 1
                classify(verify_cycle_class(n, jobs=jobs))
        if suite == "all":
            count, records = run_closed_forms_suite(max_n=min(max_n or 12, 12), jobs=jobs)
            checked += count
            classify(records)

    return {
        "suite": suite,
        "max_n": max_n,
        "seed": seed,
        "jobs": jobs,
        "graphs_checked": checked,
        "failures": failures,
        "warnings": warnings,
        "passed": not failures,
        "elapsed_s": round(perf_counter() - t0, 3),
    }
