import random

import pytest

from oracles import naive_forts, naive_min_cover_size
from zfpoly import (
    all_labeled_graphs,
    complete,
    cycle,
    empty,
    enumerate_forts,
    fort_count_bound_holds,
    graph_from_edge_mask,
    is_fort,
    is_zero_forcing_set,
    mask_of,
    min_fort_cover,
    path,
    small_fort_coefficient_bound,
    star,
    vertices_of,
    zf_polynomial,
)


def test_is_fort_examples():
    p3 = path(3)
    assert is_fort(p3, 0b101)  # the middle vertex sees both members
    assert not is_fort(p3, 0b001)  # the middle vertex sees exactly one
    assert not is_fort(p3, 0)
    for g in all_labeled_graphs(3):
        assert is_fort(g, g.vertex_mask)


def test_enumerate_forts_examples():
    assert enumerate_forts(path(3)).forts == (0b101, 0b111)
    k3 = enumerate_forts(complete(3))
    assert k3.forts == (0b011, 0b101, 0b110, 0b111)
    assert enumerate_forts(empty(2)).forts == (0b01, 0b10, 0b11)


def test_enumerate_forts_matches_naive_oracle():
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            got = {frozenset(vertices_of(f)) for f in enumerate_forts(g).forts}
            assert got == naive_forts(g)


def test_fort_family_sorted_by_size_then_mask():
    fam = enumerate_forts(cycle(5))
    key = [(f.bit_count(), f) for f in fam.forts]
    assert key == sorted(key)


def test_fort_supersets_need_not_be_forts():
    # a wrong pruning shortcut would assume upward closure
    g = star(4)
    assert is_fort(g, mask_of([0, 1]))
    assert not is_fort(g, mask_of([0, 1, 3]))


def test_min_fort_cover_examples():
    size, witness = min_fort_cover(path(3))
    assert size == 1 and witness == 0b001  # {0} is the lex-smallest witness
    assert min_fort_cover(complete(4))[0] == 3
    assert min_fort_cover(cycle(5))[0] == 2


def test_min_fort_cover_witness_hits_every_fort():
    for g in (path(5), cycle(6), complete(4), star(5), empty(3)):
        size, witness = min_fort_cover(g)
        assert witness.bit_count() == size
        assert all(witness & f for f in enumerate_forts(g).forts)


def test_min_fort_cover_witness_is_lex_min():
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            size, witness = min_fort_cover(g)
            forts = enumerate_forts(g).forts
            candidates = [
                mask
                for mask in range(1 << n)
                if mask.bit_count() == size and all(mask & f for f in forts)
            ]
            best = min(candidates, key=lambda m: vertices_of(m))
            assert witness == best


def test_min_cover_size_equals_zero_forcing_number_exhaustive():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            size, _ = min_fort_cover(g)
            assert size == naive_min_cover_size(g)
            assert size == zf_polynomial(g).zero_forcing_number()


def test_min_cover_size_equals_zero_forcing_number_random():
    rng = random.Random(424242)
    for _ in range(25):
        n = rng.randint(8, 12)
        g = graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
        assert min_fort_cover(g)[0] == zf_polynomial(g).zero_forcing_number()


def test_every_zfs_hits_every_fort_small():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            forts = enumerate_forts(g).forts
            for mask in range(1 << n):
                if is_zero_forcing_set(g, mask):
                    assert all(mask & f for f in forts)


def test_fort_count_bound_examples():
    assert fort_count_bound_holds(path(3)) == (2, 2, True)
    assert fort_count_bound_holds(complete(3)) == (4, 4, True)
    lhs, rhs, ok = fort_count_bound_holds(cycle(4))
    assert (lhs, rhs, ok) == (7, 16 - 9, True)


def test_fort_count_bound_random():
    rng = random.Random(5150)
    for _ in range(40):
        n = rng.randint(2, 9)
        g = graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
        lhs, rhs, ok = fort_count_bound_holds(g)
        assert ok and lhs <= rhs


def test_small_fort_coefficient_bound_applicable():
    rows = small_fort_coefficient_bound(path(3))
    assert rows is not None
    assert all(ok for _, _, _, ok in rows)
    rows = small_fort_coefficient_bound(complete(3))
    assert all(ok for _, _, _, ok in rows)


def test_small_fort_coefficient_bound_not_applicable():
    # every fort of the 4-path has size 3 while Z + 1 = 2
    assert small_fort_coefficient_bound(path(4)) is None
