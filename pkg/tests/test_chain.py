import random

import pytest

import listcolor as lc
from listcolor.errors import (
    COLOR_NOT_IN_LIST,
    NotShiftableError,
    PreconditionViolatedError,
)

from conftest import (
    brute_max_prefix,
    brute_shift_ok,
    random_partial,
    recompute_potential,
    recompute_used,
    setup_partial,
)

S6 = frozenset(range(1, 7))
AB = frozenset({1, 2})


def fig_shift_instance():
    # seven-edge chain through three hubs; colors 1..6 on edges 1..6
    specs = [
        (0, 1, None, S6),
        (0, 2, 1, S6),
        (0, 3, 2, S6),
        (3, 4, 3, S6),
        (5, 4, 4, S6),
        (5, 6, 5, S6),
        (5, 7, 6, S6),
    ]
    return setup_partial(8, specs)


def test_shift_seven_edge_chain_exact():
    g, L, phi = fig_shift_instance()
    chain = lc.build_chain(g, range(7))
    shifted = lc.shift(phi, chain)
    assert shifted.color == [1, 2, 3, 4, 5, 6, None]
    assert phi.color == [None, 1, 2, 3, 4, 5, 6]  # input untouched
    assert shifted.verify() == []


def test_shift_single_blank_edge_is_identity(triangle):
    g, L = triangle
    phi = lc.blank_coloring(g, L)
    shifted = lc.shift(phi, lc.build_chain(g, [0]))
    assert shifted.color == phi.color


def test_shift_rejects_color_outside_start_list():
    specs = [(0, 1, None, frozenset({2, 3})), (1, 2, 1, frozenset({1, 2}))]
    g, L, phi = setup_partial(3, specs)
    with pytest.raises(NotShiftableError) as exc:
        lc.shift(phi, lc.build_chain(g, [0, 1]))
    assert exc.value.index == 0
    assert exc.value.reason == COLOR_NOT_IN_LIST


def test_shift_rejects_colored_start(triangle):
    g, L = triangle
    phi = lc.blank_coloring(g, L)
    phi.assign(0, 1)
    with pytest.raises(NotShiftableError) as exc:
        lc.shift(phi, lc.build_chain(g, [0, 1]))
    assert exc.value.index == 0


def test_shift_preserves_colors_away_from_ends(rng):
    # vertices not on the start or end edge keep their used sets
    for seed in range(40):
        g = lc.generate_random(10, 4, 2, seed=seed, edges=16)
        L = lc.generate_from_bounds(g, "koenig" if g.bipartition() else "vizing")
        phi = random_partial(g, L, random.Random(seed), fill=0.75)
        blanks = sorted(phi.uncolored)
        hit = False
        for e in blanks:
            u, v = g.endpoints[e]
            for alpha in sorted(phi.available[u]):
                for beta in sorted(phi.available[v]):
                    if alpha == beta:
                        continue
                    path = lc.alternating_path(phi, e, alpha, beta)
                    j = lc.max_shiftable_prefix(phi, path)
                    pref = path.prefix(j)
                    shifted = lc.shift(phi, pref)
                    before = recompute_used(g, phi.color)
                    after = recompute_used(g, shifted.color)
                    ends = set(g.endpoints[pref.start]) | set(g.endpoints[pref.end])
                    for z in range(g.n):
                        if z not in ends:
                            assert before[z] == after[z]
                    hit = True
                    break
                if hit:
                    break
            if hit:
                break


def test_chain_validation_rejects_garbage(triangle):
    g, L = triangle
    with pytest.raises(ValueError):
        lc.build_chain(g, [0, 0])  # repeated edge
    g2 = lc.Multigraph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        lc.build_chain(g2, [0, 1])  # disjoint edges
    g3 = lc.Multigraph(2, [(0, 1), (0, 1)])
    with pytest.raises(ValueError):
        lc.build_chain(g3, [0, 1])  # parallel edges share two vertices


def fig_two_a_instance():
    # line of alternating 1/2 segments around the blank edge (5, 6)
    specs = [
        (2, 1, 1, AB),
        (1, 0, 2, AB),
        (4, 3, 1, AB),
        (5, 4, 2, AB),
        (5, 6, None, AB),
        (6, 7, 1, AB),
        (7, 8, 2, AB),
        (9, 10, 2, AB),
        (10, 11, 1, AB),
    ]
    return setup_partial(12, specs)


def test_alternating_path_two_directions():
    g, L, phi = fig_two_a_instance()
    p_ab = lc.alternating_path(phi, 4, 1, 2)
    p_ba = lc.alternating_path(phi, 4, 2, 1)
    assert p_ab.edges == (4, 5, 6)
    assert p_ab.vstart == 5 and p_ab.vend == 8
    assert p_ba.edges == (4, 3, 2)
    assert p_ba.vstart == 6 and p_ba.vend == 3
    assert set(p_ab.edges) & set(p_ba.edges) == {4}


def test_alternating_path_no_first_edge():
    g, L, phi = setup_partial(2, [(0, 1, None, AB)])
    p = lc.alternating_path(phi, 0, 1, 2)
    assert p.edges == (0,)
    assert p.vstart == 0 and p.vend == 1


def test_alternating_path_cycle_returns_home():
    # seven-cycle: the walk ends back at the start vertex
    specs = [
        (0, 1, None, AB),
        (1, 2, 1, AB),
        (2, 3, 2, AB),
        (3, 4, 1, AB),
        (4, 5, 2, AB),
        (5, 6, 1, AB),
        (6, 0, 2, AB),
    ]
    g, L, phi = setup_partial(7, specs)
    p = lc.alternating_path(phi, 0, 1, 2)
    assert p.edges == (0, 1, 2, 3, 4, 5, 6)
    assert p.vstart == p.vend == 0


def test_alternating_path_precondition():
    g, L, phi = setup_partial(3, [(0, 1, None, AB), (1, 2, 1, AB)])
    with pytest.raises(PreconditionViolatedError):
        lc.alternating_path(phi, 0, 1, 1)
    with pytest.raises(PreconditionViolatedError):
        lc.alternating_path(phi, 0, 5, 6)


def five_edge_path_instance():
    # alternation 1,2,1,2 after the blank edge; shifting position 2 would
    # need color 1 there but its list is {2,3}, capping the prefix at 3
    specs = [
        (0, 1, None, AB),
        (1, 2, 1, AB),
        (2, 3, 2, frozenset({2, 3})),
        (3, 4, 1, AB),
        (4, 5, 2, frozenset({2, 4})),
    ]
    return setup_partial(6, specs)


def test_max_shiftable_prefix_derived_j3():
    g, L, phi = five_edge_path_instance()
    path = lc.alternating_path(phi, 0, 1, 2)
    assert path.edges == (0, 1, 2, 3, 4)
    expected = brute_max_prefix(g, L, phi.color, list(path.edges))
    assert expected == 3
    assert lc.max_shiftable_prefix(phi, path) == 3


def test_max_shiftable_prefix_full_when_lists_allow():
    g, L, phi = fig_two_a_instance()
    path = lc.alternating_path(phi, 4, 1, 2)
    assert lc.max_shiftable_prefix(phi, path) == path.length
    assert brute_shift_ok(g, L, phi.color, list(path.edges))


def test_max_shiftable_prefix_length_one():
    g, L, phi = setup_partial(2, [(0, 1, None, AB)])
    path = lc.alternating_path(phi, 0, 1, 2)
    assert lc.max_shiftable_prefix(phi, path) == 1


def test_max_shiftable_matches_brute_on_random(rng):
    checked = 0
    for seed in range(60):
        g = lc.generate_random(10, 4, 2, seed=seed, edges=15)
        L = lc.generate_from_bounds(g, "shannon")
        phi = random_partial(g, L, random.Random(seed), fill=0.8)
        for e in sorted(phi.uncolored):
            u, v = g.endpoints[e]
            for alpha in sorted(phi.available[u])[:2]:
                for beta in sorted(phi.available[v])[:2]:
                    if alpha == beta:
                        continue
                    path = lc.alternating_path(phi, e, alpha, beta)
                    got = lc.max_shiftable_prefix(phi, path)
                    want = brute_max_prefix(g, L, phi.color, list(path.edges))
                    assert got == want
                    checked += 1
    assert checked > 100


def test_resolve_single_edge_happy():
    g, L, phi = setup_partial(2, [(0, 1, None, AB)])
    path = lc.alternating_path(phi, 0, 1, 2)
    out = lc.resolve_path(phi, path)
    assert out.kind == "happy"
    assert phi.color[0] == 1
    assert phi.verify() == []


def test_resolve_two_edge_happy_colors_beta():
    # blank (0,1), then (1,2) colored 1; color 2 missing at the far end,
    # and 1 clashes at vertex 1 after the shift, so 2 is forced
    g, L, phi = setup_partial(3, [(0, 1, None, AB), (1, 2, 1, AB)])
    path = lc.alternating_path(phi, 0, 1, 2)
    assert path.edges == (0, 1)
    out = lc.resolve_path(phi, path)
    assert out.kind == "happy"
    assert phi.color[0] == 1 and phi.color[1] == 2
    assert phi.verify() == []


def test_resolve_prefix_content_derived():
    g, L, phi = five_edge_path_instance()
    path = lc.alternating_path(phi, 0, 1, 2)
    before = recompute_potential(g, L, phi.color)
    blanks = len(phi.uncolored)
    out = lc.resolve_path(phi, path)
    assert out.kind == "content"
    assert out.chain.edges == (0, 1, 2)
    after = recompute_potential(g, L, phi.color)
    assert after < before
    assert after[0] <= before[0] - 1  # availability total drops
    assert len(phi.uncolored) == blanks
    assert phi.verify() == []


def test_resolve_requires_distinct_ends():
    specs = [
        (0, 1, None, AB),
        (1, 2, 1, AB),
        (2, 3, 2, AB),
        (3, 4, 1, AB),
        (4, 5, 2, AB),
        (5, 6, 1, AB),
        (6, 0, 2, AB),
    ]
    g, L, phi = setup_partial(7, specs)
    path = lc.alternating_path(phi, 0, 1, 2)
    with pytest.raises(PreconditionViolatedError):
        lc.resolve_path(phi, path)


def test_resolve_random_postconditions(rng):
    resolved = 0
    for seed in range(80):
        g = lc.generate_random(10, 4, 2, seed=seed, edges=15)
        L = lc.generate_from_bounds(g, "shannon")
        phi = random_partial(g, L, random.Random(seed), fill=0.7)
        blanks = sorted(phi.uncolored)
        if not blanks:
            continue
        e = blanks[0]
        u, v = g.endpoints[e]
        if not phi.available[u] or not phi.available[v]:
            continue
        alpha = min(phi.available[u])
        beta = min(phi.available[v])
        if alpha == beta:
            continue
        path = lc.alternating_path(phi, e, alpha, beta)
        if path.vstart == path.vend:
            continue
        before = phi.potential()
        count = len(phi.uncolored)
        out = lc.resolve_path(phi, path)
        assert phi.verify() == []
        assert phi.potential() < before
        if out.kind == "happy":
            assert len(phi.uncolored) == count - 1
        else:
            assert len(phi.uncolored) == count
        resolved += 1
    assert resolved > 20


def test_path_chain_builder_validates():
    g = lc.Multigraph(4, [(0, 1), (1, 2), (2, 3)])
    p = lc.build_path_chain(g, [0, 1, 2], vstart=0)
    assert p.vertices == (0, 1, 2, 3)
    assert p.prefix(2).vertices == (0, 1, 2)
    with pytest.raises(ValueError):
        lc.build_path_chain(g, [0, 1, 2], vstart=3)
