import random

import pytest

from paritysolve.families import gen_solitaire, gen_weak
from paritysolve.game import build_game, remove
from paritysolve.oracle import TooLarge, solve_oracle

from oracles import naive_zielonka, random_graph_game


def test_single_even_loop():
    sol = solve_oracle(build_game([(1, 0, [0])]))
    assert sol.even_region == {0} and not sol.odd_region


def test_solitaire_two_won_by_even():
    assert solve_oracle(gen_solitaire(2)).even_region == set(range(6))


def test_solitaire_two_without_v3():
    # S2 ids: v0..v3 -> 0..3, u1 -> 4, u2 -> 5
    sol = solve_oracle(remove(gen_solitaire(2), {3}))
    assert sol.odd_region == {5}
    assert sol.even_region == {0, 1, 2, 4}


def test_weak_two_split():
    # v1, v2 -> 0, 1 won by Even with u0 = 4; v3, v4 and u1 = 5 by Odd
    sol = solve_oracle(gen_weak(2))
    assert sol.partition() == ([0, 1, 4], [2, 3, 5])


def test_size_guards():
    with pytest.raises(TooLarge):
        solve_oracle(gen_solitaire(4))
    with pytest.raises(TooLarge):
        solve_oracle(gen_weak(3), max_profiles=10)


def test_agrees_with_set_based_zielonka():
    rng = random.Random(41)
    for _ in range(300):
        g = random_graph_game(rng, rng.randint(1, 7))
        even, odd = naive_zielonka(g, set(range(len(g))))
        sol = solve_oracle(g)
        assert sol.even_region == even and sol.odd_region == odd
