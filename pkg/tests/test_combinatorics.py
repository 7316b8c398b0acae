from itertools import combinations
from math import comb

import pytest

from sdc.combinatorics import revolving_door, revolving_door_sets


@pytest.mark.parametrize("n", range(0, 11))
def test_revolving_door_visits_every_subset_once(n):
    for t in range(n + 1):
        walk = list(revolving_door_sets(n, t))
        assert len(walk) == comb(n, t)
        assert set(walk) == {frozenset(c) for c in combinations(range(n), t)}


@pytest.mark.parametrize("n,t", [(6, 3), (9, 4), (12, 7), (5, 1)])
def test_each_step_swaps_one_element(n, t):
    cur = set(range(t))
    for out, inn in revolving_door(n, t):
        assert out in cur and inn not in cur
        cur.remove(out)
        cur.add(inn)


def test_bad_arguments():
    with pytest.raises(ValueError):
        list(revolving_door(3, 4))
