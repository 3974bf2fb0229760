import random

import pytest

from curvelift import (BiPoly, implicitize_all, polygon_contains, polygon_desc,
                       resultant_implicitize, truncation)
from curvelift.errors import OracleBoundError
from helpers import rand_branch

CUSP = BiPoly({(0, 2): 1, (3, 0): -1})


def test_cusp_resultant(cusp):
    res = resultant_implicitize(truncation(cusp, 1))
    assert res.monic == CUSP
    assert res.raw == CUSP or res.raw == -CUSP


def test_reference_level2_resultant(branch12):
    res = resultant_implicitize(truncation(branch12, 2))
    assert res.monic == CUSP ** 3 + BiPoly({(5, 3): -2, (8, 1): -6, (10, 0): 1})


def test_oracle_bound(branch12):
    with pytest.raises(OracleBoundError):
        resultant_implicitize(truncation(branch12, 3), bound=6)


def test_resultant_vanishes_and_fits_polygon(branch6_tails):
    for i in (1, 2):
        p = truncation(branch6_tails, i)
        res = resultant_implicitize(p)
        assert p.pullback(res.monic).is_zero
        pd = polygon_desc(branch6_tails, i)
        assert all(polygon_contains(key, pd) for key in res.monic.support())


def test_oracle_equals_chain_random():
    rng = random.Random(0x20)
    for _ in range(25):
        b = rand_branch(rng, max_levels=2, max_k=9)
        chain = implicitize_all(b, verify=False)
        for i in range(1, b.cd.s + 1):
            if b.cd.es[i] > 12:
                continue
            res = resultant_implicitize(truncation(b, i))
            assert res.monic == chain.fs[i - 1]
