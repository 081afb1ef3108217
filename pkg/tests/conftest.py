"""Shared fixtures.

The expensive full classification (n <= 4, about three minutes) is computed
once per session and shared by the acceptance tests and anything else that
needs the class table.
"""

import pytest

from tricross import classify, enumerate_projections, load_reference

# Frozen sPD fixtures: the two 2-triple-crossing diagrams and their knots.
T2_1 = "sPD[X[5,4,3,2,1,5|TMB],X[6,2,3,4,1,6|TMB]]"  # trefoil
T2_2 = "sPD[X[5,4,3,2,1,5|BMT],X[6,2,3,4,1,6|TMB]]"  # figure-eight

# Standard double-crossing PD codes.
PD_TREFOIL = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]
PD_FIG8 = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]
PD_KINK = [[1, 2, 2, 1]]


@pytest.fixture(scope="session")
def reference():
    return load_reference()


@pytest.fixture(scope="session")
def run_n4():
    """Full classification for n = 2..4 (the expensive shared fixture)."""
    return classify(4)


@pytest.fixture(scope="session")
def projections_n3():
    return {n: enumerate_projections(n) for n in (2, 3)}
