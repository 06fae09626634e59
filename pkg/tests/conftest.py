import random
from fractions import Fraction as Q

import pytest

from symred import lie, poisson


@pytest.fixture(scope="session")
def sl2():
    return lie.build_chevalley("A", 1)


@pytest.fixture(scope="session")
def sl3():
    return lie.build_chevalley("A", 2)


@pytest.fixture(scope="session")
def sl2_efh(sl2):
    return sl2.root_vector((1,)), sl2.basis_vec(0), sl2.root_vector((-1,))


@pytest.fixture()
def rng():
    return random.Random(20240817)


@pytest.fixture(scope="session")
def kks2(sl2):
    return poisson.kks_model(sl2)


@pytest.fixture(scope="session")
def kks3(sl3):
    return poisson.kks_model(sl3)


def subregular_point(sl3, a=1, perm=(0, 1, 2)):
    """diag entries (a, a, -2a) arranged by perm, as a Lie algebra vector."""
    vals = [Q(a), Q(a), Q(-2 * a)]
    m = [[Q(0)] * 3 for _ in range(3)]
    for i in range(3):
        m[i][i] = vals[perm[i]]
    return sl3.from_matrix(tuple(tuple(r) for r in m))
