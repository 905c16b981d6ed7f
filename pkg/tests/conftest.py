import time

import pytest

from groefan.polynomial import Polynomial
from groefan.groebner import Ideal
from groefan.fan import enumerate_restricted_fan, extended_fan_slice
from groefan.regularity import check_regularity
from groefan.certificate import theorem_one_ideal


def poly(terms, n):
    return Polynomial(terms, nvars=n)


@pytest.fixture(scope='session')
def theorem_ideal():
    return theorem_one_ideal()


@pytest.fixture(scope='session')
def theorem_fan(theorem_ideal):
    t0 = time.time()
    graph = enumerate_restricted_fan(theorem_ideal)
    graph.elapsed = time.time() - t0
    return graph


@pytest.fixture(scope='session')
def theorem_regularity(theorem_fan):
    return check_regularity(theorem_fan)


@pytest.fixture(scope='session')
def theorem_extended(theorem_ideal):
    return extended_fan_slice(theorem_ideal)
