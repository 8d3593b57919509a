import pytest

from ordlen.oracle import InstanceProfile, random_chain


@pytest.fixture(scope="session")
def chain_corpus():
    """The 200 seeded (module, middle ideal) pairs shared by the big suites."""
    return [random_chain(seed) for seed in range(200)]


@pytest.fixture(scope="session")
def small_corpus():
    """A lighter pool for properties that need submodule construction."""
    profile = InstanceProfile(max_vars=3, max_gens=4, max_degree=3)
    return [random_chain(1000 + seed, profile) for seed in range(40)]
