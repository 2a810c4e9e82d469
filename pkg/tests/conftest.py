import pytest

from omlkit.enumeration import EnumerationTask, enumerate_structures


@pytest.fixture(scope="session")
def omls_up_to_8():
    """All orthomodular lattices up to size 8, one per isomorphism class."""
    return list(enumerate_structures(EnumerationTask("oml", 8)))


@pytest.fixture(scope="session")
def lattices_up_to_4():
    return list(enumerate_structures(EnumerationTask("lattice", 4)))
