import numpy as np
import pytest

from xcross.key_schedule import reference_key


@pytest.fixture(scope="session")
def ref_key():
    return reference_key()


@pytest.fixture()
def rng():
    return np.random.default_rng(0xC0FFEE)
