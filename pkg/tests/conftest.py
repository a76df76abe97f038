import pytest

from ascseq.core import LENGTH3_PATTERNS


@pytest.fixture(scope="session")
def length3_pairs():
    pats = list(LENGTH3_PATTERNS)
    return [(p, q) for i, p in enumerate(pats) for q in pats[i + 1:]]
