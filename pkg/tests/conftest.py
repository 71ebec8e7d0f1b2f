# cohomotopy\tests\conftest.py

import pytest

from cohomotopy.cochain import DatumBuilder, load_datum
from cohomotopy.utils import CorpusConfig


@pytest.fixture
def corpus_file():
    """Path of a corpus file by stem; honours COHOMOTOPY_CORPUS."""
    return CorpusConfig.get_corpus_file


@pytest.fixture
def corpus():
    """Load a corpus datum by stem."""
    def load(name: str):
        return load_datum(CorpusConfig.get_corpus_file(name))
    return load


@pytest.fixture
def s4xs3xs1():
    """S⁴×S³×S¹ as a String datum with n = 5; H⁴ = ℤ² keeps Θ on H⁴ open."""
    def build(**overrides):
        builder = (DatumBuilder.create("s4xs3xs1", 8, 3, "String")
                   .with_integral(3, free=1)
                   .with_integral(4, free=2)
                   .with_integral(5, free=1)
                   .with_integral(7, free=1)
                   .with_integral(8, free=1)
                   .with_ring({
                       "generators": [{"name": "x", "degree": 4}, {"name": "y", "degree": 3},
                                      {"name": "z", "degree": 1}],
                       "truncations": {"x": 2, "y": 2, "z": 2},
                       "top": "x*y*z",
                       "w2": [],
                       "w3": [],
                   })
                   .with_map("rho2", 3, [[1]])
                   .with_map("rho2", 4, [[1, 0], [0, 1]])
                   .with_map("rho2", 5, [[1]])
                   .with_map("rho2", 7, [[1]])
                   .with_map("rho2", 8, [[1]])
                   .with_map("bockstein", 3, [[0], [0]])
                   .with_map("bockstein", 4, [[0, 0]])
                   .with_map("bockstein", 7, [[0]]))
        if overrides:
            builder.with_overrides(**overrides)
        return builder.build()
    return build
