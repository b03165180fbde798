from __future__ import annotations

import pytest

from bblab import linalg
from bblab.complex import from_facets
from bblab.constructions import corpus_complex


@pytest.fixture(params=sorted(linalg.BACKENDS))
def backend(request):
    return request.param


@pytest.fixture(scope="session")
def torus():
    return corpus_complex("torus_7")


@pytest.fixture(scope="session")
def rp2():
    return corpus_complex("rp2_6")


@pytest.fixture(scope="session")
def klein():
    return corpus_complex("klein_8")


@pytest.fixture(scope="session")
def tetra():
    return corpus_complex("simplex_boundary_3")


@pytest.fixture
def wedge():
    # two tetrahedra sharing a triangle, boundaries glued along that triangle's edges
    return from_facets([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5], [1, 3, 5], [2, 3, 5]])
