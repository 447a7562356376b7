import pytest

from taitkit.codecs import load_bundled_table
from taitkit.diagram import build_from_crossing_list

# right-handed trefoil under the library's sign convention
TREFOIL_PD = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]
TREFOIL_MIRROR_PD = [(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)]
HOPF_PD = [(4, 1, 3, 2), (2, 3, 1, 4)]
KINK_PD = [(1, 1, 2, 2)]
FIG8_PD = [(6, 1, 7, 2), (2, 5, 3, 6), (8, 4, 1, 3), (4, 8, 5, 7)]
# granny-style connected sum of two trefoils, joined along two bridge edges
GRANNY_PD = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 12, 3),
             (7, 10, 8, 11), (9, 12, 10, 7), (11, 8, 6, 9)]


@pytest.fixture(scope="session")
def trefoil():
    return build_from_crossing_list(TREFOIL_PD)


@pytest.fixture(scope="session")
def trefoil_mirror():
    return build_from_crossing_list(TREFOIL_MIRROR_PD)


@pytest.fixture(scope="session")
def hopf():
    return build_from_crossing_list(HOPF_PD)


@pytest.fixture(scope="session")
def kink():
    return build_from_crossing_list(KINK_PD)


@pytest.fixture(scope="session")
def fig8():
    return build_from_crossing_list(FIG8_PD)


@pytest.fixture(scope="session")
def granny():
    return build_from_crossing_list(GRANNY_PD)


@pytest.fixture(scope="session")
def table():
    return load_bundled_table()


@pytest.fixture(scope="session")
def table_diagrams(table):
    return {doc.name: doc.build() for doc in table}
