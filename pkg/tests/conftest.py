"""Session fixtures: generated regular codes reused across test modules.

Generation parameters were chosen so every fixture builds in well under a
second; seeds are fixed so all expectations stay reproducible.
"""

import pytest

from ldpcbounds import build_tanner_graph, generate_code


@pytest.fixture(scope="session")
def code_g3_girth8_n96():
    return generate_code(96, 3, 4, 8, seed=1)


@pytest.fixture(scope="session")
def code_g3_girth8_n60():
    return generate_code(60, 3, 4, 8, seed=1)


@pytest.fixture(scope="session")
def code_g3_girth8_n30():
    return generate_code(30, 3, 3, 8, seed=7)


@pytest.fixture(scope="session")
def code_g3_girth6_n24():
    return generate_code(24, 3, 4, 6, seed=5)


@pytest.fixture(scope="session")
def code_g3_girth6_n12():
    return generate_code(12, 3, 4, 6, seed=1)


@pytest.fixture(scope="session")
def code_g4_girth8_n128():
    return generate_code(128, 4, 4, 8, seed=1)


@pytest.fixture(scope="session")
def code_g4_girth6_n32():
    return generate_code(32, 4, 4, 6, seed=3)


@pytest.fixture(scope="session")
def code_g5_girth6_n50():
    return generate_code(50, 5, 5, 6, seed=2)


@pytest.fixture(scope="session")
def code_g5_girth6_n100():
    return generate_code(100, 5, 5, 6, seed=2)


@pytest.fixture(scope="session")
def eight_cycle_code():
    # 4 variables and 4 checks joined in a single 8-cycle; 1111 is a codeword
    edges = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (0, 3)]
    return build_tanner_graph(edges)
