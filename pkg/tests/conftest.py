import pytest

from logrewrite import (
    complete_presentation,
    identities_pipeline,
    parse_presentation,
)

Q8_TEXT = """\
generators: a, b
order: shortlex
relators:
  r1 = a^4
  r2 = b^4
  r3 = a b a b^-1
  r4 = a^2 b^2
"""

ABELIAN_TEXT = """\
generators: x, y
order: shortlex
relators:
  r = x y x^-1 y^-1
"""

TREFOIL_TEXT = """\
generators: x, y
order: syllable
relators:
  r = x^3 y^-2
"""


@pytest.fixture(scope="session")
def q8():
    return parse_presentation(Q8_TEXT)


@pytest.fixture(scope="session")
def q8_report(q8):
    return complete_presentation(q8)


@pytest.fixture(scope="session")
def q8_system(q8_report):
    return q8_report.final_system


@pytest.fixture(scope="session")
def q8_pipeline(q8):
    return identities_pipeline(q8)


@pytest.fixture(scope="session")
def abelian():
    return parse_presentation(ABELIAN_TEXT)


@pytest.fixture(scope="session")
def abelian_system(abelian):
    return complete_presentation(abelian).final_system


@pytest.fixture(scope="session")
def trefoil():
    return parse_presentation(TREFOIL_TEXT)


@pytest.fixture(scope="session")
def trefoil_report(trefoil):
    return complete_presentation(trefoil)


@pytest.fixture(scope="session")
def trefoil_system(trefoil_report):
    return trefoil_report.final_system
