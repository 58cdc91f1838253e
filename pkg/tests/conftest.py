import pytest

from hgaform.facering import SimplicialPoset


@pytest.fixture
def square():
    return SimplicialPoset.from_complex([1, 2, 3, 4], [[1, 2], [2, 3], [3, 4], [4, 1]], name="square")


@pytest.fixture
def pillow():
    els = [{"id": v, "rank": 1, "vertices": [v]} for v in "abc"]
    els += [{"id": e, "rank": 2, "covers": list(e)} for e in ("ab", "ac", "bc")]
    els += [{"id": t, "rank": 3, "covers": ["ab", "ac", "bc"]} for t in ("T1", "T2")]
    return SimplicialPoset.from_elements(list("abc"), els, name="pillow")


def complex_(vertices, facets, name="K"):
    return SimplicialPoset.from_complex(vertices, facets, name=name)


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
