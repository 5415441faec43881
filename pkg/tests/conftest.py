import pytest

from nctop.opens import Universe
from nctop.quiver import quiver_a2, quiver_k2, quiver_no_arrows, quiver_one_loop
from nctop.rep import direct_sum, enumerate_universe, representation, simple_rep


@pytest.fixture(scope="session")
def a2():
    return quiver_a2()


@pytest.fixture(scope="session")
def k2():
    return quiver_k2()


@pytest.fixture(scope="session")
def n2():
    return quiver_no_arrows(2)


@pytest.fixture(scope="session")
def l1():
    return quiver_one_loop()


@pytest.fixture(scope="session")
def x_ind(a2):
    """The non-split extension 0 -> S2 -> X -> S1 -> 0 on 1 -> 2."""
    return representation(a2, 2, [1, 1], {"a": [[1]]})


@pytest.fixture(scope="session")
def s1_s2(a2):
    return direct_sum(simple_rep(a2, 2, "S1"), simple_rep(a2, 2, "S2"))


@pytest.fixture(scope="session")
def zero_11(a2):
    return representation(a2, 2, [1, 1])


_UNIVERSES = {}


@pytest.fixture(scope="session")
def universe():
    """universe(q, max_dim) -> cached split-only Universe over F_2."""

    def get(q, max_dim=3, p=2):
        key = (q, max_dim, p)
        if key not in _UNIVERSES:
            _UNIVERSES[key] = Universe(enumerate_universe(q, p, max_dim, split_only=True))
        return _UNIVERSES[key]

    return get


CRITERIA: dict[int, list[tuple[str, bool, str]]] = {}


@pytest.fixture(scope="session")
def record():
    """record(n, part, ok, note): one sub-result of acceptance criterion n."""

    def rec(number, part, ok, note=""):
        CRITERIA.setdefault(number, []).append((part, bool(ok), note))
        return ok

    return rec


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        parts = CRITERIA[n]
        ok = all(p[1] for p in parts)
        body = "; ".join(
            f"{part}: {'pass' if good else 'FAIL'}{' (' + note + ')' if note else ''}"
            for part, good, note in parts
        )
        terminalreporter.write_line(f"criterion {n:>2} {'PASS' if ok else 'FAIL'} | {body}")
