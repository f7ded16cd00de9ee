from fractions import Fraction

import pytest
from hypothesis import strategies as st

from multicover.series import EvenSeries


def small_fractions(max_num=20, max_den=6):
    return st.builds(
        Fraction, st.integers(-max_num, max_num), st.integers(1, max_den)
    )


def even_series(order=4, unit=False, zero_constant=False):
    head = small_fractions()
    if unit:
        head = head.filter(lambda x: x != 0)
    if zero_constant:
        head = st.just(Fraction(0))
    tail = st.lists(small_fractions(), min_size=order, max_size=order)
    return st.builds(lambda c, rest: EvenSeries([c] + rest), head, tail)


@pytest.fixture
def cli_run(capsys):
    from multicover.cli import run

    def _run(*argv):
        code = run(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; a summary line per criterion is printed at the end."""

    def _record(ok: bool, detail: str = ""):
        _ACCEPTANCE.append((request.node.name, bool(ok), detail))
        assert ok, detail

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
