from fractions import Fraction

from hypothesis import strategies as st

F = Fraction


def rationals(max_num=20, max_den=12, min_value=None):
    q = st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))
    if min_value is not None:
        q = q.map(lambda x: abs(x) + min_value)
    return q


def vec(*xs):
    return tuple(Fraction(x) for x in xs)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
