import hypothesis.strategies as st
from hypothesis import settings

from oneone.mcg import MCGWord
from oneone.words import Word

settings.register_profile("ci", deadline=None, derandomize=True)
settings.load_profile("ci")

exponents = st.integers(-3, 3).filter(bool)


@st.composite
def pi1_words(draw, letters="abg", max_syllables=12):
    syl = draw(st.lists(st.tuples(st.sampled_from(letters), exponents), max_size=max_syllables))
    return Word(syl)


@st.composite
def mcg_words(draw, max_length=20):
    """Words whose total letter count sum(|e|) is at most ``max_length``."""
    budget = draw(st.integers(0, max_length))
    factors = []
    while budget > 0:
        e = draw(st.integers(-min(3, budget), min(3, budget)).filter(bool))
        factors.append((draw(st.sampled_from("abg")), e))
        budget -= abs(e)
    return MCGWord(factors)


def reduce_letters(letters):
    """Letter-level stack reduction, independent of ``Word``."""
    out = []
    for g, s in letters:
        if out and out[-1] == (g, -s):
            out.pop()
        else:
            out.append((g, s))
    return out


def expand(w):
    return [(g, 1 if e > 0 else -1) for g, e in w.syllables for _ in range(abs(e))]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, title, ok in sorted(RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {title}")
