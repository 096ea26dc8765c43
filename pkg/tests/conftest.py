import os
import random
import re

import hypothesis
import pytest
from hypothesis import strategies as st

from oddsunflower.family import SetFamily

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@st.composite
def families(draw, max_universe=6, max_members=8, min_members=0):
    smallest = max(1, min_members.bit_length())
    n = draw(st.integers(min_value=smallest, max_value=max_universe))
    masks = draw(
        st.sets(
            st.integers(min_value=1, max_value=(1 << n) - 1),
            min_size=min_members,
            max_size=min(max_members, (1 << n) - 1),
        )
    )
    return SetFamily(n, tuple(masks))


@pytest.fixture
def rng():
    return random.Random(20231016)


# acceptance bookkeeping: one line per criterion in the terminal summary
ACCEPTANCE: dict[str, bool] = {}


def _criterion_key(name: str):
    head = re.match(r"\d+", name)
    return (int(head.group()) if head else 0, name)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=_criterion_key):
        mark = "PASS" if ACCEPTANCE[name] else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")
