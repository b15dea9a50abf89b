"""Shared fixtures and hypothesis strategies.

Random fronts are generated by replaying a legal event word with random
choices and then filtering for plane connectivity; sizes are kept small
because every property test runs exact integer machinery downstream.
"""

from __future__ import annotations

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from khfront import FrontDiagram, KhfrontError


@st.composite
def front_words(draw, max_crossings: int = 4, max_cusp_pairs: int = 3):
    """A random valid connected front word."""
    events = []
    k = 0  # current strand count
    l_left = draw(st.integers(min_value=1, max_value=max_cusp_pairs))
    r_left = l_left
    x_left = draw(st.integers(min_value=0, max_value=max_crossings))
    while l_left or r_left or x_left:
        choices = []
        if l_left:
            choices.append("L")
        if x_left and k >= 2:
            choices.append("X")
        # never strand more right cusps than remaining strands allow
        if r_left and k >= 2 and (l_left == 0 or k > 2 or x_left == 0):
            choices.append("R")
        if not choices:
            # only crossings left but too few strands: drop them
            if x_left and k < 2:
                x_left = 0
                continue
            break
        kind = draw(st.sampled_from(choices))
        if kind == "L":
            pos = draw(st.integers(min_value=1, max_value=k + 1))
            k += 2
            l_left -= 1
        else:
            pos = draw(st.integers(min_value=1, max_value=k - 1))
            if kind == "R":
                k -= 2
                r_left -= 1
            else:
                x_left -= 1
        events.append((kind, pos))
    # close whatever is still open
    while k >= 2:
        pos = draw(st.integers(min_value=1, max_value=k - 1))
        events.append(("R", pos))
        k -= 2
    try:
        return FrontDiagram(tuple(events))
    except KhfrontError:
        assume(False)


@pytest.fixture(scope="session")
def corpus_fronts():
    from khfront import BUNDLED

    return [(e, e.front()) for e in BUNDLED]


@pytest.fixture(scope="session")
def quick_fronts():
    from khfront import quick_entries

    return [(e, e.front()) for e in quick_entries()]
