from __future__ import annotations

import pytest

from sample_decks import FANO_ROWS, THREE_BLOCK_ROWS, TWO_SYM_3_ROWS
from spotdeck.deck import normalize


@pytest.fixture
def fano():
    return normalize(FANO_ROWS)


@pytest.fixture
def fano_minus_one():
    return normalize(FANO_ROWS[1:])


@pytest.fixture
def three_block():
    return normalize(THREE_BLOCK_ROWS)


@pytest.fixture
def two_sym_3():
    return normalize(TWO_SYM_3_ROWS)
