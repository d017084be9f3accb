"""Core deck model: normalization, axiom validation, stars, and card partitions.

A deck is a finite list of equal-size symbol sets ("cards") in which any two
cards share exactly one symbol and every symbol sits on at least two cards.
Symbols are stored as dense integer ids; every card carries both a sorted
tuple and a bitmask so that intersection counting is a couple of word ops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class DeckError(Exception):
    """Base class for errors raised on bad deck input."""


class MalformedCardError(DeckError):
    """A raw card lists the same symbol twice."""


class InvariantViolation(RuntimeError):
    """Two provably-equivalent computations disagreed.

    This signals a bug in this package, never bad input: the redundant
    cross-checks exist precisely to catch such bugs.
    """


@dataclass(frozen=True)
class Card:
    """One card: a set of symbols kept as a sorted id tuple plus a bitmask."""

    symbols: tuple[int, ...]
    mask: int

    @property
    def size(self) -> int:
        return len(self.symbols)

    def overlap(self, other: "Card") -> int:
        """Number of symbols shared with another card."""
        return (self.mask & other.mask).bit_count()

    def __contains__(self, symbol: int) -> bool:
        return bool(self.mask >> symbol & 1)


@dataclass(frozen=True)
class Deck:
    """An ordered collection of cards over dense integer symbol ids.

    ``tokens`` maps each dense id back to its original symbol token and
    ``rows`` keeps the symbol order of the input, so rendering reproduces the
    source text exactly.  ``aligned[s]`` is the bitmask of symbols sharing at
    least one card with ``s`` (``s`` itself included).  ``order`` is the size
    of the first card; uniformity is an axiom checked by :func:`validate`,
    not assumed here.
    """

    cards: tuple[Card, ...]
    order: int
    length: int
    tokens: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]
    aligned: tuple[int, ...]

    @property
    def card_count(self) -> int:
        return len(self.cards)

    def card_tokens(self, index: int) -> tuple[str, ...]:
        """Tokens of one card, in original input order."""
        return tuple(self.tokens[s] for s in self.rows[index])


def normalize(raw_cards: Sequence[Sequence[object]]) -> Deck:
    """Map tokens to dense ids in first-occurrence order and build the deck.

    Tokens are compared by their string form.  Derived fields (order, length,
    alignment) are populated but no axiom is checked; see :func:`validate`.

    Raises ``MalformedCardError`` when a card repeats a token and
    ``ValueError`` on an empty deck or an empty card.
    """
    if not raw_cards:
        raise ValueError("a deck needs at least one card")
    ids: dict[str, int] = {}
    tokens: list[str] = []
    rows: list[tuple[int, ...]] = []
    for row_index, raw in enumerate(raw_cards):
        if not raw:
            raise ValueError(f"card {row_index} is empty")
        row: list[int] = []
        seen: set[str] = set()
        for item in raw:
            token = str(item)
            if token in seen:
                raise MalformedCardError(f"card {row_index} repeats symbol {token!r}")
            seen.add(token)
            if token not in ids:
                ids[token] = len(tokens)
                tokens.append(token)
            row.append(ids[token])
        rows.append(tuple(row))

    cards = []
    for row in rows:
        mask = 0
        for s in row:
            mask |= 1 << s
        cards.append(Card(symbols=tuple(sorted(row)), mask=mask))

    length = len(tokens)
    aligned = [0] * length
    for card in cards:
        for s in card.symbols:
            aligned[s] |= card.mask

    return Deck(
        cards=tuple(cards),
        order=cards[0].size,
        length=length,
        tokens=tuple(tokens),
        rows=tuple(rows),
        aligned=tuple(aligned),
    )


def deck_from_cards(cards: Sequence[Sequence[int]]) -> Deck:
    """Build a deck from integer cards, naming each symbol by its integer."""
    return normalize([[str(s) for s in card] for card in cards])


def symbol_multiplicities(deck: Deck) -> list[int]:
    """How many cards each symbol sits on, indexed by dense id."""
    counts = [0] * deck.length
    for card in deck.cards:
        for s in card.symbols:
            counts[s] += 1
    return counts


@dataclass(frozen=True)
class Violation:
    """One broken axiom with enough witness data to reproduce it."""

    axiom: str
    message: str
    cards: tuple[int, ...] = ()
    symbols: tuple[int, ...] = ()
    count: int | None = None


@dataclass(frozen=True)
class ValidationResult:
    valid: bool
    violations: tuple[Violation, ...]


def validate(deck: Deck) -> ValidationResult:
    """Check the five deck axioms and report every violation, not just the first.

    D1: any two cards share exactly one symbol.  D2: every symbol is on at
    least two cards.  D3: every card has at least two symbols.  D4: all cards
    have the same size.  D5: at least one symbol exists.  A single-card deck
    is always rejected because D2 cannot hold on it.
    """
    violations: list[Violation] = []
    if deck.length < 1:
        violations.append(Violation("D5", "the deck has no symbols", count=0))
    for i, card in enumerate(deck.cards):
        if card.size < 2:
            violations.append(
                Violation("D3", f"card {i} has only {card.size} symbol(s)", cards=(i,), count=card.size)
            )
        if card.size != deck.order:
            violations.append(
                Violation(
                    "D4",
                    f"card {i} has {card.size} symbols, the first card has {deck.order}",
                    cards=(i,),
                    count=card.size,
                )
            )
    for i in range(deck.card_count):
        for j in range(i + 1, deck.card_count):
            common = deck.cards[i].mask & deck.cards[j].mask
            size = common.bit_count()
            if size != 1:
                shared = tuple(s for s in deck.cards[i].symbols if common >> s & 1)
                names = ", ".join(deck.tokens[s] for s in shared) or "nothing"
                violations.append(
                    Violation(
                        "D1",
                        f"cards {i} and {j} share {size} symbols ({names})",
                        cards=(i, j),
                        symbols=shared,
                        count=size,
                    )
                )
    for s, m in enumerate(symbol_multiplicities(deck)):
        if m < 2:
            violations.append(
                Violation("D2", f"symbol {deck.tokens[s]!r} appears on {m} card(s)", symbols=(s,), count=m)
            )
    return ValidationResult(valid=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class Star:
    """The cards containing one fixed symbol, in deck order."""

    center: int
    card_indices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.card_indices)


def star(deck: Deck, symbol: int) -> Star:
    if not 0 <= symbol < deck.length:
        raise ValueError(f"symbol id {symbol} out of range for deck length {deck.length}")
    members = tuple(i for i, card in enumerate(deck.cards) if symbol in card)
    return Star(center=symbol, card_indices=members)


def partition_by_card(deck: Deck, card_index: int) -> list[tuple[int, ...]]:
    """Split the other cards into one pack per symbol of the chosen card.

    Pack ``i`` collects the cards sharing the pivot's ``i``-th smallest
    symbol, pivot excluded.  On a valid deck the packs are pairwise disjoint
    and cover the remaining ``c - 1`` cards.
    """
    if not 0 <= card_index < deck.card_count:
        raise ValueError(f"card index {card_index} out of range")
    packs = []
    for s in deck.cards[card_index].symbols:
        packs.append(tuple(i for i in star(deck, s).card_indices if i != card_index))
    return packs
