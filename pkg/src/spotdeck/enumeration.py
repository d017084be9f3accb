"""Isomorph-free exhaustive generation, canonical labeling, and census reports.

Two decks are isomorphic when a symbol bijection maps cards onto cards.  The
canonical form is the lexicographically smallest relabeling of the sorted
card list; the generator emits each isomorphism class exactly once by only
growing normal-form structures (cards strictly increasing, new symbols
numbered on first use) and keeping the completed ones that equal their own
canonical form.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .analysis import classify, fundamental_number, multiplicities
from .deck import Deck, deck_from_cards
from .maximality import is_maximal


@dataclass(frozen=True)
class CanonicalForm:
    """Smallest relabeling of a deck: a sorted tuple of sorted id tuples."""

    cards: tuple[tuple[int, ...], ...]

    @property
    def card_count(self) -> int:
        return len(self.cards)

    @property
    def length(self) -> int:
        return 1 + max(s for card in self.cards for s in card) if self.cards else 0

    def digest(self) -> str:
        text = ";".join(",".join(map(str, card)) for card in self.cards)
        return hashlib.sha256(text.encode()).hexdigest()[:12]

    def to_deck(self) -> Deck:
        return deck_from_cards(self.cards)


def canonical_form(deck: Deck) -> CanonicalForm:
    """Minimize the sorted card list over all symbol relabelings."""
    form = _minimal_form(deck.order, deck.length, [card.symbols for card in deck.cards])
    return CanonicalForm(cards=form)


class _FoundSmaller(Exception):
    """Raised to abort a seeded canonicity check once any smaller form appears."""


def _minimal_form(
    n: int,
    length: int,
    cards: list[tuple[int, ...]],
    seed: list[tuple[int, ...]] | None = None,
    stop_below_seed: bool = False,
) -> tuple[tuple[int, ...], ...]:
    """Branch-and-bound over which old symbol receives each successive new id.

    The bound pads every partially relabeled card with the smallest ids it
    could still receive; assigned ids always sit below pending ones, so each
    padded card is an elementwise lower bound of its completion and a branch
    whose padded sorted list is not below the incumbent is dead.  ``seed``
    primes the incumbent (it must be an achievable form); with
    ``stop_below_seed`` the search raises ``_FoundSmaller`` as soon as any
    strictly smaller complete form turns up, which makes "is this deck its
    own canonical form" much cheaper than full canonicalization.
    """
    member_cards: list[list[int]] = [[] for _ in range(length)]
    for index, card in enumerate(cards):
        for s in card:
            member_cards[s].append(index)
    best: list[tuple[int, ...]] | None = list(seed) if seed is not None else None

    # filler[k][need] completes a card missing `need` symbols with k, k+1, ...
    filler = [
        [tuple(range(k, k + need)) for need in range(n + 1)] for k in range(length + 1)
    ]

    def padded(partials: list[tuple[int, ...]], k: int) -> list[tuple[int, ...]]:
        fills = filler[k]
        out = [part + fills[n - len(part)] for part in partials]
        out.sort()
        return out

    def search(k: int, partials: list[tuple[int, ...]], free: list[int]) -> None:
        nonlocal best
        if k == length:
            bound = padded(partials, k)
            if best is None or bound < best:
                best = bound
                if stop_below_seed:
                    raise _FoundSmaller
            return
        ranked = []
        for s in free:
            child = list(partials)
            for index in member_cards[s]:
                child[index] = child[index] + (k,)
            ranked.append((padded(child, k + 1), s, child))
        ranked.sort(key=lambda item: item[:2])
        for child_bound, s, child in ranked:
            if best is not None and child_bound >= best:
                break  # ranked ascending, the rest cannot beat the best either
            search(k + 1, child, [t for t in free if t != s])

    search(0, [()] * len(cards), list(range(length)))
    assert best is not None
    return tuple(best)


def _is_self_canonical(n: int, length: int, cards: list[tuple[int, ...]]) -> bool:
    """True when the card list equals its own canonical form.

    Seeds the incumbent with the list itself: every branch not strictly
    below it dies immediately, and the first smaller form aborts the search.
    """
    try:
        _minimal_form(n, length, cards, seed=list(cards), stop_below_seed=True)
    except _FoundSmaller:
        return False
    return True


@dataclass(frozen=True)
class EnumerationResult:
    forms: tuple[CanonicalForm, ...]
    complete: bool
    nodes: int


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        if self.limit is not None and self.used >= self.limit:
            return False
        self.used += 1
        return True


def _improvable_by_transposition(cards: list[tuple[int, ...]], length: int) -> bool:
    """True when swapping some symbol pair already gives a smaller form.

    Cheap necessary filter run before the full canonical search: a state it
    rejects is certainly not its own canonical form.
    """
    for i in range(length):
        for j in range(i + 1, length):
            swapped = sorted(
                tuple(sorted(i if s == j else j if s == i else s for s in card))
                for card in cards
            )
            if swapped < cards:
                return True
    return False


def enumerate_decks(order: int, max_cards: int, node_budget: int | None = None) -> EnumerationResult:
    """All decks of the given order with at most ``max_cards`` cards, one per class.

    Cards are appended in strictly increasing lexicographic order and new
    symbols take the next unused ids, so every structure in the tree is in
    normal form.  The one-shared-symbol axiom and uniform card size hold at
    every step; only the two-cards-per-symbol axiom may be pending while the
    structure is partial.  A completed structure is emitted when it is fully
    valid and equal to its own canonical form.

    The node budget counts visited search states; an exhausted budget stops
    the walk deterministically and flags the result incomplete.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    if max_cards < 1:
        raise ValueError("max_cards must be positive")
    budget = _Budget(node_budget)
    found: list[CanonicalForm] = []
    overflow = False

    state_cards: list[tuple[int, ...]] = [tuple(range(order))]
    counts: list[int] = [1] * order
    aligned: list[int] = [(1 << order) - 1] * order
    stars: list[int] = [1] * order

    def candidates() -> list[tuple[int, ...]]:
        """Next cards: a transversal of existing symbols plus fresh ids, above the last card."""
        c = len(state_cards)
        full = (1 << c) - 1
        used = len(counts)
        last = state_cards[-1]
        outs: list[tuple[int, ...]] = []

        def pick(chosen: list[int], covered: int, banned: int) -> None:
            if covered == full:
                fill = order - len(chosen)
                card = tuple(sorted(chosen)) + tuple(range(used, used + fill))
                if card > last:
                    outs.append(card)
                return
            if len(chosen) == order:
                return
            rest = ~covered & full
            pivot = (rest & -rest).bit_length() - 1
            for s in state_cards[pivot]:
                if banned >> s & 1:
                    continue
                pick(chosen + [s], covered | stars[s], banned | aligned[s])

        pick([], 0, 0)
        outs.sort()
        return outs

    def push(card: tuple[int, ...]) -> tuple[list[tuple[int, int]], int]:
        fresh = sum(1 for s in card if s >= len(counts))
        for _ in range(fresh):
            counts.append(0)
            aligned.append(0)
            stars.append(0)
        mask = 0
        for s in card:
            mask |= 1 << s
        undo = []
        bit = 1 << len(state_cards)
        for s in card:
            undo.append((s, aligned[s]))
            aligned[s] |= mask
            counts[s] += 1
            stars[s] |= bit
        state_cards.append(card)
        return undo, fresh

    def pop(undo: list[tuple[int, int]], fresh: int) -> None:
        state_cards.pop()
        bit = 1 << len(state_cards)
        for s, previous in undo:
            aligned[s] = previous
            counts[s] -= 1
            stars[s] &= ~bit
        for _ in range(fresh):
            counts.pop()
            aligned.pop()
            stars.pop()

    def grow() -> None:
        nonlocal overflow
        if not budget.spend():
            overflow = True
            return
        if (
            len(state_cards) >= 2
            and all(m >= 2 for m in counts)
            and not _improvable_by_transposition(state_cards, len(counts))
            and _is_self_canonical(order, len(counts), state_cards)
        ):
            found.append(CanonicalForm(cards=tuple(state_cards)))
        if len(state_cards) >= max_cards:
            return
        for card in candidates():
            undo, fresh = push(card)
            grow()
            pop(undo, fresh)
            if overflow:
                return

    grow()
    found.sort(key=lambda form: (len(form.cards), form.cards))
    return EnumerationResult(forms=tuple(found), complete=not overflow, nodes=budget.used)


@dataclass(frozen=True)
class CensusEntry:
    """One isomorphism class with its headline statistics and flags.

    ``classes_with_key`` counts the classes sharing this entry's whole
    (order, cards, length, histogram, flags) key; anything above 1 means the
    key does not pin down the deck.
    """

    order: int
    card_count: int
    length: int
    histogram: tuple[tuple[int, int], ...]
    symmetric: bool
    paired: bool
    maximal: bool
    digest: str
    classes_with_key: int = 1


@dataclass(frozen=True)
class CensusReport:
    order: int
    entries: tuple[CensusEntry, ...]
    collisions: tuple[tuple[tuple[int, int, int], tuple[str, ...]], ...]
    complete: bool
    nodes: int


def census(order: int, max_cards: int | None = None, node_budget: int | None = None) -> CensusReport:
    """Group all classes of the given order and report (order, cards, length) collisions.

    A collision is a triple realized by at least two non-isomorphic decks,
    which would answer the uniqueness question negatively.  ``max_cards``
    defaults to the fundamental number, an upper bound no deck of the order
    can exceed.
    """
    if max_cards is None:
        max_cards = fundamental_number(order)
    result = enumerate_decks(order, max_cards, node_budget)
    entries: list[CensusEntry] = []
    for form in result.forms:
        deck = form.to_deck()
        table = multiplicities(deck)
        tags = classify(deck)
        verdict = is_maximal(deck)
        entries.append(
            CensusEntry(
                order=order,
                card_count=deck.card_count,
                length=deck.length,
                histogram=tuple(sorted(table.histogram.items())),
                symmetric=tags.symmetric,
                paired=tags.paired,
                maximal=verdict.exact,
                digest=form.digest(),
            )
        )
    key_counts: dict[tuple, int] = {}
    for entry in entries:
        key = (entry.card_count, entry.length, entry.histogram, entry.symmetric, entry.paired, entry.maximal)
        key_counts[key] = key_counts.get(key, 0) + 1
    entries = [
        CensusEntry(
            order=e.order,
            card_count=e.card_count,
            length=e.length,
            histogram=e.histogram,
            symmetric=e.symmetric,
            paired=e.paired,
            maximal=e.maximal,
            digest=e.digest,
            classes_with_key=key_counts[
                (e.card_count, e.length, e.histogram, e.symmetric, e.paired, e.maximal)
            ],
        )
        for e in entries
    ]
    by_triple: dict[tuple[int, int, int], list[str]] = {}
    for entry in entries:
        by_triple.setdefault((entry.order, entry.card_count, entry.length), []).append(entry.digest)
    collisions = tuple(
        (triple, tuple(digests))
        for triple, digests in sorted(by_triple.items())
        if len(digests) > 1
    )
    return CensusReport(
        order=order,
        entries=tuple(entries),
        collisions=collisions,
        complete=result.complete,
        nodes=result.nodes,
    )


@dataclass(frozen=True)
class LengthProbeReport:
    """Outcome of hunting for a deck longer than its fundamental number."""

    order: int
    fundamental: int
    classes_seen: int
    max_length: int
    witness: CanonicalForm | None
    exhausted: bool
    nodes: int

    @property
    def verdict(self) -> str:
        if self.witness is not None:
            return "WITNESS"
        return "exhausted" if self.exhausted else "budget-truncated"


def probe_length_conjecture(order: int, node_budget: int | None = None) -> LengthProbeReport:
    """Search every deck of the order for a length above the fundamental number.

    The card count of any deck is bounded by the fundamental number, so
    enumerating up to that many cards covers the whole order.  A witness
    would answer an open question and is surfaced loudly; absence is asserted
    only when the search ran to exhaustion.
    """
    delta = fundamental_number(order)
    result = enumerate_decks(order, delta, node_budget)
    witness = None
    max_length = 0
    for form in result.forms:
        max_length = max(max_length, form.length)
        if form.length > delta and witness is None:
            witness = form
    return LengthProbeReport(
        order=order,
        fundamental=delta,
        classes_seen=len(result.forms),
        max_length=max_length,
        witness=witness,
        exhausted=result.complete,
        nodes=result.nodes,
    )
