"""Reduced words in the free group F_k and finite sets of them.

A word is a tuple of nonzero ints: ``i`` is the generator ``a_i`` and ``-i``
its inverse. String form uses ``a..z`` for generators and ``A..Z`` for
inverses, with ``"1"`` (or the empty string) for the identity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from ..errors import RankMismatch, WordParseError

Word = tuple[int, ...]
IDENTITY: Word = ()


def reduce_word(letters: Iterable[int]) -> Word:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def mul(u: Word, v: Word) -> Word:
    i = 0
    n = min(len(u), len(v))
    while i < n and u[len(u) - 1 - i] == -v[i]:
        i += 1
    return u[: len(u) - i] + v[i:]


def inv(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def norm(w: Word) -> int:
    return len(w)


def letters(rank: int) -> list[int]:
    """Generators and inverses in shortlex letter order ``a, A, b, B, ...``."""
    return [s * i for i in range(1, rank + 1) for s in (1, -1)]


def _letter_key(x: int) -> int:
    return 2 * (abs(x) - 1) + (x < 0)


def shortlex_key(w: Word) -> tuple:
    return (len(w), tuple(_letter_key(x) for x in w))


def check_rank(w: Word, rank: int) -> Word:
    if any(abs(x) > rank or x == 0 for x in w):
        raise RankMismatch(f"word {format_word(w)} uses generators outside F_{rank}")
    return w


def word_ops(u: Word, v: Word, rank: int) -> dict:
    """Product, inverses and norms of two words, all checked against ``rank``."""
    check_rank(u, rank)
    check_rank(v, rank)
    return {"product": mul(u, v), "inverse_u": inv(u), "inverse_v": inv(v), "norm_u": len(u), "norm_v": len(v)}


def parse_word(text: str, rank: int | None = None) -> Word:
    text = text.strip()
    if text in ("", "1", "e"):
        return IDENTITY
    out = []
    for ch in text:
        if not ch.isascii() or not ch.isalpha():
            raise WordParseError(f"invalid letter {ch!r} in word {text!r}")
        idx = ord(ch.lower()) - ord("a") + 1
        out.append(idx if ch.islower() else -idx)
    w = reduce_word(out)
    if rank is not None:
        check_rank(w, rank)
    return w


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return "".join(chr(ord("a") + abs(x) - 1) if x > 0 else chr(ord("A") + abs(x) - 1) for x in w)


@dataclass(frozen=True)
class FGSet:
    """Finite set of reduced words in ``F_rank``."""

    rank: int
    elements: frozenset

    def __post_init__(self):
        for w in self.elements:
            check_rank(w, self.rank)

    @classmethod
    def of(cls, rank: int, words: Iterable[Word]) -> FGSet:
        return cls(rank, frozenset(reduce_word(w) for w in words))

    @classmethod
    def parse(cls, rank: int, text: str) -> FGSet:
        toks = [t for t in text.split(",")]
        words = [parse_word(t, rank) for t in toks]
        if len(set(words)) != len(words):
            raise WordParseError(f"duplicate words in {text!r}")
        return cls(rank, frozenset(words))

    def sorted(self) -> list[Word]:
        return sorted(self.elements, key=shortlex_key)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, w) -> bool:
        return w in self.elements

    def left_translate(self, h: Word) -> FGSet:
        return FGSet(self.rank, frozenset(mul(h, w) for w in self.elements))

    def to_json(self) -> dict:
        return {"rank": self.rank, "elements": [format_word(w) for w in self.sorted()]}


def sphere_words(rank: int, r: int) -> list[Word]:
    """Words of norm exactly ``r`` in shortlex order."""
    if r < 0:
        return []
    level: list[Word] = [IDENTITY]
    alphabet = letters(rank)
    for _ in range(r):
        level = [w + (x,) for w in level for x in alphabet if not (w and w[-1] == -x)]
    return level


def ball_words(rank: int, r: int) -> list[Word]:
    """Words of norm at most ``r`` in shortlex order."""
    out: list[Word] = []
    for j in range(r + 1):
        out.extend(sphere_words(rank, j))
    return out


def sphere(rank: int, r: int) -> FGSet:
    return FGSet(rank, frozenset(sphere_words(rank, r)))


def ball(rank: int, r: int) -> FGSet:
    return FGSet(rank, frozenset(ball_words(rank, r)))


def is_connected(s: FGSet) -> bool:
    """Connectivity of the Cayley subgraph induced on ``s`` (edges ``x -> x a``)."""
    if not s.elements:
        raise ValueError("connectivity of the empty set")
    start = min(s.elements, key=shortlex_key)
    seen = {start}
    todo = deque([start])
    alphabet = letters(s.rank)
    while todo:
        x = todo.popleft()
        for a in alphabet:
            y = mul(x, (a,))
            if y in s.elements and y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(s.elements)
