"""Core domain types: texts, substrings, repeat records, measure reports.

Positions are 1-based throughout, matching the usual string-combinatorics
convention. Symbols are raw byte values (0..255), so the alphabet size is
always at most 256.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property


@dataclass(frozen=True)
class Text:
    """An immutable nonempty byte string together with its derived alphabet."""

    data: bytes

    def __post_init__(self):
        if not isinstance(self.data, bytes):
            object.__setattr__(self, "data", bytes(self.data))
        if len(self.data) == 0:
            raise ValueError("empty texts are rejected; measures need n >= 1")

    @property
    def n(self) -> int:
        return len(self.data)

    def __len__(self) -> int:
        return len(self.data)

    @cached_property
    def alphabet(self) -> frozenset[int]:
        return frozenset(self.data)

    @property
    def sigma(self) -> int:
        return len(self.alphabet)

    def reversed(self) -> "Text":
        return Text(self.data[::-1])

    def symbol(self, pos: int) -> int:
        """Symbol at 1-based position `pos`."""
        if not 1 <= pos <= self.n:
            raise IndexError(f"position {pos} out of range 1..{self.n}")
        return self.data[pos - 1]


def as_text(t: "Text | bytes | bytearray") -> Text:
    return t if isinstance(t, Text) else Text(bytes(t))


EPSILON_START = 1


@dataclass(frozen=True, order=True)
class Substring:
    """A (start, length) reference into a text; (1, 0) is the canonical empty string."""

    start: int  # 1-based
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be >= 0")
        if self.length == 0 and self.start != EPSILON_START:
            raise ValueError("the empty substring is canonically (1, 0)")
        if self.length > 0 and self.start < 1:
            raise ValueError("start must be >= 1")

    @property
    def is_empty(self) -> bool:
        return self.length == 0

    def materialize(self, t: Text) -> bytes:
        if self.start + self.length - 1 > t.n:
            raise IndexError(f"substring {self} does not fit in text of length {t.n}")
        return t.data[self.start - 1 : self.start - 1 + self.length]


EPSILON = Substring(EPSILON_START, 0)


@dataclass(frozen=True)
class RepeatRecord:
    """One maximal repeat: its occurrences and extension sets.

    For nonempty repeats the extension sets are derived from the occurrence
    list: left_ext = {T[i-1] : i in occurrences, i > 1} and right_ext =
    {T[i+length] : i in occurrences, i+length <= n}. The empty repeat is
    special-cased: it occurs everywhere, is both prefix and suffix, and has
    the full alphabet as extensions on both sides (a maps to "a" which
    trivially occurs, for every letter a of the text).
    """

    repeat: Substring
    occurrences: tuple[int, ...]
    left_ext: frozenset[int]
    right_ext: frozenset[int]
    is_prefix: bool
    is_suffix: bool

    def string(self, t: Text) -> bytes:
        return self.repeat.materialize(t)

    @property
    def length(self) -> int:
        return self.repeat.length


def epsilon_record(t: Text) -> RepeatRecord:
    """The record of the empty repeat for a text of length n >= 1."""
    return RepeatRecord(
        repeat=EPSILON,
        occurrences=tuple(range(1, t.n + 1)),
        left_ext=t.alphabet,
        right_ext=t.alphabet,
        is_prefix=True,
        is_suffix=True,
    )


def record_from_positions(t: Text, length: int, starts: list[int]) -> RepeatRecord:
    """Build a RepeatRecord for a nonempty repeat from its 1-based start positions."""
    if length < 1:
        raise ValueError("use epsilon_record for the empty repeat")
    starts = sorted(starts)
    data = t.data
    left = frozenset(data[i - 2] for i in starts if i > 1)
    right = frozenset(data[i + length - 1] for i in starts if i + length - 1 < t.n)
    return RepeatRecord(
        repeat=Substring(starts[0], length),
        occurrences=tuple(starts),
        left_ext=left,
        right_ext=right,
        is_prefix=starts[0] == 1,
        is_suffix=(t.n - length + 1) in starts,
    )


@dataclass(frozen=True)
class MeasureReport:
    """Repetitiveness measures of one text.

    mr counts maximal repeats (empty repeat included); er and el sum the
    right- and left-extension counts over all of them.
    """

    n: int
    sigma: int
    mr: int
    er: int
    el: int
    ratio: Fraction

    @classmethod
    def from_counts(cls, n: int, sigma: int, mr: int, er: int, el: int) -> "MeasureReport":
        return cls(n=n, sigma=sigma, mr=mr, er=er, el=el, ratio=Fraction(el, er))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "sigma": self.sigma,
            "mr": self.mr,
            "er": self.er,
            "el": self.el,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
        }


def alphabet(t: Text | bytes) -> frozenset[int]:
    """The set of distinct symbols of a text."""
    return as_text(t).alphabet


def occurrences(t: Text | bytes, s: Substring | bytes) -> list[int]:
    """All 1-based positions where `s` occurs in `t`, in increasing order.

    Overlapping occurrences count. The empty string occurs at every position
    1..n by convention.
    """
    t = as_text(t)
    pattern = s.materialize(t) if isinstance(s, Substring) else bytes(s)
    if len(pattern) == 0:
        return list(range(1, t.n + 1))
    out = []
    pos = t.data.find(pattern)
    while pos != -1:
        out.append(pos + 1)
        pos = t.data.find(pattern, pos + 1)
    return out
