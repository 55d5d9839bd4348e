"""Ground types for two-colourings of the three-letter cube.

Words are length-n strings over the alphabet {1, 2, 3}.  A combinatorial
line is the three-point set obtained by fixing the letters outside an
"active" coordinate set and letting every active coordinate carry the
same moving letter 1, 2, 3.  The interesting lines here are the ones
whose active set is a single contiguous interval (or a union of at most
m intervals); this module provides the bookkeeping everything else
builds on: ranking, line enumeration, colouring storage, the symmetry
group that respects interval lines, and the on-disk colouring format.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

import numpy as np

ALPHABET = (1, 2, 3)


@dataclass(frozen=True)
class Word:
    """An element of the cube: a tuple of letters from {1, 2, 3}."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("a word needs at least one letter")
        for v in self.letters:
            if v not in (1, 2, 3):
                raise ValueError(f"letter {v!r} outside alphabet {{1,2,3}}")

    @classmethod
    def from_text(cls, text: str) -> "Word":
        try:
            return cls(tuple(int(ch) for ch in text))
        except ValueError as exc:
            raise ValueError(f"bad word text {text!r}") from exc

    @property
    def n(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(str(v) for v in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i: int) -> int:
        """1-indexed coordinate access, matching the maths convention."""
        if not 1 <= i <= len(self.letters):
            raise IndexError(f"coordinate {i} outside 1..{len(self.letters)}")
        return self.letters[i - 1]


def rank(word: Word) -> int:
    """Base-3 rank of a word, coordinate 1 most significant, starting at 0."""
    r = 0
    for v in word.letters:
        r = r * 3 + (v - 1)
    return r


def unrank(index: int, n: int) -> Word:
    """Inverse of :func:`rank` for the cube of dimension n."""
    if not 0 <= index < 3**n:
        raise ValueError(f"rank {index} outside 0..{3 ** n - 1} for n={n}")
    digits = []
    for _ in range(n):
        index, d = divmod(index, 3)
        digits.append(d + 1)
    return Word(tuple(reversed(digits)))


def _check_line_parts(n: int, active: tuple[int, ...], fixed: tuple[tuple[int, int], ...]) -> None:
    if n < 1:
        raise ValueError("line needs dimension n >= 1")
    if not active:
        raise ValueError("line needs a nonempty active set")
    if list(active) != sorted(set(active)):
        raise ValueError("active coordinates must be strictly increasing")
    if active[0] < 1 or active[-1] > n:
        raise ValueError(f"active coordinates {active} outside 1..{n}")
    fixed_pos = [p for p, _ in fixed]
    if list(fixed_pos) != sorted(set(fixed_pos)):
        raise ValueError("fixed coordinates must be strictly increasing")
    for p, v in fixed:
        if not 1 <= p <= n:
            raise ValueError(f"fixed coordinate {p} outside 1..{n}")
        if v not in (1, 2, 3):
            raise ValueError(f"fixed letter {v} outside alphabet")
    if set(fixed_pos) & set(active):
        raise ValueError("active and fixed coordinates overlap")
    if set(fixed_pos) | set(active) != set(range(1, n + 1)):
        raise ValueError("active and fixed coordinates must cover 1..n")


@dataclass(frozen=True)
class Line:
    """A combinatorial line: active coordinates move together, the rest are pinned.

    ``active`` is the sorted tuple of moving coordinates, ``fixed`` the
    sorted tuple of (coordinate, letter) pairs covering the complement.
    """

    n: int
    active: tuple[int, ...]
    fixed: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        _check_line_parts(self.n, self.active, self.fixed)

    @property
    def fixed_map(self) -> dict[int, int]:
        return dict(self.fixed)

    def word_at(self, v: int) -> Word:
        """The line's point with moving letter v."""
        if v not in (1, 2, 3):
            raise ValueError(f"moving letter {v} outside alphabet")
        fixed = self.fixed_map
        return Word(tuple(fixed.get(i, v) for i in range(1, self.n + 1)))

    def points(self) -> tuple[Word, Word, Word]:
        return (self.word_at(1), self.word_at(2), self.word_at(3))

    def active_runs(self) -> tuple[tuple[int, int], ...]:
        """Maximal runs of consecutive active coordinates, as (lo, hi) pairs."""
        runs = []
        lo = prev = self.active[0]
        for i in self.active[1:]:
            if i == prev + 1:
                prev = i
                continue
            runs.append((lo, prev))
            lo = prev = i
        runs.append((lo, prev))
        return tuple(runs)


@dataclass(frozen=True)
class IntervalLine(Line):
    """A line whose active set is one contiguous interval lo..hi."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.active_runs()) != 1:
            raise ValueError(f"active set {self.active} is not one interval")

    @property
    def lo(self) -> int:
        return self.active[0]

    @property
    def hi(self) -> int:
        return self.active[-1]


def interval_line(n: int, lo: int, hi: int, fixed: dict[int, int] | None = None) -> IntervalLine:
    """Build the interval line with active set lo..hi and the given fixed letters."""
    if not 1 <= lo <= hi <= n:
        raise ValueError(f"interval {lo}..{hi} outside 1..{n}")
    fixed = dict(fixed or {})
    pairs = tuple(sorted(fixed.items()))
    active = tuple(range(lo, hi + 1))
    return IntervalLine(n, active, pairs)


def line_points(line: Line) -> tuple[Word, Word, Word]:
    """The three points of a line, ordered by moving letter 1, 2, 3."""
    return line.points()


def _fixed_from_rank(positions: tuple[int, ...], fr: int) -> tuple[tuple[int, int], ...]:
    """Decode a fixed-part rank into letters along the given sorted positions."""
    k = len(positions)
    digits = []
    for _ in range(k):
        fr, d = divmod(fr, 3)
        digits.append(d + 1)
    digits.reverse()
    return tuple(zip(positions, digits))


def enumerate_interval_lines(n: int) -> Iterator[IntervalLine]:
    """All interval lines of the n-cube, ordered by lo, hi, then fixed-part rank.

    The fixed-part rank reads the pinned letters in increasing coordinate
    order as base-3 digits, so the order (and anything serialized from
    it) is stable across runs.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    for lo in range(1, n + 1):
        for hi in range(lo, n + 1):
            rest = tuple(i for i in range(1, n + 1) if i < lo or i > hi)
            for fr in range(3 ** len(rest)):
                yield IntervalLine(n, tuple(range(lo, hi + 1)), _fixed_from_rank(rest, fr))


def enumerate_m_interval_lines(n: int, m: int) -> Iterator[Line]:
    """All lines whose active set splits into at most m maximal intervals.

    Active sets are visited in increasing order of their bitmask value
    (coordinate 1 = least significant bit), then by fixed-part rank.
    With m = n this is every combinatorial line of the cube.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    for mask in range(1, 2**n):
        active = tuple(i + 1 for i in range(n) if mask >> i & 1)
        runs = 1
        for a, b in zip(active, active[1:]):
            if b != a + 1:
                runs += 1
        if runs > m:
            continue
        rest = tuple(i for i in range(1, n + 1) if not mask >> (i - 1) & 1)
        for fr in range(3 ** len(rest)):
            yield Line(n, active, _fixed_from_rank(rest, fr))


@lru_cache(maxsize=16)
def interval_line_members(n: int) -> np.ndarray:
    """Ranks of the three points of every interval line, one line per row.

    Row order matches :func:`enumerate_interval_lines`.  Cached because
    the table is the hot input to violation counting and search.
    """
    rows = [[rank(w) for w in line.points()] for line in enumerate_interval_lines(n)]
    return np.array(rows, dtype=np.int64)


@lru_cache(maxsize=16)
def m_interval_line_members(n: int, m: int) -> np.ndarray:
    rows = [[rank(w) for w in line.points()] for line in enumerate_m_interval_lines(n, m)]
    return np.array(rows, dtype=np.int64)


class Coloring:
    """A two-colouring of the n-cube, stored as one uint8 per word rank."""

    __slots__ = ("n", "_bits")

    def __init__(self, n: int, bits: np.ndarray):
        if n < 1:
            raise ValueError("n must be >= 1")
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.shape != (3**n,):
            raise ValueError(f"expected {3 ** n} cells for n={n}, got shape {bits.shape}")
        if bits.size and int(bits.max()) > 1:
            raise ValueError("colours must be 0 or 1")
        self.n = n
        self._bits = bits
        self._bits.setflags(write=False)

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @classmethod
    def constant(cls, n: int, color: int) -> "Coloring":
        if color not in (0, 1):
            raise ValueError("colour must be 0 or 1")
        return cls(n, np.full(3**n, color, dtype=np.uint8))

    @classmethod
    def from_bits(cls, n: int, values: Iterable[int]) -> "Coloring":
        return cls(n, np.fromiter(values, dtype=np.uint8, count=3**n))

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Word], int]) -> "Coloring":
        return cls.from_bits(n, (fn(unrank(i, n)) for i in range(3**n)))

    @classmethod
    def random(cls, n: int, seed: int) -> "Coloring":
        rng = np.random.default_rng(seed)
        return cls(n, rng.integers(0, 2, size=3**n, dtype=np.uint8))

    def get(self, word: Word) -> int:
        if word.n != self.n:
            raise ValueError(f"word length {word.n} does not match colouring n={self.n}")
        return int(self._bits[rank(word)])

    def color_of_rank(self, index: int) -> int:
        return int(self._bits[index])

    @property
    def bitstring(self) -> str:
        return "".join("1" if b else "0" for b in self._bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._bits, other._bits))

    def __hash__(self) -> int:
        return hash((self.n, self._bits.tobytes()))

    def __repr__(self) -> str:
        return f"Coloring(n={self.n}, bits={self.bitstring!r})"


def is_monochromatic(coloring: Coloring, line: Line) -> bool:
    """True when the line's three points share one colour."""
    if line.n != coloring.n:
        raise ValueError(f"line n={line.n} does not match colouring n={coloring.n}")
    a, b, c = (coloring.get(w) for w in line.points())
    return a == b == c


# --- symmetries ------------------------------------------------------------
#
# Global alphabet permutations, coordinate reversal and the colour swap all
# send interval lines to interval lines, so the group they generate (order
# 6 * 2 * 2 = 24) acts on colourings without changing whether a
# monochromatic interval line exists.  Per-coordinate letter permutations
# would break line structure and are deliberately not representable here.


@dataclass(frozen=True)
class Symmetry:
    """One element of the 24-element group: letter permutation x reversal x colour swap.

    ``letter_perm[v - 1]`` is the image of letter v.  The letter action
    and the position action touch different structure, so composition
    works componentwise.
    """

    letter_perm: tuple[int, int, int] = (1, 2, 3)
    reverse: bool = False
    swap_colors: bool = False

    def __post_init__(self) -> None:
        if sorted(self.letter_perm) != [1, 2, 3]:
            raise ValueError(f"{self.letter_perm} is not a permutation of (1,2,3)")

    def apply_to_word(self, word: Word) -> Word:
        letters = word.letters[::-1] if self.reverse else word.letters
        return Word(tuple(self.letter_perm[v - 1] for v in letters))

    def inverse(self) -> "Symmetry":
        inv = [0, 0, 0]
        for v, img in enumerate(self.letter_perm, start=1):
            inv[img - 1] = v
        return Symmetry(tuple(inv), self.reverse, self.swap_colors)

    def compose(self, other: "Symmetry") -> "Symmetry":
        """The element acting as self after other."""
        perm = tuple(self.letter_perm[v - 1] for v in other.letter_perm)
        return Symmetry(perm, self.reverse ^ other.reverse, self.swap_colors ^ other.swap_colors)


IDENTITY = Symmetry()
REVERSAL = Symmetry(reverse=True)
COLOR_SWAP = Symmetry(swap_colors=True)


def all_symmetries() -> tuple[Symmetry, ...]:
    """The full 24-element group, identity first."""
    perms = sorted(itertools.permutations((1, 2, 3)))
    return tuple(
        Symmetry(p, rev, swap)
        for p in perms
        for rev in (False, True)
        for swap in (False, True)
    )


@lru_cache(maxsize=64)
def rank_permutation(g: Symmetry, n: int) -> np.ndarray:
    """Table P with P[i] = rank of the g-preimage of the word of rank i.

    The transformed colouring reads its cell i from cell P[i] of the
    original (plus a colour flip when g swaps colours).
    """
    ginv = g.inverse()
    return np.fromiter(
        (rank(ginv.apply_to_word(unrank(i, n))) for i in range(3**n)),
        dtype=np.int64,
        count=3**n,
    )


def apply_symmetry(coloring: Coloring, g: Symmetry) -> Coloring:
    """The colouring w -> g(c)(w) = c(g^-1 w), colour-swapped when g asks for it."""
    bits = coloring.bits[rank_permutation(g, coloring.n)]
    if g.swap_colors:
        bits = bits ^ 1
    return Coloring(coloring.n, bits)


# --- colouring file format ---------------------------------------------------
#
# Line 1: "HJC 3 <n>".  Line 2: exactly 3^n characters from {0,1}, position i
# holding the colour of the word of rank i.  Trailing newline optional, any
# other byte is an error.


def coloring_to_text(coloring: Coloring) -> str:
    return f"HJC 3 {coloring.n}\n{coloring.bitstring}\n"


def coloring_from_text(text: str) -> Coloring:
    head, sep, body = text.partition("\n")
    if not sep:
        raise ValueError("colouring file needs a header line 'HJC 3 <n>'")
    parts = head.split(" ")
    if len(parts) != 3 or parts[0] != "HJC" or parts[1] != "3" or not parts[2].isdigit():
        raise ValueError(f"bad colouring header {head!r}")
    n = int(parts[2])
    if n < 1:
        raise ValueError(f"bad dimension {n} in colouring header")
    if body.endswith("\n"):
        body = body[:-1]
    if len(body) != 3**n:
        raise ValueError(f"expected {3 ** n} colour characters for n={n}, got {len(body)}")
    for pos, ch in enumerate(body):
        if ch not in "01":
            raise ValueError(f"bad colour byte {ch!r} at position {pos}")
    return Coloring(n, np.frombuffer(body.encode("ascii"), dtype=np.uint8) - ord("0"))


def save_coloring(coloring: Coloring, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(coloring_to_text(coloring))


def load_coloring(path: str) -> Coloring:
    with open(path, "r", encoding="ascii") as fh:
        return coloring_from_text(fh.read())
