"""The five-line construction that forces a monochromatic interval line.

Everything here revolves around one combinatorial fact.  Fix four cut
positions a1 < a2 < a3 < a4 inside 1..n-1 and build nine "bracket"
words, each constant on the five blocks those cuts carve out of 1..n.
The nine words assemble into five interval lines, and the colour of
each word is controlled by the contraction it collapses to.  Whenever a
colouring is homogeneous in the right sense (all words realizing a seed
pattern over a common ground set share one colour), the colours seen on
line i form one of five small "colour sets", and a short case analysis
shows some colour set is a singleton: that line is monochromatic.

The module exposes the construction itself (:func:`gadget_words`,
:func:`gadget_lines`, :func:`nsets`, :func:`case_lemma_check`), the
Ramsey-style refinement that manufactures homogeneity at desk scale
(:func:`induced_coloring`, :func:`ramsey_refine`), the line extractors
(:func:`extract_line`, :func:`find_interval_line`), and the certificate
file format used to report verified monochromatic lines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .cube import (
    Coloring,
    IntervalLine,
    Word,
    enumerate_interval_lines,
    interval_line,
    interval_line_members,
    is_monochromatic,
)
from .patterns import Pattern, contract, realize

#: The five seed patterns, in the order their colour sets are consulted.
SEED_PATTERNS: tuple[Pattern, ...] = tuple(
    Pattern.from_text(s) for s in ("132", "1232", "1312", "13232", "13132")
)

#: Lengths of the seed patterns: (3, 4, 4, 5, 5).
SEED_LENGTHS: tuple[int, ...] = tuple(len(p) for p in SEED_PATTERNS)

#: Smallest ground set that supports the construction (one quadruple of cuts).
MIN_GROUND_SIZE = 4

ColorVector = tuple[int, int, int, int, int]


def _check_color_vector(d: Sequence[int]) -> ColorVector:
    d = tuple(d)
    if len(d) != 5 or any(v not in (0, 1) for v in d):
        raise ValueError(f"need five colours from {{0,1}}, got {d!r}")
    return d


@dataclass(frozen=True)
class Quadruple:
    """Four cut positions a1 < a2 < a3 < a4 inside 1..n-1 of an n-cube."""

    n: int
    cuts: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        a = self.cuts
        if len(a) != 4:
            raise ValueError("need exactly four cut positions")
        if not (1 <= a[0] < a[1] < a[2] < a[3] <= self.n - 1):
            raise ValueError(f"cuts {a} not strictly increasing inside 1..{self.n - 1}")


def bracket_word(block_letters: Sequence[int], quad: Quadruple) -> Word:
    """The word constant on each of the five blocks cut out by the quadruple.

    Block j covers coordinates a(j-1)+1 .. a(j) (with a0 = 0 and a5 = n)
    and carries block_letters[j-1].  Adjacent blocks may repeat a letter,
    in which case the word's contraction is shorter than five.
    """
    b = tuple(block_letters)
    if len(b) != 5:
        raise ValueError("need exactly five block letters")
    bounds = (0,) + quad.cuts + (quad.n,)
    letters = []
    for j in range(5):
        letters.extend([b[j]] * (bounds[j + 1] - bounds[j]))
    return Word(tuple(letters))


_WORD_BLOCKS: dict[str, tuple[int, int, int, int, int]] = {
    "w1": (1, 3, 3, 3, 2),
    "w2": (1, 2, 2, 3, 2),
    "w3": (1, 3, 1, 1, 2),
    "w4": (1, 3, 2, 3, 2),
    "w5": (1, 3, 1, 3, 2),
    "v1": (1, 1, 1, 3, 2),
    "v2": (1, 1, 2, 3, 2),
    "v3": (1, 3, 1, 2, 2),
    "u1": (1, 3, 2, 2, 2),
}

# Member names and active block span of the five candidate lines.  A span
# (j, k) means the active interval runs from cut j (exclusive) to cut k
# (inclusive); the members are ordered by moving letter 1, 2, 3.
_LINE_SPECS: tuple[tuple[tuple[str, str, str], int, int], ...] = (
    (("v1", "w2", "w1"), 0, 2),
    (("w3", "u1", "w1"), 1, 3),
    (("v2", "w2", "w4"), 0, 1),
    (("w3", "v3", "w5"), 2, 3),
    (("w5", "w4", "w1"), 1, 2),
)

# Which of the five pattern colours can appear on line i.  Index p here
# refers to SEED_PATTERNS[p]; line i is monochromatic exactly when the
# colours of these patterns coincide.
_COLOR_SET_PATTERNS: tuple[tuple[int, ...], ...] = (
    (0, 1),
    (0, 2),
    (1, 3),
    (2, 4),
    (0, 3, 4),
)


@dataclass(frozen=True)
class GadgetWords:
    """The nine bracket words of the construction over one quadruple."""

    w1: Word
    w2: Word
    w3: Word
    w4: Word
    w5: Word
    v1: Word
    v2: Word
    v3: Word
    u1: Word

    def as_dict(self) -> dict[str, Word]:
        return {name: getattr(self, name) for name in _WORD_BLOCKS}


def gadget_words(quad: Quadruple) -> GadgetWords:
    """Build the nine bracket words over the given cuts."""
    return GadgetWords(**{name: bracket_word(blocks, quad) for name, blocks in _WORD_BLOCKS.items()})


@dataclass(frozen=True)
class GadgetLine:
    """Candidate line i of the construction, with its three member words."""

    index: int
    line: IntervalLine
    members: tuple[Word, Word, Word]


def gadget_lines(quad: Quadruple) -> tuple[GadgetLine, ...]:
    """The five candidate interval lines over the given cuts.

    Every returned triple is re-checked to be exactly the point set of
    its stated line, members ordered by moving letter.  A failure here
    would falsify the construction itself, so it aborts loudly instead
    of returning partial output.
    """
    words = gadget_words(quad).as_dict()
    out = []
    for idx, (names, span_lo, span_hi) in enumerate(_LINE_SPECS, start=1):
        members = tuple(words[name] for name in names)
        lo, hi = quad.cuts[span_lo] + 1, quad.cuts[span_hi]
        base = members[0]
        fixed = {i: base[i] for i in range(1, quad.n + 1) if i < lo or i > hi}
        line = interval_line(quad.n, lo, hi, fixed)
        if line.points() != members:
            raise RuntimeError(
                f"construction broken: candidate line {idx} over cuts {quad.cuts} "
                f"does not match its member words"
            )
        out.append(GadgetLine(idx, line, members))
    return tuple(out)


def nsets(d: Sequence[int]) -> tuple[frozenset[int], ...]:
    """The five colour sets induced by colours d for the five seed patterns.

    Set i collects the colours that the members of candidate line i
    carry when every word with seed pattern p takes colour d[p].
    """
    d = _check_color_vector(d)
    return tuple(frozenset(d[p] for p in ps) for ps in _COLOR_SET_PATTERNS)


def first_singleton_index(d: Sequence[int]) -> int:
    """Smallest i (1-based) whose colour set is a singleton.

    Every assignment of five colours has one: if the first four sets all
    have two elements then d2 = d3 and d1 = d4 = d5, which collapses the
    fifth set.  Exhausting all 32 cases without a hit would falsify the
    construction, hence the loud failure.
    """
    for i, s in enumerate(nsets(d), start=1):
        if len(s) == 1:
            return i
    raise RuntimeError(f"construction broken: no singleton colour set for d={d}")


def case_lemma_check() -> list[tuple[ColorVector, int, int]]:
    """All 32 colour assignments with their first singleton set.

    Returns rows (d, index, colour), where colour is the single element
    of the chosen set; the chosen candidate line is forced monochromatic
    in that colour.
    """
    rows = []
    for bits in itertools.product((0, 1), repeat=5):
        i = first_singleton_index(bits)
        (colour,) = nsets(bits)[i - 1]
        rows.append((bits, i, colour))
    return rows


# --- homogeneity machinery ---------------------------------------------------


def induced_coloring(
    coloring: Coloring, pattern_index: int, ground: Iterable[int]
) -> dict[tuple[int, ...], int]:
    """Colour each breakpoint choice for one seed pattern inside a ground set.

    For seed pattern p of length t, every (t-1)-subset A of the ground
    set realizes a unique word with contraction p and breakpoints A; its
    colour is recorded under key A.  Ground elements must lie in 1..n-1.
    """
    if not 1 <= pattern_index <= 5:
        raise ValueError(f"pattern index {pattern_index} outside 1..5")
    pat = SEED_PATTERNS[pattern_index - 1]
    ground = tuple(sorted(set(ground)))
    if ground and not (1 <= ground[0] and ground[-1] <= coloring.n - 1):
        raise ValueError(f"ground set {ground} outside 1..{coloring.n - 1}")
    size = len(pat) - 1
    if len(ground) < size:
        raise ValueError(f"ground set of {len(ground)} cannot host {size}-subsets")
    return {
        A: coloring.get(realize(pat, A, coloring.n))
        for A in itertools.combinations(ground, size)
    }


def ramsey_refine(
    ground: Iterable[int],
    subset_coloring: Mapping[tuple[int, ...], int] | Callable[[tuple[int, ...]], int],
    t: int,
    target: int,
) -> tuple[tuple[int, ...], int] | None:
    """Search for a target-size subset all of whose t-subsets share a colour.

    Runs a depth-first scan in lexicographic order, growing candidate
    subsets element by element and abandoning a branch as soon as two of
    its t-subsets disagree, so the returned subset is the
    lexicographically least homogeneous one.  Returns (subset, colour)
    or None when no homogeneous subset of that size exists; meant for
    ground sets of a couple dozen elements, not for asymptotics.
    """
    elems = tuple(sorted(set(ground)))
    if t < 1:
        raise ValueError("t must be >= 1")
    if target < t:
        raise ValueError(f"target {target} below subset size {t}")
    if target > len(elems):
        return None
    if callable(subset_coloring):
        colour_of = subset_coloring
    else:
        mapping = subset_coloring

        def colour_of(key: tuple[int, ...]) -> int:
            try:
                return mapping[key]
            except KeyError as exc:
                raise ValueError(f"subset colouring missing {key}") from exc

    def grow(start: int, chosen: list[int], colour: int | None):
        if len(chosen) == target:
            return tuple(chosen), colour
        # Leave room for the remaining picks.
        for pos in range(start, len(elems) - (target - len(chosen)) + 1):
            e = elems[pos]
            new_colour = colour
            ok = True
            if len(chosen) >= t - 1:
                for rest in itertools.combinations(chosen, t - 1):
                    c = colour_of(tuple(sorted(rest + (e,))))
                    if new_colour is None:
                        new_colour = c
                    elif c != new_colour:
                        ok = False
                        break
            if not ok:
                continue
            chosen.append(e)
            hit = grow(pos + 1, chosen, new_colour)
            chosen.pop()
            if hit is not None:
                return hit
        return None

    found = grow(0, [], None)
    if found is None:
        return None
    subset, colour = found
    if colour is None:
        # target == t - 1 is impossible here (target >= t), so a full
        # subset always fixed its colour; keep the guard for clarity.
        raise RuntimeError("homogeneous subset without a colour")
    return subset, colour


@dataclass(frozen=True)
class HomogeneousChain:
    """Nested ground sets T0 <= T1 <= ... <= T5 with one colour per level.

    Level i (1-based) promises that every breakpoint choice for seed
    pattern i inside sets[i-1] yields colour colors[i-1].
    """

    sets: tuple[tuple[int, ...], ...]
    colors: ColorVector

    def __post_init__(self) -> None:
        if len(self.sets) != 6:
            raise ValueError("chain needs six ground sets")
        _check_color_vector(self.colors)
        for small, big in zip(self.sets, self.sets[1:]):
            if not set(small) <= set(big):
                raise ValueError(f"chain sets not nested: {small} not within {big}")
        if len(self.sets[0]) < MIN_GROUND_SIZE:
            raise ValueError(f"innermost set needs {MIN_GROUND_SIZE} elements")


class HomogeneityError(ValueError):
    """A chain's homogeneity promise fails on a concrete pair of subsets."""


# --- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class LineCertificate:
    """A monochromatic interval line, carrying its own evidence."""

    line: IntervalLine
    color: int
    members: tuple[Word, Word, Word]

    def __post_init__(self) -> None:
        if self.color not in (0, 1):
            raise ValueError("certificate colour must be 0 or 1")
        if self.members != self.line.points():
            raise ValueError("certificate members do not match the line's points")

    def verify(self, coloring: Coloring) -> bool:
        """Re-check the claim directly against a colouring."""
        if coloring.n != self.line.n:
            return False
        return all(coloring.get(w) == self.color for w in self.members)


def _certified(coloring: Coloring, line: IntervalLine) -> LineCertificate:
    cert = LineCertificate(line, coloring.get(line.word_at(1)), line.points())
    if not cert.verify(coloring):
        raise RuntimeError(f"internal error: line {line} reported monochromatic but is not")
    return cert


def render_certificate(cert: LineCertificate | None, method: str = "direct") -> str:
    """Serialize a certificate, or an explicit absence marker."""
    if cert is None:
        return f"NONE method={method}\n"
    line = cert.line
    fixed = ",".join(f"{p}:{v}" for p, v in line.fixed)
    head = f"MONO-LINE n={line.n} color={cert.color} active={line.lo}..{line.hi} fixed={fixed}"
    rows = [head] + [f"W{i} {w}" for i, w in enumerate(cert.members, start=1)]
    return "\n".join(rows) + "\n"


def parse_certificate(text: str) -> LineCertificate | None:
    """Inverse of :func:`render_certificate`; None for absence markers."""
    rows = [r for r in text.split("\n") if r]
    if not rows:
        raise ValueError("empty certificate text")
    if rows[0].startswith("NONE"):
        parts = rows[0].split(" ")
        if len(parts) != 2 or not parts[1].startswith("method="):
            raise ValueError(f"bad absence marker {rows[0]!r}")
        return None
    fields = rows[0].split(" ")
    if len(fields) != 5 or fields[0] != "MONO-LINE":
        raise ValueError(f"bad certificate header {rows[0]!r}")
    kv = {}
    for tok in fields[1:]:
        key, eq, val = tok.partition("=")
        if not eq:
            raise ValueError(f"bad certificate field {tok!r}")
        kv[key] = val
    try:
        n = int(kv["n"])
        color = int(kv["color"])
        lo_s, _, hi_s = kv["active"].partition("..")
        lo, hi = int(lo_s), int(hi_s)
        fixed = {}
        if kv["fixed"]:
            for pair in kv["fixed"].split(","):
                p_s, _, v_s = pair.partition(":")
                fixed[int(p_s)] = int(v_s)
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad certificate header {rows[0]!r}") from exc
    if len(rows) != 4:
        raise ValueError("certificate needs exactly three member rows")
    members = []
    for i, row in enumerate(rows[1:4], start=1):
        tag, _, wtext = row.partition(" ")
        if tag != f"W{i}":
            raise ValueError(f"bad member row {row!r}")
        members.append(Word.from_text(wtext))
    return LineCertificate(interval_line(n, lo, hi, fixed), color, tuple(members))


# --- line extraction ---------------------------------------------------------


def extract_line(coloring: Coloring, chain: HomogeneousChain) -> LineCertificate:
    """Turn a verified homogeneous chain into a monochromatic line certificate.

    First re-checks every level's homogeneity promise (raising
    :class:`HomogeneityError` naming the level and a disagreeing pair of
    subsets on failure), then builds the construction over the four
    smallest elements of the innermost set and certifies the candidate
    line whose colour set is a singleton.
    """
    for i in range(1, 6):
        level = induced_coloring(coloring, i, chain.sets[i - 1])
        want = chain.colors[i - 1]
        bad = next((A for A, c in level.items() if c != want), None)
        if bad is not None:
            good = next((A for A, c in level.items() if c == want), None)
            raise HomogeneityError(
                f"level {i} not homogeneous: subset {bad} has colour {level[bad]}, "
                f"expected {want}" + (f" (as on subset {good})" if good else "")
            )
    quad = Quadruple(coloring.n, tuple(sorted(chain.sets[0]))[:4])
    idx = first_singleton_index(chain.colors)
    candidate = gadget_lines(quad)[idx - 1]
    return _certified(coloring, candidate.line)


def find_homogeneous_chain(coloring: Coloring, target: int = MIN_GROUND_SIZE) -> HomogeneousChain | None:
    """Refine 1..n-1 level by level until every seed pattern is homogeneous.

    Works from the longest seed pattern down to the shortest, shrinking
    the ground set to ``target`` elements at each level with
    :func:`ramsey_refine`.  At desk scale the refinement often simply
    fails; that is reported as None, not an error.
    """
    if target < MIN_GROUND_SIZE:
        raise ValueError(f"target below minimum ground size {MIN_GROUND_SIZE}")
    n = coloring.n
    if n - 1 < target:
        return None
    sets: list[tuple[int, ...] | None] = [None] * 6
    colors: list[int | None] = [None] * 5
    sets[5] = tuple(range(1, n))
    for i in range(5, 0, -1):
        size = SEED_LENGTHS[i - 1] - 1
        level = induced_coloring(coloring, i, sets[i])
        hit = ramsey_refine(sets[i], level, size, max(target, size))
        if hit is None:
            return None
        sets[i - 1], colors[i - 1] = hit
    return HomogeneousChain(tuple(sets), tuple(colors))


def find_interval_line(
    coloring: Coloring, method: str = "direct"
) -> LineCertificate | None:
    """Search for a monochromatic interval line by one of three routes.

    direct    scan every interval line; None is a proof of absence.
    gadget    test the five candidate lines over every quadruple of
              cuts; cheap, but None only means this route saw nothing.
    pipeline  refine to a homogeneous chain, then extract; None again
              just means the refinement fizzled at this size.

    Whatever the route, a returned certificate has been re-verified
    against the colouring point by point.
    """
    n = coloring.n
    if method == "direct":
        members = interval_line_members(n)
        cols = coloring.bits[members]
        mono = (cols[:, 0] == cols[:, 1]) & (cols[:, 1] == cols[:, 2])
        hits = np.flatnonzero(mono)
        if hits.size == 0:
            return None
        line = next(itertools.islice(enumerate_interval_lines(n), int(hits[0]), None))
        return _certified(coloring, line)
    if method == "gadget":
        for cuts in itertools.combinations(range(1, n), 4):
            for cand in gadget_lines(Quadruple(n, cuts)):
                if is_monochromatic(coloring, cand.line):
                    return _certified(coloring, cand.line)
        return None
    if method == "pipeline":
        chain = find_homogeneous_chain(coloring)
        if chain is None:
            return None
        return extract_line(coloring, chain)
    raise ValueError(f"unknown method {method!r}")


def pattern_coloring(n: int, d: Sequence[int]) -> Coloring:
    """Colour each word by its seed pattern: d[p] when the contraction is
    seed pattern p, and d[0] for every other word."""
    d = _check_color_vector(d)
    table = {p.letters: d[i] for i, p in enumerate(SEED_PATTERNS)}

    def fn(w: Word) -> int:
        return table.get(contract(w).letters, d[0])

    return Coloring.from_function(n, fn)
