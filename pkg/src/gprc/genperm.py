"""Generalized permutations and single-cylinder diagrams.

Conventions used throughout the package:

- A generalized permutation is an ordered pair of nonempty words over a
  finite alphabet in which every symbol occurs exactly twice in total.
  It is stored as two tuples of ints, ``top`` and ``bottom``.
- Canonical form renames symbols 0, 1, 2, ... in order of first
  appearance, scanning the top line left to right and then the bottom
  line.  Equality and hashing are defined on canonical form only.
- Text format: whitespace-separated symbols, the two lines joined by
  ``" / "`` on one line or by a newline, e.g. ``"0 1 1 / 2 2 0"``.
- A cylinder diagram is a pair of *cyclic* words recording the two
  boundary circles of a one-cylinder surface.  Two diagrams are equal
  when they differ by independent rotations of the cyclic words, by the
  swap-and-reverse move (no canonical top/bottom choice), or by
  relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    EmptyLine,
    IndexOutOfRange,
    MalformedInput,
    NotCylindrical,
    UnknownSymbol,
)

Symbol = int


def canonical_pair(top: Sequence, bottom: Sequence) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Relabel symbols by first appearance, top line scanned before bottom.

    Accepts arbitrary hashable tokens and returns dense int labels.

    >>> canonical_pair((5, 'x', 'x'), (9, 9, 5))
    ((0, 1, 1), (2, 2, 0))
    """
    labels: dict = {}
    out = []
    for line in (top, bottom):
        row = []
        for sym in line:
            v = labels.get(sym)
            if v is None:
                v = labels[sym] = len(labels)
            row.append(v)
        out.append(tuple(row))
    return out[0], out[1]


def _check_shape(top: Sequence, bottom: Sequence) -> None:
    if len(top) == 0 or len(bottom) == 0:
        raise MalformedInput("both lines must be nonempty")
    counts: dict = {}
    for sym in top:
        counts[sym] = counts.get(sym, 0) + 1
    for sym in bottom:
        counts[sym] = counts.get(sym, 0) + 1
    bad = sorted((str(s) for s, c in counts.items() if c != 2))
    if bad:
        raise MalformedInput(
            "every symbol must appear exactly twice; offending: " + ", ".join(bad)
        )


class GeneralizedPermutation:
    """An immutable generalized permutation in canonical form."""

    __slots__ = ("top", "bottom")

    top: tuple[Symbol, ...]
    bottom: tuple[Symbol, ...]

    def __init__(self, top: Iterable, bottom: Iterable):
        t, b = tuple(top), tuple(bottom)
        _check_shape(t, b)
        t, b = canonical_pair(t, b)
        object.__setattr__(self, "top", t)
        object.__setattr__(self, "bottom", b)

    def __setattr__(self, name, value):
        raise AttributeError("GeneralizedPermutation is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GeneralizedPermutation)
            and self.top == other.top
            and self.bottom == other.bottom
        )

    def __hash__(self) -> int:
        return hash((self.top, self.bottom))

    def __repr__(self) -> str:
        return f"GeneralizedPermutation({self.top!r}, {self.bottom!r})"

    def __str__(self) -> str:
        return format_permutation(self)

    @property
    def alphabet_size(self) -> int:
        return (len(self.top) + len(self.bottom)) // 2

    @property
    def pair(self) -> tuple[tuple[Symbol, ...], tuple[Symbol, ...]]:
        return self.top, self.bottom


def parse(text: str) -> GeneralizedPermutation:
    """Parse the two-line text format into a canonical permutation.

    Lines are separated by '/' or a newline; tokens are nonnegative
    integers or alphanumeric identifiers (mapped to ints here).

    >>> str(parse("1 2 3 4 / 4 3 2 1"))
    '0 1 2 3 / 3 2 1 0'
    >>> str(parse("0 2 2 / 1 1 0"))
    '0 1 1 / 2 2 0'
    """
    pieces = text.split("/") if "/" in text else text.splitlines()
    pieces = [p for p in pieces if p.strip()]
    if len(pieces) != 2:
        raise MalformedInput(f"expected two lines, got {len(pieces)}")
    lines = []
    for piece in pieces:
        tokens = piece.split()
        for tok in tokens:
            if not tok.isalnum():
                raise MalformedInput(f"bad token {tok!r}")
        lines.append(tuple(tokens))
    return GeneralizedPermutation(lines[0], lines[1])


def format_permutation(p: GeneralizedPermutation) -> str:
    """Canonical one-line text form, bit-exact (single spaces, ' / ')."""
    return "{} / {}".format(
        " ".join(map(str, p.top)), " ".join(map(str, p.bottom))
    )


def is_true_permutation(p: GeneralizedPermutation) -> bool:
    """True iff every symbol occurs exactly once in each line."""
    return _is_true_pair(p.top, p.bottom)


def _is_true_pair(top: tuple[Symbol, ...], bottom: tuple[Symbol, ...]) -> bool:
    if len(top) != len(bottom):
        return False
    return len(set(top)) == len(top) and len(set(bottom)) == len(bottom)


def is_balanced(p: GeneralizedPermutation) -> bool:
    """True iff the two lines have the same length."""
    return len(p.top) == len(p.bottom)


def is_cylindrical(p: GeneralizedPermutation) -> bool:
    """True iff p is of single-cylinder form.

    Requires the first symbol of one line to coincide with the last
    symbol of the complementary line, and neither line's symbol set to
    be a proper subset of the other's.
    """
    top_set, bot_set = set(p.top), set(p.bottom)
    if top_set != bot_set and (top_set < bot_set or bot_set < top_set):
        return False
    return p.top[0] == p.bottom[-1] or p.bottom[0] == p.top[-1]


def inverse(p: GeneralizedPermutation) -> GeneralizedPermutation:
    """Interchange the two lines (an involution up to canonical form)."""
    return GeneralizedPermutation(p.bottom, p.top)


def erase_raw(
    top: tuple, bottom: tuple, victims: Iterable
) -> tuple[tuple, ...]:
    """Remove both occurrences of each victim, keeping original labels."""
    dead = set(victims)
    return (
        tuple(s for s in top if s not in dead),
        tuple(s for s in bottom if s not in dead),
    )


def erase_symbols(
    p: GeneralizedPermutation, victims: Iterable[Symbol]
) -> GeneralizedPermutation:
    """Erase both occurrences of each victim symbol and recanonicalize.

    Models contraction of the named horizontal saddle connections.
    Geometric legality is not checked here; callers detect degenerations
    by recomputing the singularity profile.
    """
    dead = set(victims)
    unknown = dead - set(p.top) - set(p.bottom)
    if unknown:
        raise UnknownSymbol(f"not in alphabet: {sorted(unknown)}")
    top, bottom = erase_raw(p.top, p.bottom, dead)
    if not top or not bottom:
        raise EmptyLine("erasure would empty a line")
    return GeneralizedPermutation(top, bottom)


class Diagonal(Enum):
    """Which of the two parallelogram diagonals cuts the cylinder."""

    TOP_FIRST = "top-first"
    BOTTOM_FIRST = "bottom-first"


class CylinderDiagram:
    """Two cyclic words encoding a one-cylinder surface's boundary arcs."""

    __slots__ = ("top", "bottom", "_key")

    top: tuple[Symbol, ...]
    bottom: tuple[Symbol, ...]

    def __init__(self, top: Iterable, bottom: Iterable):
        t, b = tuple(top), tuple(bottom)
        _check_shape(t, b)
        t, b = canonical_pair(t, b)
        object.__setattr__(self, "top", t)
        object.__setattr__(self, "bottom", b)
        object.__setattr__(self, "_key", _diagram_key(t, b))

    def __setattr__(self, name, value):
        raise AttributeError("CylinderDiagram is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, CylinderDiagram) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"CylinderDiagram({self.top!r}, {self.bottom!r})"

    def __str__(self) -> str:
        return "({}) ({})".format(
            " ".join(map(str, self.top)), " ".join(map(str, self.bottom))
        )

    @property
    def canonical_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self._key


def _diagram_key(top, bottom):
    # Least relabeled pair over all rotations of each cyclic word and the
    # swap-and-reverse move.
    best = None
    for t, b in ((top, bottom), (tuple(reversed(bottom)), tuple(reversed(top)))):
        for i in range(len(t)):
            rt = t[i:] + t[:i]
            for j in range(len(b)):
                rb = b[j:] + b[:j]
                cand = canonical_pair(rt, rb)
                if best is None or cand < best:
                    best = cand
    return best


def to_cylinder_diagram(p: GeneralizedPermutation) -> CylinderDiagram:
    """Strip the cut symbol from a cylindrical permutation.

    The cut symbol opens one line and closes the other; the top-first
    form is preferred when both cuts are present.
    """
    if not is_cylindrical(p):
        raise NotCylindrical(str(p))
    if p.top[0] == p.bottom[-1]:
        top, bottom = p.top[1:], p.bottom[:-1]
    else:
        top, bottom = p.top[:-1], p.bottom[1:]
    if not top or not bottom:
        raise NotCylindrical("stripping the cut symbol empties a line")
    return CylinderDiagram(top, bottom)


def from_cylinder_diagram(
    cd: CylinderDiagram,
    diagonal: Diagonal = Diagonal.TOP_FIRST,
    top_base: int = 0,
    bottom_base: int = 0,
) -> GeneralizedPermutation:
    """Re-cut a cylinder diagram into a cylindrical permutation.

    Rotates each cyclic word to the chosen basepoint and inserts a fresh
    cut symbol in the position prescribed by the chosen diagonal.
    """
    r, s = len(cd.top), len(cd.bottom)
    if not (0 <= top_base < r) or not (0 <= bottom_base < s):
        raise IndexOutOfRange(f"basepoints ({top_base}, {bottom_base}) for sizes ({r}, {s})")
    top = cd.top[top_base:] + cd.top[:top_base]
    bottom = cd.bottom[bottom_base:] + cd.bottom[:bottom_base]
    cut = r + s  # fresh: diagram labels are dense in 0..(r+s)/2-1
    if diagonal is Diagonal.TOP_FIRST:
        return GeneralizedPermutation((cut,) + top, bottom + (cut,))
    return GeneralizedPermutation(top + (cut,), (cut,) + bottom)
