"""Singularity profiles of suspension surfaces.

Two deliberately independent algorithms compute the stratum:

- ``stratum_of`` builds the explicit suspension polygon over a
  generalized permutation from exact rational suspension data, glues
  edge pairs (translations for opposite-line pairs, central symmetries
  for same-line pairs), traces vertex cycles and sums corner angles in
  floating point, rounding each cycle total to a multiple of pi;
- ``stratum_of_diagram`` works on a cylinder diagram with no floating
  point at all: junction edges pair consecutive arc ends along each
  boundary circle, gluing edges pair twin arc ends, and every
  alternating cycle is a singularity of cone angle (number of junctions
  in the cycle) times pi.

Their agreement on cylindrical permutations is asserted by the test
suites and serves as the mutual oracle for both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import feasibility
from .errors import LengthInfeasible, NotSuspendable, RoundingUnstable
from .genperm import CylinderDiagram, GeneralizedPermutation, Symbol, is_true_permutation


class Holonomy(str, Enum):
    ABELIAN = "abelian"
    QUADRATIC = "quadratic"


@dataclass(frozen=True)
class SuspensionData:
    """Exact lengths and heights of one strict suspension."""

    lengths: dict[Symbol, Fraction]
    heights: dict[Symbol, Fraction]


@dataclass(frozen=True)
class SingularityProfile:
    """The stratum data of a suspension surface.

    ``degrees`` is sorted descending (so -1 pole entries come last);
    endpoint degrees are None when no endpoint is distinguished (profiles
    computed from cylinder diagrams) or does not exist.
    """

    holonomy: Holonomy
    degrees: tuple[int, ...]
    genus: int
    left_degree: int | None
    right_degree: int | None
    marked_points: int

    @property
    def is_degenerate(self) -> bool:
        return self.marked_points > 0

    def to_json(self) -> dict:
        return {
            "holonomy": self.holonomy.value,
            "degrees": list(self.degrees),
            "genus": self.genus,
            "left_degree": self.left_degree,
            "right_degree": self.right_degree,
            "marked_points": self.marked_points,
        }


def _true_perm_heights(p: GeneralizedPermutation) -> list[Fraction] | None:
    # tau_k = (position of k after the exchange) - (position before); the
    # proper prefix sums are strictly signed exactly when p is irreducible.
    pos_after = {sym: m for m, sym in enumerate(p.bottom)}
    tau = [Fraction(pos_after[k] - k) for k in range(len(p.top))]
    run = Fraction(0)
    for sym in p.top[:-1]:
        run += tau[sym]
        if run <= 0:
            return None
    return tau


def _generic_lengths(p: GeneralizedPermutation) -> list[Fraction]:
    n = p.alphabet_size
    top_set, bot_set = set(p.top), set(p.bottom)
    top_only = sorted(top_set - bot_set)
    bot_only = sorted(bot_set - top_set)
    if not top_only and not bot_only:
        # distinct generic rationals; any positive lengths work
        return [1 + Fraction(k, n + 1) for k in range(n)]
    lengths = [Fraction(1)] * n
    # scale exclusive letters per line to equalize totals, then perturb
    # by distinct small rationals preserving each line's exclusive total
    for group, base in ((top_only, len(bot_only)), (bot_only, len(top_only))):
        m = len(group)
        eps = Fraction(1, 4 * m * m * (n + 1))
        for idx, sym in enumerate(group):
            lengths[sym] = Fraction(base) + eps * (2 * idx - (m - 1))
    return lengths


def suspension_data(p: GeneralizedPermutation) -> SuspensionData | None:
    """Witness lengths/heights of a strict suspension, or None.

    Heights additionally have zero total whenever possible so that the
    suspension polygon is embedded; see stratum_of.
    """
    if is_true_permutation(p):
        tau = _true_perm_heights(p)
        if tau is None:
            return None
    else:
        if not feasibility.line_balance_ok(p.top, p.bottom):
            return None
        tau = feasibility.solve_heights(p.top, p.bottom, zero_total=True)
        if tau is None:
            tau = feasibility.solve_heights(p.top, p.bottom)
            if tau is None:
                return None
    lengths = _generic_lengths(p)
    return SuspensionData(
        lengths={k: lengths[k] for k in range(p.alphabet_size)},
        heights={k: tau[k] for k in range(p.alphabet_size)},
    )


def is_degenerate(p: GeneralizedPermutation) -> bool:
    """True iff the suspension carries marked points (degree-0 entries)."""
    return stratum_of(p).marked_points > 0


# ---------------------------------------------------------------------------
# numeric method: the suspension polygon


def _polygon_vertices(line, lengths, heights):
    pts = [(Fraction(0), Fraction(0))]
    x = y = Fraction(0)
    for sym in line:
        x += lengths[sym]
        y += heights[sym]
        pts.append((x, y))
    return pts


def _interior_angle(d_in, d_out) -> float:
    ax, ay = d_in
    bx, by = d_out
    cross = float(ax * by - ay * bx)
    dot = float(ax * bx + ay * by)
    return math.pi - math.atan2(cross, dot)


def _check_embedded(top_pts, bot_pts) -> bool:
    # both broken lines are graphs over x; embedded iff top stays
    # strictly above bottom between the shared endpoints
    xs = sorted({pt[0] for pt in top_pts} | {pt[0] for pt in bot_pts})

    def value_at(pts, x):
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x0 <= x <= x1:
                if x0 == x1:
                    return y0
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        raise AssertionError("x outside the polygon span")

    for x in xs[1:-1]:
        if value_at(top_pts, x) <= value_at(bot_pts, x):
            return False
    return True


def stratum_of(p: GeneralizedPermutation) -> SingularityProfile:
    """Profile via the explicit suspension polygon (numeric angles)."""
    data = suspension_data(p)
    if data is None:
        raise NotSuspendable(str(p))
    if p.alphabet_size == 1:
        # (0 / 0): the polygon degenerates; the suspension is the
        # unmarked genus-1 surface
        return SingularityProfile(Holonomy.ABELIAN, (), 1, None, None, 0)
    lengths, heights = data.lengths, data.heights
    top_pts = _polygon_vertices(p.top, lengths, heights)
    bot_pts = _polygon_vertices(p.bottom, lengths, heights)
    assert top_pts[-1] == bot_pts[-1], "suspension polygon must close up"
    if top_pts[-1][1] != 0 and not _check_embedded(top_pts, bot_pts):
        raise NotSuspendable("no embedded suspension polygon found")

    r, s = len(p.top), len(p.bottom)
    # vertex ids: 0 = left endpoint, 1 = right endpoint, then top
    # interiors 1..r-1, then bottom interiors 1..s-1
    def top_vertex(j):
        return 0 if j == 0 else (1 if j == r else 1 + j)

    def bot_vertex(j):
        return 0 if j == 0 else (1 if j == s else r + j)

    nv = r + s
    parent = list(range(nv))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    occurrences: dict[Symbol, list[tuple[int, int]]] = {}
    for j, sym in enumerate(p.top):
        occurrences.setdefault(sym, []).append((0, j))
    for j, sym in enumerate(p.bottom):
        occurrences.setdefault(sym, []).append((1, j))
    for sym, occ in occurrences.items():
        (line_a, ja), (line_b, jb) = occ
        va0 = top_vertex(ja) if line_a == 0 else bot_vertex(ja)
        va1 = top_vertex(ja + 1) if line_a == 0 else bot_vertex(ja + 1)
        vb0 = top_vertex(jb) if line_b == 0 else bot_vertex(jb)
        vb1 = top_vertex(jb + 1) if line_b == 0 else bot_vertex(jb + 1)
        if line_a != line_b:
            union(va0, vb0)  # translation
            union(va1, vb1)
        else:
            union(va0, vb1)  # central symmetry
            union(va1, vb0)

    # interior angles, walking the boundary counterclockwise
    angles = [0.0] * nv

    def edge_vec(pts, j):
        return (pts[j + 1][0] - pts[j][0], pts[j + 1][1] - pts[j][1])

    def neg(v):
        return (-v[0], -v[1])

    angles[0] = _interior_angle(neg(edge_vec(top_pts, 0)), edge_vec(bot_pts, 0))
    angles[1] = _interior_angle(edge_vec(bot_pts, s - 1), neg(edge_vec(top_pts, r - 1)))
    for j in range(1, r):
        angles[top_vertex(j)] = _interior_angle(
            neg(edge_vec(top_pts, j)), neg(edge_vec(top_pts, j - 1))
        )
    for j in range(1, s):
        angles[bot_vertex(j)] = _interior_angle(
            edge_vec(bot_pts, j - 1), edge_vec(bot_pts, j)
        )

    totals: dict[int, float] = {}
    for v in range(nv):
        totals[find(v)] = totals.get(find(v), 0.0) + angles[v]

    abelian = is_true_permutation(p)
    degrees_by_class: dict[int, int] = {}
    for cls, total in totals.items():
        halfturns = round(total / math.pi)
        if abs(total - halfturns * math.pi) > 0.1 * math.pi:
            raise RoundingUnstable(f"cycle angle {total} not near a multiple of pi")
        if abelian:
            if halfturns % 2:
                raise RoundingUnstable(f"odd half-turn count {halfturns} on a translation surface")
            degrees_by_class[cls] = halfturns // 2 - 1
        else:
            degrees_by_class[cls] = halfturns - 2

    degrees = tuple(sorted(degrees_by_class.values(), reverse=True))
    left = degrees_by_class[find(0)]
    right = degrees_by_class[find(1)] if abelian else None
    return _assemble(
        Holonomy.ABELIAN if abelian else Holonomy.QUADRATIC,
        degrees,
        left,
        right,
        alphabet=p.alphabet_size,
        is_diagram=False,
    )


def _assemble(holonomy, degrees, left, right, alphabet, is_diagram):
    total = sum(degrees)
    if holonomy is Holonomy.ABELIAN:
        assert total % 2 == 0 and all(d >= 0 for d in degrees), degrees
        genus = (total + 2) // 2
    else:
        assert total % 4 == 0 and all(d >= -1 for d in degrees), degrees
        genus = (total + 4) // 4
    expected = 2 * genus + len(degrees) - (2 if is_diagram else 1)
    assert alphabet == expected, (alphabet, degrees, genus)
    return SingularityProfile(
        holonomy=holonomy,
        degrees=degrees,
        genus=genus,
        left_degree=left,
        right_degree=right,
        marked_points=sum(1 for d in degrees if d == 0),
    )


# ---------------------------------------------------------------------------
# exact method: arc-end cycles of a cylinder diagram


def stratum_of_diagram(cd: CylinderDiagram) -> SingularityProfile:
    """Profile via exact arc-end combinatorics (no floating point)."""
    top, bottom = cd.top, cd.bottom
    if not feasibility.line_balance_ok(top, bottom):
        raise LengthInfeasible(str(cd))

    # nodes: (line, position, end) with end 0 = left, 1 = right
    def node(line, j, end):
        return ((len(top) if line else 0) + j) * 2 + end

    nn = 2 * (len(top) + len(bottom))
    junction = [0] * nn  # junction partner of each node
    gluing = [0] * nn
    for line, word in enumerate((top, bottom)):
        m = len(word)
        for j in range(m):
            a = node(line, j, 1)
            b = node(line, (j + 1) % m, 0)
            junction[a] = b
            junction[b] = a
    occurrences: dict[Symbol, list[tuple[int, int]]] = {}
    for line, word in enumerate((top, bottom)):
        for j, sym in enumerate(word):
            occurrences.setdefault(sym, []).append((line, j))
    for occ in occurrences.values():
        (la, ja), (lb, jb) = occ
        if la != lb:
            for end in (0, 1):
                gluing[node(la, ja, end)] = node(lb, jb, end)
                gluing[node(lb, jb, end)] = node(la, ja, end)
        else:
            for end in (0, 1):
                gluing[node(la, ja, end)] = node(lb, jb, 1 - end)
                gluing[node(lb, jb, 1 - end)] = node(la, ja, end)

    abelian = all(la != lb for (la, _), (lb, _) in occurrences.values())
    seen = [False] * nn
    degrees = []
    junction_total = 0
    for start in range(nn):
        if seen[start]:
            continue
        count = 0
        v = start
        while not seen[v]:
            seen[v] = True
            w = gluing[v]
            seen[w] = True
            v = junction[w]
            count += 1
        junction_total += count
        if abelian:
            assert count % 2 == 0, "translation surface angles are full turns"
            degrees.append(count // 2 - 1)
        else:
            degrees.append(count - 2)
    assert junction_total == len(top) + len(bottom)

    degrees = tuple(sorted(degrees, reverse=True))
    return _assemble(
        Holonomy.ABELIAN if abelian else Holonomy.QUADRATIC,
        degrees,
        None,
        None,
        alphabet=(len(top) + len(bottom)) // 2,
        is_diagram=True,
    )
