"""Strict feasibility of suspension heights, decided exactly.

A generalized permutation admits a suspension iff there are rational
heights tau (one per symbol) with every proper prefix sum along the top
line strictly positive, every proper prefix sum along the bottom line
strictly negative, and equal full sums, together with positive lengths
balancing the two lines.  All verdicts here are exact:

- ``prefix_obstruction`` finds the combinatorial infeasibility
  certificates coming from equal mixed-symbol prefixes (for true
  permutations this is the whole story: the classical invariant-prefix
  test);
- ``staircase_witness`` builds a cheap candidate and verifies it with
  integer arithmetic, certifying feasibility when it works;
- ``solve_heights`` is an exact two-phase simplex over Fractions that
  settles the remaining cases and produces witness data.

gmpy2's rationals are used for the simplex when available; results are
identical with stdlib Fractions, only slower.
"""

from __future__ import annotations

from fractions import Fraction

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction

Pair = tuple[tuple[int, ...], tuple[int, ...]]


def line_balance_ok(top: tuple[int, ...], bottom: tuple[int, ...]) -> bool:
    """Positive lengths with equal line totals exist iff the letters
    exclusive to one line (appearing there twice) come in both flavors
    or in neither."""
    seen_top = set(top)
    seen_bot = set(bottom)
    has_top_only = len(seen_top - seen_bot) > 0
    has_bot_only = len(seen_bot - seen_top) > 0
    return has_top_only == has_bot_only


def true_permutation_irreducible(bottom: tuple[int, ...]) -> bool:
    """Classical prefix test on a canonical true permutation.

    The top line is the identity, so an invariant proper prefix exists
    iff some proper prefix of the bottom word is {0, ..., k-1}.
    """
    high = -1
    for k in range(len(bottom) - 1):
        if bottom[k] > high:
            high = bottom[k]
        if high == k:
            return False
    return True


def _mixed_prefix_sets(line: tuple[int, ...], mixed: set[int]):
    # Symbol sets of prefixes consisting of mixed symbols only, keyed by
    # prefix length; stops at the first non-mixed symbol.  Proper
    # prefixes only.
    out = {}
    acc = set()
    for k, sym in enumerate(line[:-1], start=1):
        if sym not in mixed:
            break
        acc.add(sym)
        out[k] = frozenset(acc)
    return out


def prefix_obstruction(top: tuple[int, ...], bottom: tuple[int, ...]) -> bool:
    """True if equal nonempty mixed-symbol proper prefixes exist.

    Such a pair is a Farkas certificate against strict suspension
    heights, so the permutation is reducible.  (This generalizes the
    invariant-prefix test; it is not the only way feasibility can fail
    for genuinely generalized permutations.)
    """
    mixed = set(top) & set(bottom)
    tops = _mixed_prefix_sets(top, mixed)
    bots = _mixed_prefix_sets(bottom, mixed)
    return any(k in bots and bots[k] == s for k, s in tops.items())


def _height_rows(top: tuple[int, ...], bottom: tuple[int, ...], n: int):
    # Integer inequality rows (each must be strictly positive) and the
    # top-total-minus-bottom-total equality row.
    rows = []
    acc = [0] * n
    for sym in top[:-1]:
        acc[sym] += 1
        rows.append(tuple(acc))
    acc[top[-1]] += 1
    diff = acc
    acc = [0] * n
    for sym in bottom[:-1]:
        acc[sym] -= 1
        rows.append(tuple(acc))
    acc[bottom[-1]] -= 1
    eq = tuple(a + b for a, b in zip(diff, acc))
    return rows, eq


def _verify(top, bottom, tau) -> bool:
    total_top = 0
    run = 0
    for sym in top[:-1]:
        run += tau[sym]
        if run <= 0:
            return False
    total_top = run + tau[top[-1]]
    run = 0
    for sym in bottom[:-1]:
        run += tau[sym]
        if run >= 0:
            return False
    return total_top == run + tau[bottom[-1]]


def staircase_witness(top: tuple[int, ...], bottom: tuple[int, ...], n: int):
    """Cheap feasibility certificate: staircase heights projected exactly
    onto the total-equality hyperplane.  Returns verified heights or None.
    """
    tau = [0] * n
    r, s = len(top), len(bottom)
    for i, sym in enumerate(top):
        tau[sym] += r - i
    for j, sym in enumerate(bottom):
        tau[sym] -= s - j
    count = [0] * n
    for sym in top:
        count[sym] += 1
    for sym in bottom:
        count[sym] -= 1
    ee = sum(c * c for c in count)
    if ee:
        # tau <- tau - (e.tau / e.e) e, with a common denominator ee
        et = sum(c * t for c, t in zip(count, tau))
        tau = [ee * t - et * c for t, c in zip(tau, count)]
    if _verify(top, bottom, tau):
        return [Fraction(t, ee if ee else 1) for t in tau]
    return None


def is_strictly_feasible(top: tuple[int, ...], bottom: tuple[int, ...]) -> bool:
    """Exact decision: do strict suspension heights and balanced positive
    lengths exist for this canonical pair?"""
    n = (len(top) + len(bottom)) // 2
    if len(top) == len(bottom) and len(set(top)) == n and len(set(bottom)) == n:
        return true_permutation_irreducible(bottom)
    if not line_balance_ok(top, bottom):
        return False
    if prefix_obstruction(top, bottom):
        return False
    if staircase_witness(top, bottom, n) is not None:
        return True
    return solve_heights(top, bottom) is not None


def solve_heights(
    top: tuple[int, ...],
    bottom: tuple[int, ...],
    zero_total: bool = False,
):
    """Maximize the least prefix slack by exact LP; return heights or None.

    With ``zero_total`` both full sums are pinned to zero (wanted by the
    polygon construction), otherwise only to each other.
    """
    n = (len(top) + len(bottom)) // 2
    rows, eq = _height_rows(top, bottom, n)
    if not rows:
        # single-arc lines: no proper prefixes to constrain
        return [Fraction(0)] * n
    total_top = [0] * n
    for sym in top:
        total_top[sym] += 1

    # Variables: v_i = tau_i + 1 in [0, 2] (i < n), then eps+ and eps-.
    # maximize eps+ - eps- subject to
    #   row . v - eps+ + eps- >= row . 1   (prefix slack)
    #   v_i <= 2
    #   eq . v = eq . 1            (equal totals)
    #   [total_top . v = total_top . 1     when zero_total]
    nv = n + 2
    a_rows = []
    senses = []
    rhs = []
    for row in rows:
        a_rows.append(list(row) + [-1, 1])
        senses.append(">=")
        rhs.append(sum(row))
    for i in range(n):
        cons = [0] * nv
        cons[i] = 1
        a_rows.append(cons)
        senses.append("<=")
        rhs.append(2)
    a_rows.append(list(eq) + [0, 0])
    senses.append("=")
    rhs.append(sum(eq))
    if zero_total:
        a_rows.append(list(total_top) + [0, 0])
        senses.append("=")
        rhs.append(sum(total_top))
    objective = [0] * n + [1, -1]
    sol = _simplex_max(objective, a_rows, senses, rhs)
    if sol is None:
        return None
    value, x = sol
    if value <= 0:
        return None
    return [Fraction(x[i]) - 1 for i in range(n)]


def _simplex_max(c, a_rows, senses, rhs):
    """Two-phase tableau simplex, exact arithmetic, Bland's rule.

    maximize c.x  s.t.  A x (sense) b,  x >= 0.  Returns (value, x) or
    None when infeasible.  The objectives fed to this routine are
    bounded (the feasible slack lives in a box), so no unbounded-ray
    handling beyond an assertion is needed.
    """
    Q = _mpq
    m = len(a_rows)
    nx = len(c)
    rows = []
    bcol = []
    for i in range(m):
        row = [Q(v) for v in a_rows[i]]
        bi = Q(rhs[i])
        sense = senses[i]
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
            sense = {"<=": ">=", ">=": "<=", "=": "="}[sense]
        rows.append((row, sense))
        bcol.append(bi)

    n_slack = sum(1 for _, s in rows if s != "=")
    n_art = sum(1 for _, s in rows if s != "<=")
    n_real = nx + n_slack
    total = n_real + n_art
    tableau = []
    basis = []
    si = 0
    ai = 0
    for row, sense in rows:
        line = row + [Q(0)] * (n_slack + n_art)
        if sense == "<=":
            line[nx + si] = Q(1)
            basis.append(nx + si)
            si += 1
        else:
            if sense == ">=":
                line[nx + si] = Q(-1)
                si += 1
            line[n_real + ai] = Q(1)
            basis.append(n_real + ai)
            ai += 1
        tableau.append(line)

    def pivot(r, col):
        piv = tableau[r][col]
        inv = Q(1) / piv
        prow = [v * inv for v in tableau[r]]
        tableau[r] = prow
        bcol[r] = pb = bcol[r] * inv
        for i in range(m):
            if i == r:
                continue
            f = tableau[i][col]
            if f:
                tableau[i] = [v - f * w for v, w in zip(tableau[i], prow)]
                bcol[i] = bcol[i] - f * pb
        basis[r] = col

    def run(objrow, allowed):
        # objrow is the initial z-row (-objective); maximizes.  Returns
        # the optimal objective value.
        zrow = list(objrow)
        zval = Q(0)
        for i in range(m):
            f = zrow[basis[i]]
            if f:
                zrow = [v - f * w for v, w in zip(zrow, tableau[i])]
                zval -= f * bcol[i]
        while True:
            col = -1
            for j in range(allowed):
                if zrow[j] < 0:
                    col = j
                    break
            if col < 0:
                return zval
            best = None
            brow = -1
            for i in range(m):
                a = tableau[i][col]
                if a > 0:
                    ratio = bcol[i] / a
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[brow]
                    ):
                        best = ratio
                        brow = i
            assert brow >= 0, "objective is bounded by construction"
            f = zrow[col]
            pivot(brow, col)
            zrow = [v - f * w for v, w in zip(zrow, tableau[brow])]
            zval -= f * bcol[brow]

    if n_art:
        # phase 1: maximize -(sum of artificials); z-row = +1 on them
        phase1 = [Q(0)] * n_real + [Q(1)] * n_art
        zrow = phase1
        val = run(zrow, n_real)
        if val != 0:
            return None
        for i in range(m):
            if basis[i] >= n_real:
                for j in range(n_real):
                    if tableau[i][j] != 0:
                        pivot(i, j)
                        break
    obj = [-Q(v) for v in c] + [Q(0)] * (total - nx)
    val = run(obj, n_real)
    x = [Q(0)] * nx
    for i in range(m):
        if basis[i] < nx:
            x[basis[i]] = bcol[i]
    return val, [Fraction(int(v.numerator), int(v.denominator)) for v in x]
