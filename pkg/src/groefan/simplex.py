"""Exact rational simplex with Bland's rule.

Problems here are tiny (at most a few hundred rows/columns), so a dense
two-phase tableau over exact rationals is both fast enough and immune to
cycling and rounding.
"""

from .rationals import QQ

OPTIMAL = 'optimal'
INFEASIBLE = 'infeasible'
UNBOUNDED = 'unbounded'


class LPResult:
    """Outcome of a linear program.

    status   -- OPTIMAL, INFEASIBLE or UNBOUNDED
    x        -- optimal point (tuple of rationals) when OPTIMAL
    value    -- objective value at x
    farkas   -- on INFEASIBLE, a vector mu over the rows (ub rows first,
                then eq rows) with mu_ub <= 0, sum_i mu_i * row_i weakly
                nonpositive on every admissible variable direction, and
                mu . b > 0; it certifies that no feasible point exists.
    """

    def __init__(self, status, x=None, value=None, farkas=None):
        self.status = status
        self.x = x
        self.value = value
        self.farkas = farkas

    def __repr__(self):
        return 'LPResult(%s)' % self.status


def _pivot(tab, basis, row, col):
    piv = tab[row][col]
    tab[row] = [x / piv for x in tab[row]]
    prow = tab[row]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [a - f * b for a, b in zip(tab[i], prow)]
    basis[row] = col


def _run_simplex(tab, basis, cost, banned):
    """Minimize over the current tableau; cost is the full cost vector.

    Returns (status, objective_row) where objective_row holds the final
    reduced costs followed by the negated objective value.
    """
    ncols = len(tab[0]) - 1
    z = [QQ(c) for c in cost] + [QQ(0)]
    for i, bv in enumerate(basis):
        if z[bv] != 0:
            f = z[bv]
            z = [a - f * b for a, b in zip(z, tab[i])]
    # most-negative-cost pivoting, falling back to Bland's rule (which cannot
    # cycle) once the iteration count suggests degeneracy
    bland_after = 50 * (len(tab) + ncols)
    iters = 0
    while True:
        iters += 1
        enter = None
        if iters < bland_after:
            best_rc = 0
            for j in range(ncols):
                if j not in banned and z[j] < best_rc:
                    best_rc = z[j]
                    enter = j
        else:
            for j in range(ncols):
                if j not in banned and z[j] < 0:
                    enter = j
                    break
        if enter is None:
            return OPTIMAL, z
        leave = None
        best = None
        for i in range(len(tab)):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return UNBOUNDED, z
        _pivot(tab, basis, leave, enter)
        f = z[enter]
        if f != 0:
            z = [a - f * b for a, b in zip(z, tab[leave])]


def solve_lp(objective, a_ub=(), b_ub=(), a_eq=(), b_eq=(), nonneg=False, maximize=True):
    """Solve max/min objective . x subject to a_ub x <= b_ub and a_eq x = b_eq.

    Variables are free unless nonneg is set.  All data may be ints,
    Fractions or mpq; results are exact.
    """
    a_ub = [list(r) for r in a_ub]
    a_eq = [list(r) for r in a_eq]
    nvars = len(objective)
    for r in a_ub + a_eq:
        assert len(r) == nvars, 'dimension mismatch'

    # columns: structurals (doubled when free), slacks, artificials
    width = nvars if nonneg else 2 * nvars
    nslack = len(a_ub)
    rows = []
    signs = []
    rhs = []
    for idx, (row, b) in enumerate(list(zip(a_ub, b_ub)) + list(zip(a_eq, b_eq))):
        sigma = 1 if QQ(b) >= 0 else -1
        signs.append(sigma)
        coeffs = [sigma * QQ(x) for x in row]
        if not nonneg:
            coeffs = [c for x in coeffs for c in (x, -x)]
        slack = [QQ(0)] * nslack
        if idx < nslack:
            slack[idx] = QQ(sigma)
        rows.append(coeffs + slack)
        rhs.append(sigma * QQ(b))

    m = len(rows)
    basis = []
    art_cols = []
    tab = []
    for i in range(m):
        natural = i < nslack and signs[i] == 1
        tab.append(rows[i])
        basis.append(width + i if natural else None)
    # artificial columns appended after slacks for rows lacking a natural basis
    nart = sum(1 for b in basis if b is None)
    art_start = width + nslack
    k = 0
    for i in range(m):
        art = [QQ(0)] * nart
        if basis[i] is None:
            art[k] = QQ(1)
            basis[i] = art_start + k
            art_cols.append(art_start + k)
            k += 1
        tab[i] = tab[i] + art + [rhs[i]]

    total_cols = art_start + nart
    phase1_cost = [QQ(0)] * total_cols
    for j in art_cols:
        phase1_cost[j] = QQ(1)

    status, z = _run_simplex(tab, basis, phase1_cost, banned=set())
    assert status == OPTIMAL  # phase 1 is bounded below by zero
    if -z[-1] > 0:
        # infeasible; recover duals y_i = 1 - rc(artificial_i) for rows with
        # an artificial, y_i = -rc(slack_i) for rows whose slack started basic
        farkas = []
        it = iter(art_cols)
        col_for_row = {}
        for i in range(m):
            natural = i < nslack and signs[i] == 1
            if not natural:
                col_for_row[i] = next(it)
        for i in range(m):
            if i in col_for_row:
                yi = QQ(1) - z[col_for_row[i]]
            else:
                # natural slack basic start: rc(slack_i) = -y_i
                yi = -z[width + i]
            farkas.append(signs[i] * yi)
        return LPResult(INFEASIBLE, farkas=tuple(farkas))

    # drop artificials from the basis where possible, banning them afterwards
    banned = set(art_cols)
    for i in range(m):
        if basis[i] in banned:
            piv = None
            for j in range(total_cols):
                if j not in banned and tab[i][j] != 0:
                    piv = j
                    break
            if piv is not None:
                _pivot(tab, basis, i, piv)

    sign = -1 if maximize else 1
    cost = [QQ(0)] * total_cols
    for j in range(nvars):
        if nonneg:
            cost[j] = sign * QQ(objective[j])
        else:
            cost[2 * j] = sign * QQ(objective[j])
            cost[2 * j + 1] = -sign * QQ(objective[j])

    status, z = _run_simplex(tab, basis, cost, banned)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    point = [QQ(0)] * total_cols
    for i, bv in enumerate(basis):
        point[bv] = tab[i][-1]
    if nonneg:
        x = tuple(point[j] for j in range(nvars))
    else:
        x = tuple(point[2 * j] - point[2 * j + 1] for j in range(nvars))
    value = sum(QQ(c) * xi for c, xi in zip(objective, x))
    return LPResult(OPTIMAL, x=x, value=value)


def lp_feasible(a_ub=(), b_ub=(), a_eq=(), b_eq=(), nonneg=False):
    """Feasibility check; returns LPResult with a point or a Farkas vector."""
    nvars = len(a_ub[0]) if a_ub else len(a_eq[0])
    return solve_lp([0] * nvars, a_ub, b_ub, a_eq, b_eq, nonneg=nonneg)
