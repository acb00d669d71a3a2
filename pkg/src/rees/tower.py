"""Per-level data for the tower of approximations of the Rees ideal.

Fixing 1 <= m <= n-1, the cokernel of the first m columns of the presentation
matrix embeds into a free module with twists sigma_1 >= ... >= sigma_s
(s = n - m).  A TowerLevel packages:

  * the embedding matrix in raw and normalized form (normalization makes the
    degree-zero rows an identity block via a constant change of T-coordinates,
    then clears the remaining entries of those columns by row operations on
    the hull side);
  * for each hull row i, the kernel of the embedding with that row dropped,
    and the induced multiplication data: scalars p[i][j] in k[x0,x1] and
    T-linear forms q[i][j], which together drive the generator recursion
    ("multiply by w_i" expressed on representatives).

Everything user-facing is reported in the caller's original T-coordinates;
the recorded coordinate change maps back and forth.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import gradedlin, linalg
from .ring import (Poly, PolyRing, apply_T_coordinate_change, bidegree, promote,
                   ring_R, ring_S, ring_scroll, substitute_T_with_w)
from .syzygy import (GradedMatrix, HeightError, SigmaInvariants, graded_kernel,
                     hull_embedding, matrix_from_rows, signed_maximal_minors)


class NormalizationError(RuntimeError):
    """Constant rows of the embedding failed to reduce to an identity block."""


@dataclass(frozen=True)
class PresentationInput:
    """A validated n x (n-1) graded presentation matrix and its ambient rings."""

    field: object
    n: int
    col_degrees: tuple
    phi: GradedMatrix
    minors: tuple           # signed maximal minors, unit gcd guaranteed
    base: PolyRing          # k[x0,x1]
    sring: PolyRing         # k[x0,x1][T1..Tn]


def load_presentation(field, col_degrees, phi_rows) -> PresentationInput:
    """Validate and package a presentation matrix.

    phi_rows are base-ring polynomials, n rows by n-1 columns, entry (i,j)
    homogeneous of degree col_degrees[j] >= 1.  Zero columns are rejected, and
    the signed maximal minors must have unit gcd (height two).
    """
    col_degrees = tuple(col_degrees)
    n = len(phi_rows)
    if n < 3:
        raise ValueError("need n >= 3 rows")
    if len(col_degrees) != n - 1:
        raise ValueError(f"need {n - 1} column degrees for n = {n}")
    if any(d < 1 for d in col_degrees):
        raise ValueError("column degrees must be >= 1")
    if any(col_degrees[j] > col_degrees[j + 1] for j in range(n - 2)):
        raise ValueError("column degrees must be nondecreasing")
    phi = matrix_from_rows(phi_rows[0][0].ring, phi_rows, col_degrees)
    for j in range(n - 1):
        if all(phi.rows[i][j].is_zero() for i in range(n)):
            raise ValueError(f"column {j + 1} of the presentation matrix is zero")
    minors = tuple(signed_maximal_minors(phi))
    return PresentationInput(field, n, col_degrees, phi,
                             minors, phi.ring, ring_S(field, n))


@dataclass(frozen=True)
class SymEquations:
    """The T-linear equations [g_1 .. g_(n-1)] = [T_1 .. T_n] * phi."""

    gs: tuple

    def __iter__(self):
        return iter(self.gs)

    def __getitem__(self, j):
        return self.gs[j]


def sym_equations(inp: PresentationInput) -> SymEquations:
    S = inp.sring
    gs = []
    for j in range(inp.n - 1):
        g = S.zero()
        for i in range(inp.n):
            entry = inp.phi.rows[i][j]
            if not entry.is_zero():
                g = g + promote(entry, S) * S.var(f"T{i + 1}")
        assert bidegree(g) == (inp.col_degrees[j], 1)
        gs.append(g)
    return SymEquations(tuple(gs))


def evaluation_membership(inp: PresentationInput, p: Poly) -> bool:
    """Whether p vanishes under T_i -> y * f_i (f_i the signed minors).

    This is exact membership in the full defining ideal of the Rees algebra,
    checked by plain polynomial expansion in k[x0,x1,y] -- no basis
    computation involved, so it cross-checks every other engine.
    """
    from .ring import substitute_T
    target = PolyRing(inp.field, ("y",), (0,))
    y = target.var("y")
    images = [promote(f, target) * y for f in inp.minors]
    return substitute_T(p, images, target).is_zero()


@dataclass(frozen=True)
class TowerLevel:
    m: int
    inp: PresentationInput
    sigma: SigmaInvariants
    embed_raw: GradedMatrix      # s x n, original T-coordinates
    embed: GradedMatrix          # s x n, normalized level coordinates
    coord_change: tuple          # chi: level variable k = sum_j chi[j][k] T_j
    coord_change_inv: tuple
    drop_row_kernels: tuple      # one n x (m+1) matrix per hull row
    mult_scalars: tuple          # p[i][j] in k[x0,x1]
    mult_forms: tuple            # q[i][j] in S, T-degree 1
    scroll: PolyRing             # k[x0,x1][w1..ws], deg w_i = (-sigma_i, 1)

    # -- coordinate moves ---------------------------------------------------

    def to_level_coords(self, p: Poly) -> Poly:
        return apply_T_coordinate_change(p, self.coord_change_inv)

    def to_original_coords(self, p: Poly) -> Poly:
        return apply_T_coordinate_change(p, self.coord_change)

    # -- substitution into the hull ring -------------------------------------

    def subst(self, p: Poly) -> Poly:
        """Image of a level-coordinate polynomial in k[x0,x1][w]."""
        return substitute_T_with_w(p, self.embed.rows, self.sigma.sigma)

    def subst_raw(self, p: Poly) -> Poly:
        """Image of an original-coordinate polynomial in k[x0,x1][w]."""
        return substitute_T_with_w(p, self.embed_raw.rows, self.sigma.sigma)

    def w_monomial(self, alpha) -> Poly:
        exps = (0, 0) + tuple(alpha)
        return self.scroll.monomial(exps)


def _identity(n, field):
    return tuple(tuple(field.one if i == j else field.zero for j in range(n))
                 for i in range(n))


def _normalize_embedding(xi: GradedMatrix, sigma: SigmaInvariants):
    """Constant column change + hull row operations per the normal form.

    Returns (chi, chi_inv, normalized_xi_rows).  After the change the last
    s - r rows are [0 | identity] and the positive-degree rows vanish on the
    last s - r columns.
    """
    field = xi.ring.field
    n = xi.ncols
    s, r = sigma.s, sigma.r
    if r == s:
        ident = _identity(n, field)
        return ident, ident, xi.rows
    zero_exps = (0, 0)
    const = []
    for k in range(r, s):
        row = xi.rows[k]
        const.append([p.coefficient(zero_exps) for p in row])
    free_part = linalg.nullspace(const, n, field)
    if len(free_part) != n - (s - r):
        raise NormalizationError("constant rows of the embedding are dependent")
    pivot_part = []
    for k in range(s - r):
        unit = [field.one if t == k else field.zero for t in range(s - r)]
        col = linalg.solve(const, unit, n, field)
        if col is None:
            raise NormalizationError("constant rows of the embedding are dependent")
        pivot_part.append(col)
    cols = free_part + pivot_part
    chi = tuple(tuple(cols[k][j] for k in range(n)) for j in range(n))
    chi_inv = linalg.invert([list(row) for row in chi], field)
    if chi_inv is None:
        raise NormalizationError("column change is singular")
    chi_inv = tuple(tuple(row) for row in chi_inv)

    ring = xi.ring
    changed = []
    for i in range(s):
        row = []
        for k in range(n):
            acc = ring.zero()
            for j in range(n):
                c = chi[j][k]
                if c:
                    acc = acc + xi.rows[i][j].scale(c)
            row.append(acc)
        changed.append(row)
    for k in range(s - r):
        for j in range(n):
            want = field.one if j == n - (s - r) + k else field.zero
            got = changed[r + k][j].coefficient(zero_exps)
            if got != want or (not changed[r + k][j].is_zero()
                               and changed[r + k][j].terms.keys() - {zero_exps}):
                raise NormalizationError("identity block did not materialize")
    for i in range(r):
        for k in range(s - r):
            b = changed[i][n - (s - r) + k]
            if b.is_zero():
                continue
            changed[i] = [changed[i][j] - b * changed[r + k][j] for j in range(n)]
    for i in range(r):
        assert all(changed[i][n - (s - r) + k].is_zero() for k in range(s - r))
    return chi, chi_inv, tuple(tuple(row) for row in changed)


def build_level(inp: PresentationInput, m: int) -> TowerLevel:
    """All level-m data: embedding, normalization, and multiplication tables."""
    sigma, xi_raw = hull_embedding(inp.phi, m)
    chi, chi_inv, norm_rows = _normalize_embedding(xi_raw, sigma)
    embed = GradedMatrix(inp.base, norm_rows, (0,) * inp.n, sigma.sigma).validate()
    S = inp.sring
    tvars = [S.var(f"T{i + 1}") for i in range(inp.n)]
    kernels, scalars, forms = [], [], []
    for i in range(sigma.s):
        budget = sum(sigma.sigma) - sigma.sigma[i]
        rho = graded_kernel(embed.drop_row(i), m + 1, budget)
        kernels.append(rho)
        p_row, q_row = [], []
        for j in range(rho.ncols):
            p = inp.base.zero()
            q = S.zero()
            for t in range(inp.n):
                entry = rho.rows[t][j]
                if entry.is_zero():
                    continue
                p = p + embed.rows[i][t] * entry
                q = q + promote(entry, S) * tvars[t]
            p_row.append(p)
            q_row.append(q)
        scalars.append(tuple(p_row))
        forms.append(tuple(q_row))
    return TowerLevel(
        m=m, inp=inp, sigma=sigma, embed_raw=xi_raw, embed=embed,
        coord_change=chi, coord_change_inv=chi_inv,
        drop_row_kernels=tuple(kernels), mult_scalars=tuple(scalars),
        mult_forms=tuple(forms), scroll=ring_scroll(inp.field, sigma.sigma))


def check_truncation_equality(level: TowerLevel, x_window, t_max: int):
    """Compare embedded-piece dimensions against the scroll piece count.

    For x-degree at or past d_m - 1 the image of the bidegree-(i,j) piece of
    the ambient ring inside k[x0,x1][w] must fill the whole piece of
    nonnegative-support monomials; the report lists (i, j, image dim, piece
    dim) for every bidegree in the window.
    """
    d_m = level.inp.col_degrees[level.m - 1]
    lo = min(x_window)
    if lo < d_m - 1:
        raise ValueError(f"window must start at x-degree >= {d_m - 1}")
    S = level.inp.sring
    report = []
    for i in x_window:
        for j in range(1, t_max + 1):
            images = [level.subst(mu) for mu in gradedlin.piece_basis(S, i, j)]
            got = gradedlin.span_dim(images, level.scroll, i, j)
            want = gradedlin.piece_dim(level.scroll, i, j)
            report.append((i, j, got, want))
    return report


def hull_quotient_hilbert(level: TowerLevel):
    """Hilbert function of (free hull)/(embedded module), from the resolution.

    H(i) = sum_k dim R(sigma_k)_i - n*dim R_i + sum_(k<=m) dim R(-d_k)_i,
    clamped at zero.  For n = 3, m = 1 this must equal d_1 - i - 1 on the
    window [-1, d_1 - 1], which is asserted here.
    """
    sigma = level.sigma.sigma
    n = level.inp.n
    degs = level.inp.col_degrees[:level.m]

    def dim_R(t):
        return t + 1 if t >= 0 else 0

    def H(i):
        val = sum(dim_R(i + sk) for sk in sigma)
        val -= n * dim_R(i)
        val += sum(dim_R(i - d) for d in degs)
        return max(val, 0)

    if n == 3 and level.m == 1:
        d1 = level.inp.col_degrees[0]
        for i in range(-1, d1):
            assert H(i) == d1 - i - 1, "hull-quotient Hilbert function mismatch"
    return H
