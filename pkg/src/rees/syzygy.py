"""Graded matrices over k[x0,x1] and the syzygy computations built on them.

The three workhorses:

  * signed_maximal_minors -- the alternating-sign maximal minors of an
    n x (n-1) presentation matrix, with the unit-gcd (height two) validation;
  * graded_kernel -- minimal homogeneous generators of the kernel of a graded
    map between free modules, found degree by degree (kernels over a
    two-variable polynomial ring are free, so a generator count plus a degree
    budget pin the answer exactly);
  * sigma_invariants / hull_embedding -- the twists of the free hull of the
    cokernel of the first m columns, read off from the kernel of the
    transposed submatrix.

Plus the scroll presentation: the 2 x (1 + sum sigma_i) matrix in fresh
coordinates whose 2 x 2 minors cut out the scroll that the hull's Rees
algebra lives on.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import gradedlin, linalg
from .ring import GradingError, Poly, PolyRing, print_key


class HeightError(ValueError):
    """The ideal of maximal minors fails the height-two requirement."""


class KernelBudgetError(ValueError):
    """graded_kernel ran out of degree budget before finding enough generators."""


@dataclass(frozen=True)
class GradedMatrix:
    """Matrix of homogeneous base-ring polynomials with a declared grading.

    Entry (i, j) is homogeneous of degree col_degrees[j] + row_twists[i]
    (or zero).  rows is a tuple of tuples of Poly.
    """

    ring: PolyRing
    rows: tuple
    col_degrees: tuple
    row_twists: tuple

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.col_degrees)

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    def column(self, j: int):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def validate(self) -> "GradedMatrix":
        for i, row in enumerate(self.rows):
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")
            for j, p in enumerate(row):
                if p.ring != self.ring:
                    raise ValueError("entry from a foreign ring")
                if p.is_zero():
                    continue
                want = self.col_degrees[j] + self.row_twists[i]
                if p.xdeg() != want:
                    raise GradingError(
                        f"entry ({i},{j}) has degree {p.xdeg()}, expected {want}")
        return self

    def transpose(self) -> "GradedMatrix":
        rows = tuple(tuple(self.rows[i][j] for i in range(self.nrows))
                     for j in range(self.ncols))
        return GradedMatrix(self.ring, rows, self.row_twists, self.col_degrees)

    def first_columns(self, m: int) -> "GradedMatrix":
        rows = tuple(row[:m] for row in self.rows)
        return GradedMatrix(self.ring, rows, self.col_degrees[:m], self.row_twists)

    def drop_row(self, i: int) -> "GradedMatrix":
        rows = self.rows[:i] + self.rows[i + 1:]
        twists = self.row_twists[:i] + self.row_twists[i + 1:]
        return GradedMatrix(self.ring, rows, self.col_degrees, twists)

    def to_strings(self):
        return [[str(p) for p in row] for row in self.rows]


def matrix_from_rows(ring: PolyRing, rows, col_degrees, row_twists=None) -> GradedMatrix:
    rows = tuple(tuple(row) for row in rows)
    if row_twists is None:
        row_twists = (0,) * len(rows)
    return GradedMatrix(ring, rows, tuple(col_degrees), tuple(row_twists)).validate()


# -- determinants and minors -------------------------------------------------

def determinant(rows) -> Poly:
    """Determinant of a square matrix of polynomials, by Laplace expansion."""
    k = len(rows)
    ring = rows[0][0].ring
    memo = {}

    def minor(row_idx, col):
        if not row_idx:
            return ring.one()
        key = (row_idx, col)
        got = memo.get(key)
        if got is not None:
            return got
        acc = ring.zero()
        for pos, i in enumerate(row_idx):
            e = rows[i][col]
            if e.is_zero():
                continue
            sub = minor(row_idx[:pos] + row_idx[pos + 1:], col + 1)
            term = e * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return minor(tuple(range(k)), 0)


def signed_maximal_minors(phi: GradedMatrix, check_height: bool = True):
    """The n alternating-sign maximal minors of an n x (n-1) graded matrix.

    Entry i is (-1)^i * det(phi with row i deleted) (rows 0-indexed, so the
    first minor comes with a plus sign).  With check_height, raises
    HeightError unless the minors have unit gcd and are not all zero.
    """
    n = phi.nrows
    if phi.ncols != n - 1:
        raise ValueError(f"expected an n x (n-1) matrix, got {n} x {phi.ncols}")
    minors = []
    for i in range(n):
        sub = [list(phi.rows[k]) for k in range(n) if k != i]
        d = determinant(sub)
        minors.append(d if i % 2 == 0 else -d)
    if check_height:
        if all(f.is_zero() for f in minors):
            raise HeightError("all maximal minors vanish")
        g = homogeneous_gcd([f for f in minors if not f.is_zero()])
        if g.xdeg() != 0:
            raise HeightError(
                f"height < 2: maximal minors share the common factor {g}")
    return minors


# -- gcd of homogeneous bivariate polynomials --------------------------------

def _poly_to_univariate(p: Poly):
    """Split x0^a * x1^b * core and return (a, b, core coeffs in u = x0/x1)."""
    deg = p.xdeg()
    a = min(m[0] for m in p.terms)
    b = min(m[1] for m in p.terms)
    core_deg = deg - a - b
    coeffs = [p.ring.field.zero] * (core_deg + 1)
    for m, c in p.terms.items():
        coeffs[m[0] - a] = c
    return a, b, coeffs


def _univariate_gcd(u, v, field):
    def degree(c):
        for i in range(len(c) - 1, -1, -1):
            if c[i]:
                return i
        return -1

    def rem(num, den):
        num = list(num)
        dd = degree(den)
        lead_inv = field.inv(den[dd])
        for i in range(degree(num), dd - 1, -1):
            if not num[i]:
                continue
            q = field(num[i] * lead_inv)
            for k in range(dd + 1):
                num[i - dd + k] = field(num[i - dd + k] - q * den[k])
        return num[:dd] if dd > 0 else []

    a, b = list(u), list(v)
    while degree(b) >= 0:
        a, b = b, rem(a, b)
    return a[:degree(a) + 1]


def homogeneous_gcd(polys) -> Poly:
    """Monic gcd of nonzero homogeneous polynomials in x0, x1.

    Works through the substitution u = x0/x1: the common monomial part is
    tracked by x0/x1 valuations and the residual factor by a univariate
    Euclidean algorithm over the field.
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("gcd of an empty/zero family is undefined")
    ring = polys[0].ring
    field = ring.field
    a_min = b_min = None
    core = None
    for p in polys:
        a, b, coeffs = _poly_to_univariate(p)
        a_min = a if a_min is None else min(a_min, a)
        b_min = b if b_min is None else min(b_min, b)
        core = coeffs if core is None else _univariate_gcd(core, coeffs, field)
    core_deg = len(core) - 1
    terms = {}
    for k, c in enumerate(core):
        if c:
            terms[(a_min + k, b_min + core_deg - k)] = c
    out = Poly(ring, terms)
    return out.monic()


# -- graded kernels -----------------------------------------------------------

def graded_kernel(M: GradedMatrix, expected_rank: int, degree_budget: int) -> GradedMatrix:
    """Minimal homogeneous generators of ker(M), as matrix columns.

    A homogeneous kernel element of degree L has j-th component in degree
    L - col_degrees[j].  Scanning L = 0, 1, ... we solve the linear system on
    each degree piece, discard what x0/x1-multiples of earlier generators
    already span, and keep canonical new generators.  The search succeeds when
    expected_rank generators with degree sum degree_budget are found; running
    past the budget raises KernelBudgetError (the symptom of an input that
    violates the height/grading hypotheses).

    Column degrees of the result are nondecreasing, and M * result == 0.
    """
    ring = M.ring
    field = ring.field
    q = M.ncols
    found = []          # (degree, component tuple)

    def components_layout(L):
        monos, offsets = [], []
        total = 0
        for j in range(q):
            d = L - M.col_degrees[j]
            basis = [(d - a1, a1) for a1 in range(d + 1)] if d >= 0 else []
            basis.sort(key=print_key, reverse=True)
            offsets.append(total)
            monos.append(basis)
            total += len(basis)
        return monos, offsets, total

    def vector_coords(vec, monos, total):
        out = [field.zero] * total
        pos = 0
        for j in range(q):
            index = {m: pos + k for k, m in enumerate(monos[j])}
            for m, c in vec[j].terms.items():
                out[index[m]] = c
            pos += len(monos[j])
        return out

    L = 0
    while True:
        done = (len(found) == expected_rank
                and sum(d for d, _ in found) == degree_budget)
        if done:
            break
        if L > degree_budget:
            raise KernelBudgetError(
                f"degree budget {degree_budget} exhausted with "
                f"{len(found)}/{expected_rank} kernel generators found")
        monos, offsets, total = components_layout(L)
        if total:
            # Linear system: for each matrix row i and each unknown (j, mu),
            # the coefficient of M[i][j]*mu on the target piece.
            eq_rows = {}
            for j in range(q):
                for k, mu in enumerate(monos[j]):
                    col = offsets[j] + k
                    for i in range(M.nrows):
                        e = M.rows[i][j]
                        for m, c in e.terms.items():
                            key = (i, m[0] + mu[0], m[1] + mu[1])
                            row = eq_rows.get(key)
                            if row is None:
                                row = eq_rows[key] = [field.zero] * total
                            row[col] = field(row[col] + c)
            basis = linalg.nullspace(list(eq_rows.values()), total, field)
            if basis:
                ech = linalg.Echelon(total, field)
                for deg0, vec in found:
                    shift = L - deg0
                    for a1 in range(shift + 1):
                        mult = ring.monomial((shift - a1, a1))
                        prod = tuple(mult * comp for comp in vec)
                        ech.add(vector_coords(prod, monos, total))
                for cand in basis:
                    if ech.contains(cand):
                        continue
                    ech.add(cand)
                    comps = []
                    pos = 0
                    for j in range(q):
                        terms = {}
                        for k, m in enumerate(monos[j]):
                            c = cand[pos + k]
                            if c:
                                terms[m] = c
                        pos += len(monos[j])
                        comps.append(Poly(ring, terms))
                    found.append((L, tuple(comps)))
        L += 1

    rows = tuple(tuple(vec[j] for _, vec in found) for j in range(q))
    kernel = GradedMatrix(ring, rows,
                          tuple(d for d, _ in found),
                          tuple(-c for c in M.col_degrees))
    for i in range(M.nrows):
        for k in range(kernel.ncols):
            acc = ring.zero()
            for j in range(q):
                acc = acc + M.rows[i][j] * kernel.rows[j][k]
            assert acc.is_zero(), "internal error: kernel column fails M*v = 0"
    return kernel


# -- sigma invariants ---------------------------------------------------------

@dataclass(frozen=True)
class SigmaInvariants:
    """Twists of the free hull of the cokernel of the first m columns.

    sigma is nonincreasing with nonnegative entries; s = len(sigma) = n - m;
    r counts the strictly positive entries; sum(sigma) = d_1 + ... + d_m.
    """

    sigma: tuple
    r: int
    s: int

    def __post_init__(self):
        if any(self.sigma[i] < self.sigma[i + 1] for i in range(len(self.sigma) - 1)):
            raise ValueError("sigma must be nonincreasing")
        if any(v < 0 for v in self.sigma):
            raise ValueError("sigma entries must be nonnegative")
        if self.r != sum(1 for v in self.sigma if v > 0) or self.s != len(self.sigma):
            raise ValueError("inconsistent sigma invariants")


def hull_embedding(phi: GradedMatrix, m: int):
    """(SigmaInvariants, xi) for the level-m cokernel.

    xi is the s x n matrix over R whose rows generate the kernel of the
    transpose of the first m columns, listed by nonincreasing row degree
    (stable within a degree, so equal-degree rows keep the canonical kernel
    order).  Row i is homogeneous of degree sigma_i and xi * phi_m = 0.
    """
    n = phi.nrows
    if not 1 <= m <= n - 1:
        raise ValueError(f"level m must be in 1..{n - 1}")
    budget = sum(phi.col_degrees[:m])
    kernel = graded_kernel(phi.first_columns(m).transpose(), n - m, budget)
    cols = sorted(range(kernel.ncols),
                  key=lambda k: -kernel.col_degrees[k])
    sigma = tuple(kernel.col_degrees[k] for k in cols)
    inv = SigmaInvariants(sigma, sum(1 for v in sigma if v > 0), n - m)
    xi_rows = tuple(tuple(kernel.rows[j][k] for j in range(n)) for k in cols)
    xi = GradedMatrix(phi.ring, xi_rows, (0,) * n, sigma)
    assert sum(sigma) == budget
    return inv, xi


def sigma_invariants(phi: GradedMatrix, m: int) -> SigmaInvariants:
    return hull_embedding(phi, m)[0]


# -- scroll presentation ------------------------------------------------------

@dataclass(frozen=True)
class ScrollPresentation:
    """2 x (1 + sum of positive sigma_i) matrix whose 2x2 minors cut the scroll.

    ring has one bidegree-(0,1) coordinate v{i}{j} per pair (i, 0 <= j <=
    sigma_i); under v{i}{j} -> x0^(sigma_i - j) * x1^j * w_i those minors all
    vanish in the hull's coordinate ring.
    """

    sigma: SigmaInvariants
    ring: PolyRing
    gamma: tuple          # two rows of ring elements
    minors: tuple

    @property
    def coord_names(self):
        return self.ring.tvar_names


def scroll_matrix(sigma: SigmaInvariants, field) -> ScrollPresentation:
    names = tuple(f"v{i + 1}{j}"
                  for i, si in enumerate(sigma.sigma)
                  for j in range(si + 1))
    V = PolyRing(field, names, (0,) * len(names))

    def coord(i, j):
        return V.var(f"v{i + 1}{j}")

    top = [V.var("x0")]
    bottom = [V.var("x1")]
    for i, si in enumerate(sigma.sigma):
        for j in range(1, si + 1):
            top.append(coord(i, j - 1))
            bottom.append(coord(i, j))
    minors = []
    ncols = len(top)
    for a in range(ncols):
        for b in range(a + 1, ncols):
            minors.append(top[a] * bottom[b] - top[b] * bottom[a])
    return ScrollPresentation(sigma, V, (tuple(top), tuple(bottom)), tuple(minors))


def scroll_realization_images(pres: ScrollPresentation):
    """Images of the scroll coordinates in the hull ring k[x0,x1][w1..ws].

    Coordinate v{i}{j} maps to x0^(sigma_i - j) * x1^j * w_i; substituting
    these into the 2x2 minors gives zero, which is the scroll presentation's
    defining property and a cheap self-check.
    """
    from .ring import ring_scroll
    sigma = pres.sigma.sigma
    target = ring_scroll(pres.ring.field, sigma)
    s = len(sigma)
    images = []
    for i, si in enumerate(sigma):
        for j in range(si + 1):
            exps = [si - j, j] + [0] * s
            exps[2 + i] = 1
            images.append(target.monomial(exps))
    return images
