"""Producers of certified defining equations for the Rees algebra.

Every producer returns GeneratorRecord objects: a polynomial in the caller's
original T-coordinates together with its bidegree, how it was constructed,
and an independently checkable certificate:

  * recursion records h_alpha satisfy
        subst(h_alpha) = subst(g) * w^alpha
    in k[x0,x1][w1..ws], where g is the driving column equation and subst is
    the substitution T_j -> sum_i xi[i][j] w_i along the hull embedding;
  * sym-equation and scroll records have vanishing substitution image;
  * slice records hit a recorded hull-ring target exactly.

The recursion solves, at each exponent step alpha -> alpha - e_i, a graded
linear system expressing the previous polynomial as a combination of the
multiplication scalars p[i][j]; replacing each scalar by its T-linear partner
q[i][j] multiplies the hull image by w_i.  Which coordinate is stepped first
is a free choice ("pivot"); the resulting polynomials may differ but their
hull images never do.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import combinat, gradedlin, linalg
from .ring import Poly, bidegree, promote, substitute_T
from .syzygy import homogeneous_gcd, scroll_matrix, scroll_realization_images
from .tower import (PresentationInput, TowerLevel, build_level, sym_equations)


@dataclass
class GeneratorRecord:
    """One emitted equation plus the evidence it was built correctly."""

    poly: Poly
    bidegree: tuple
    provenance: str              # sym-equation | recursion | slice | scroll
    alpha: tuple | None
    detail: dict = dc_field(default_factory=dict)
    certificate: str = ""
    certificate_ok: bool = False

    def as_dict(self) -> dict:
        return {
            "poly": str(self.poly),
            "bidegree": list(self.bidegree),
            "provenance": self.provenance,
            "alpha": list(self.alpha) if self.alpha is not None else None,
            "detail": self.detail,
            "certificate": self.certificate,
            "certificate_ok": self.certificate_ok,
        }


def _pivot_index(alpha, rule: str) -> int:
    support = [i for i, a in enumerate(alpha) if a > 0]
    return support[0] if rule == "smallest" else support[-1]


def recursion_generators(level: TowerLevel, g_next: Poly,
                         pivot_rule: str = "smallest") -> list:
    """The family h_alpha with hull image subst(g_next) * w^alpha.

    Exponents run over the vectors of weight at most d_(m+1) - d_m supported
    on the positive twists; h_0 = g_next, and each step divides the previous
    polynomial by the multiplication scalars of the pivot coordinate and
    re-multiplies by their T-linear partners.  Emitted in ascending weight.
    """
    if pivot_rule not in ("smallest", "largest"):
        raise ValueError("pivot_rule must be 'smallest' or 'largest'")
    inp = level.inp
    if level.m > inp.n - 2:
        raise ValueError("no driving column beyond the top level")
    d_m = inp.col_degrees[level.m - 1]
    d_next = inp.col_degrees[level.m]
    if bidegree(g_next) != (d_next, 1):
        raise ValueError("driving equation must have bidegree (d_(m+1), 1)")
    sigma = level.sigma.sigma
    S = inp.sring
    alphas = combinat.below_weight_exponents(d_next - d_m + 1, sigma)
    base_image = level.subst_raw(g_next)
    scalars = [[promote(p, S) for p in row] for row in level.mult_scalars]

    memo: dict = {}
    records = []
    for alpha in alphas:
        if not any(alpha):
            h = level.to_level_coords(g_next)
            detail: dict = {}
        else:
            i = _pivot_index(alpha, pivot_rule)
            prev = memo[tuple(a - (1 if t == i else 0)
                              for t, a in enumerate(alpha))]
            coeffs = gradedlin.solve_combination(prev, scalars[i], S)
            if coeffs is None:
                raise ArithmeticError(
                    "recursion step unsolvable: multiplication scalars do not "
                    "reach the previous polynomial")
            h = S.zero()
            for a_j, q_j in zip(coeffs, level.mult_forms[i]):
                if not a_j.is_zero():
                    h = h + a_j * q_j
            detail = {"pivot": i + 1}
        memo[alpha] = h
        poly = level.to_original_coords(h)
        bid = bidegree(poly)
        expected = (d_next - combinat.weight(alpha, sigma), sum(alpha) + 1)
        if bid != expected:
            raise ArithmeticError(f"recursion emitted bidegree {bid}, "
                                  f"expected {expected}")
        ok = level.subst_raw(poly) == base_image * level.w_monomial(alpha)
        records.append(GeneratorRecord(
            poly=poly, bidegree=bid, provenance="recursion", alpha=alpha,
            detail=detail,
            certificate="hull image equals the driving equation's image "
                        "times w^alpha",
            certificate_ok=ok))
    return records


def tower_generators(inp: PresentationInput, m: int) -> list:
    """Sym-equation records for the first m columns plus the level-m recursion."""
    if not 1 <= m <= inp.n - 2:
        raise ValueError("level must lie between 1 and n-2")
    level = build_level(inp, m)
    gs = sym_equations(inp)
    records = []
    for j in range(m):
        g = gs[j]
        records.append(GeneratorRecord(
            poly=g, bidegree=bidegree(g), provenance="sym-equation",
            alpha=None, detail={"column": j + 1},
            certificate="hull image vanishes",
            certificate_ok=level.subst_raw(g).is_zero()))
    records.extend(recursion_generators(level, gs[m]))
    return records


def sylvester_form(p1: Poly, p2: Poly, f: Poly, g: Poly) -> Poly:
    """Determinant of the coefficient matrix writing f, g over p1, p2.

    p1, p2 are homogeneous base-ring polynomials with no common factor
    (otherwise ValueError "not a regular sequence"); f and g are written as
    canonical graded combinations f = a1 p1 + a2 p2, g = b1 p1 + b2 p2
    (ValueError "not in the ideal" if impossible) and the result is
    a1 b2 - a2 b1.
    """
    if p1.is_zero() or p2.is_zero() or homogeneous_gcd([p1, p2]).xdeg() != 0:
        raise ValueError("not a regular sequence")
    S = f.ring
    gens = [promote(p1, S), promote(p2, S)]
    rows = []
    for target in (f, g):
        coeffs = gradedlin.solve_combination(target, gens, S)
        if coeffs is None:
            raise ValueError("not in the ideal generated by the pair")
        rows.append(coeffs)
    return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]


@dataclass(frozen=True)
class SliceBasis:
    """Scroll monomials completing the embedded image, one tuple per x-degree.

    monomials[l] spans a complement of the image of the ambient (l, 1) piece
    inside the hull ring's (l, 1) piece, for l = 0 .. d_1 - 2; the complement
    has dimension d_1 - l - 1.
    """

    monomials: tuple


def slice_basis(level: TowerLevel) -> SliceBasis:
    inp = level.inp
    if inp.n != 3 or level.m != 1:
        raise ValueError("slice basis is defined for n = 3 at level 1")
    d1 = inp.col_degrees[0]
    scroll = level.scroll
    S = inp.sring
    out = []
    for l in range(d1 - 1):
        ech = linalg.Echelon(gradedlin.piece_dim(scroll, l, 1), inp.field)
        for mu in gradedlin.piece_basis(S, l, 1):
            img = level.subst(mu)
            if not img.is_zero():
                ech.add(gradedlin.coordinates(img, l, 1))
        chosen = []
        for nu in gradedlin.piece_basis(scroll, l, 1):
            if ech.add(gradedlin.coordinates(nu, l, 1)):
                chosen.append(nu)
        if len(chosen) != d1 - l - 1:
            raise ArithmeticError("hull quotient has unexpected dimension")
        out.append(tuple(chosen))
    return SliceBasis(monomials=tuple(out))


def _subst_preimage(level: TowerLevel, target: Poly, xdeg: int, tdeg: int) -> Poly:
    """Canonical ambient polynomial of bidegree (xdeg, tdeg) hitting target."""
    S = level.inp.sring
    monos = gradedlin.piece_basis(S, xdeg, tdeg)
    dim = gradedlin.piece_dim(level.scroll, xdeg, tdeg)
    cols = [gradedlin.coordinates(level.subst(mu), xdeg, tdeg) for mu in monos]
    rows = [[cols[j][r] for j in range(len(monos))] for r in range(dim)]
    sol = linalg.solve(rows, gradedlin.coordinates(target, xdeg, tdeg),
                       len(monos), level.inp.field)
    if sol is None:
        raise ArithmeticError("hull-ring target misses the ambient image")
    h = S.zero()
    for c, mu in zip(sol, monos):
        if c:
            h = h + mu.scale(c)
    if not level.subst(h) == target:
        raise ArithmeticError("preimage check failed")
    return h


def slice_generators(inp: PresentationInput, i: int,
                     level: TowerLevel | None = None,
                     basis: SliceBasis | None = None) -> list:
    """Generators of the degree-i slice of the Rees ideal as a k[T]-module.

    Defined for n = 3 and i >= d_1 - 1.  With c = d_2 - i, the supply is:
    x-monomial multiples of the first column equation; for c >= 1 the
    weight-drop family (hull targets subst(g_2) x0^j x1^k w^alpha) and the
    hull-basis family (targets subst(g_2) * mu * w^alpha for mu in the slice
    basis at the overshoot); for c <= 0 the x-monomial multiples of the second
    column equation and T-degree-1 hull-piece lifts.
    """
    if inp.n != 3:
        raise ValueError("slice construction requires n = 3")
    d1, d2 = inp.col_degrees
    if i < d1 - 1:
        raise ValueError("x-degree must be at least d_1 - 1")
    if level is None:
        level = build_level(inp, 1)
    sigma = level.sigma.sigma
    S = inp.sring
    g1, g2 = sym_equations(inp)
    base = level.subst(level.to_level_coords(g2))
    c = d2 - i
    records = []

    for a in range(i - d1 + 1):
        mono = S.monomial((i - d1 - a, a) + (0,) * inp.n)
        poly = g1 * mono
        records.append(GeneratorRecord(
            poly=poly, bidegree=(i, 1), provenance="slice", alpha=None,
            detail={"part": "first-equation-multiple",
                    "x0": i - d1 - a, "x1": a},
            certificate="hull image vanishes",
            certificate_ok=level.subst_raw(poly).is_zero()))

    if c >= 1:
        for j, k, alpha in combinat.weight_drop_monomials(c, sigma):
            xmono = level.scroll.monomial((j, k) + (0,) * len(sigma))
            target = base * xmono * level.w_monomial(alpha)
            h = _subst_preimage(level, target, i, sum(alpha) + 1)
            poly = level.to_original_coords(h)
            records.append(GeneratorRecord(
                poly=poly, bidegree=(i, sum(alpha) + 1), provenance="slice",
                alpha=alpha, detail={"part": "weight-drop", "xsplit": [j, k]},
                certificate="hull image equals the second equation's image "
                            "times x^(j,k) w^alpha",
                certificate_ok=level.subst(h) == target))
        if basis is None:
            basis = slice_basis(level)
        for alpha in combinat.minimal_weight_exponents(c, sigma):
            ell = combinat.weight(alpha, sigma) - c
            if ell > d1 - 2:
                continue
            for idx, nu in enumerate(basis.monomials[ell]):
                target = base * nu * level.w_monomial(alpha)
                h = _subst_preimage(level, target, i, sum(alpha) + 2)
                poly = level.to_original_coords(h)
                records.append(GeneratorRecord(
                    poly=poly, bidegree=(i, sum(alpha) + 2), provenance="slice",
                    alpha=alpha,
                    detail={"part": "hull-basis", "excess": ell,
                            "basis_index": idx + 1},
                    certificate="hull image equals the second equation's "
                                "image times a complement monomial and "
                                "w^alpha",
                    certificate_ok=level.subst(h) == target))
    else:
        for a in range(-c + 1):
            mono = S.monomial((-c - a, a) + (0,) * inp.n)
            poly = g2 * mono
            records.append(GeneratorRecord(
                poly=poly, bidegree=(i, 1), provenance="slice", alpha=None,
                detail={"part": "second-equation-multiple",
                        "x0": -c - a, "x1": a},
                certificate="x-monomial multiple of the second equation",
                certificate_ok=True))
        for nu in gradedlin.piece_basis(level.scroll, -c, 1):
            target = base * nu
            h = _subst_preimage(level, target, i, 2)
            poly = level.to_original_coords(h)
            records.append(GeneratorRecord(
                poly=poly, bidegree=(i, 2), provenance="slice", alpha=None,
                detail={"part": "hull-piece", "w_monomial": str(nu)},
                certificate="hull image equals the second equation's image "
                            "times a hull monomial",
                certificate_ok=level.subst(h) == target))
    return records


def u_span_dim(polys, ring, xdeg: int, tdeg: int) -> int:
    """Dimension of the bidegree-(xdeg, tdeg) piece of the k[T]-span."""
    ech = linalg.Echelon(gradedlin.piece_dim(ring, xdeg, tdeg), ring.field)
    for p in polys:
        if p.is_zero():
            continue
        for mono in gradedlin.piece_basis(ring, 0, tdeg - p.tdeg()):
            ech.add(gradedlin.coordinates(mono * p, xdeg, tdeg))
    return ech.rank


def trim_slice(records: list, i: int) -> list:
    """Greedy minimalization of a slice generating set.

    Drops any record (highest T-degree first, later records first within a
    T-degree) lying in the k[T]-span of the survivors at its own bidegree,
    then verifies the trimmed set spans the same module in every T-degree up
    to the maximum present plus two.
    """
    if not records:
        return []
    S = records[0].poly.ring
    alive = [True] * len(records)
    order = sorted(range(len(records)),
                   key=lambda t: (-records[t].bidegree[1], -t))
    for idx in order:
        tdeg = records[idx].bidegree[1]
        ech = linalg.Echelon(gradedlin.piece_dim(S, i, tdeg), S.field)
        for t, rec in enumerate(records):
            if not alive[t] or t == idx:
                continue
            for mono in gradedlin.piece_basis(S, 0, tdeg - rec.bidegree[1]):
                ech.add(gradedlin.coordinates(mono * rec.poly, i, tdeg))
        if ech.contains(gradedlin.coordinates(records[idx].poly, i, tdeg)):
            alive[idx] = False
    trimmed = [rec for t, rec in enumerate(records) if alive[t]]
    maxt = max(rec.bidegree[1] for rec in records)
    everything = [rec.poly for rec in records]
    survivors = [rec.poly for rec in trimmed]
    for j in range(1, maxt + 3):
        if u_span_dim(survivors, S, i, j) != u_span_dim(everything, S, i, j):
            raise ArithmeticError("trimmed slice spans a smaller module")
    return trimmed


def almost_linear_generators(inp: PresentationInput) -> list:
    """Full defining-equation supply when all but the last column are linear.

    At the top level the hull is cut out by the 2x2 minors of a scroll-shaped
    matrix; the degree-zero piece identifies its coordinates with T-linear
    forms, so those minors pull back to equations directly.  The rest is the
    recursion driven by the last column plus the weight-drop family solved at
    x-degree zero.
    """
    n, d = inp.n, inp.col_degrees
    if any(dk != 1 for dk in d[:-1]):
        raise ValueError("requires every column degree before the last "
                         "to equal 1")
    m = n - 2
    level = build_level(inp, m)
    sigma = level.sigma.sigma
    S, field = inp.sring, inp.field
    gs = sym_equations(inp)
    records = []

    pres = scroll_matrix(level.sigma, field)
    piece = gradedlin.piece_basis(level.scroll, 0, 1)
    index = {next(iter(mu.terms)): r for r, mu in enumerate(piece)}
    cols = [gradedlin.coordinates(level.subst(S.var(f"T{k + 1}")), 0, 1)
            for k in range(n)]
    rows = [[cols[k][r] for k in range(n)] for r in range(len(piece))]
    inv = linalg.invert(rows, field)
    if inv is None:
        raise ArithmeticError("degree-zero hull piece is not spanned by the "
                              "coordinate images")
    tvars = [S.var(f"T{k + 1}") for k in range(n)]
    vimages = []
    for img in scroll_realization_images(pres):
        r = index[next(iter(img.terms))]
        lin = S.zero()
        for k in range(n):
            if inv[k][r]:
                lin = lin + tvars[k].scale(inv[k][r])
        vimages.append(lin)
    ncols = len(pres.gamma[0])
    pairs = [(a, b) for a in range(ncols) for b in range(a + 1, ncols)]
    for (a, b), minor in zip(pairs, pres.minors):
        poly = level.to_original_coords(substitute_T(minor, vimages, S))
        records.append(GeneratorRecord(
            poly=poly, bidegree=bidegree(poly), provenance="scroll",
            alpha=None, detail={"columns": [a + 1, b + 1]},
            certificate="hull image vanishes",
            certificate_ok=level.subst_raw(poly).is_zero()))

    records.extend(recursion_generators(level, gs[m]))

    base = level.subst(level.to_level_coords(gs[m]))
    for j, k, alpha in combinat.weight_drop_monomials(d[-1], sigma):
        xmono = level.scroll.monomial((j, k) + (0,) * len(sigma))
        target = base * xmono * level.w_monomial(alpha)
        h = _subst_preimage(level, target, 0, sum(alpha) + 1)
        poly = level.to_original_coords(h)
        records.append(GeneratorRecord(
            poly=poly, bidegree=(0, sum(alpha) + 1), provenance="slice",
            alpha=alpha, detail={"part": "weight-drop", "xsplit": [j, k]},
            certificate="hull image equals the driving image times "
                        "x^(j,k) w^alpha",
            certificate_ok=level.subst(h) == target))
    return records
