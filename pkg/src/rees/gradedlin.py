"""Finite-dimensional graded pieces and exact linear algebra on them.

Every bigraded piece of the ambient rings in play is a finite-dimensional
vector space with a canonical monomial basis (descending degrevlex).  This
module enumerates those bases and answers the three questions everything else
reduces to: coordinates of a polynomial, dimension of a span, and canonical
solutions of  sum_t a_t * g_t = target  with graded unknown coefficients.
"""
from __future__ import annotations

from functools import lru_cache

from . import linalg
from .ring import GradingError, Poly, PolyRing, print_key


@lru_cache(maxsize=4096)
def _piece_monomials(ring: PolyRing, xdeg: int, tdeg: int):
    tvars = len(ring.tvar_names)
    out = []
    if tdeg < 0:
        return ()
    if tvars == 0:
        if tdeg != 0 or xdeg < 0:
            return ()
        return tuple((xdeg - a1, a1) for a1 in range(xdeg + 1))

    def texps(total, k):
        if k == 1:
            yield (total,)
            return
        for e in range(total + 1):
            for rest in texps(total - e, k - 1):
                yield (e,) + rest

    for te in texps(tdeg, tvars):
        xdeg_needed = xdeg - sum(e * w for e, w in zip(te, ring.tweights))
        if xdeg_needed < 0:
            continue
        for a1 in range(xdeg_needed + 1):
            out.append((xdeg_needed - a1, a1) + te)
    out.sort(key=print_key, reverse=True)
    return tuple(out)


def piece_basis(ring: PolyRing, xdeg: int, tdeg: int = 0):
    """Monomials of the bigraded piece, as polynomials, in canonical order.

    For the base ring pass tdeg=0; for a scroll ring negative x-degrees are
    meaningful (w_i carries x-degree -sigma_i) and the enumeration accounts
    for the twist.
    """
    return [ring.monomial(m) for m in _piece_monomials(ring, xdeg, tdeg)]


def piece_dim(ring: PolyRing, xdeg: int, tdeg: int = 0) -> int:
    return len(_piece_monomials(ring, xdeg, tdeg))


def coordinates(p: Poly, xdeg: int, tdeg: int = 0):
    """Coefficient vector of p on the canonical basis of its piece."""
    monos = _piece_monomials(p.ring, xdeg, tdeg)
    index = {m: i for i, m in enumerate(monos)}
    vec = [p.ring.field.zero] * len(monos)
    for m, c in p.terms.items():
        try:
            vec[index[m]] = c
        except KeyError:
            raise GradingError(f"{p} has a term outside the ({xdeg},{tdeg}) piece") from None
    return vec


def span_dim(polys, ring: PolyRing, xdeg: int, tdeg: int = 0) -> int:
    """Dimension of the span of the given polynomials inside one piece.

    Zero polynomials are allowed and contribute nothing; anything nonzero must
    lie in the stated piece.
    """
    rows = [coordinates(p, xdeg, tdeg) for p in polys if not p.is_zero()]
    return linalg.rank(rows, piece_dim(ring, xdeg, tdeg), ring.field)


def solve_combination(target: Poly, gens, ring: PolyRing):
    """Canonical graded coefficients a_t with sum a_t * g_t == target, or None.

    The unknown a_t ranges over the piece of bidegree bideg(target) -
    bideg(g_t) (an empty piece just forces a_t = 0).  The solution is the RREF
    one: unknown coordinates ordered by (generator index, canonical monomial
    order), pivot variables solved, free variables zero.  Every returned
    combination is re-expanded and checked exactly.
    """
    if target.is_zero():
        return [ring.zero() for _ in gens]
    ti, tj = target.xdeg(), target.tdeg()
    blocks = []           # (gen, [unknown monomials])
    columns = []
    tmonos = _piece_monomials(ring, ti, tj)
    index = {m: k for k, m in enumerate(tmonos)}
    for g in gens:
        if g.is_zero():
            blocks.append((g, []))
            continue
        gi, gj = g.xdeg(), g.tdeg()
        monos = _piece_monomials(ring, ti - gi, tj - gj)
        blocks.append((g, monos))
        for mu in monos:
            col = [ring.field.zero] * len(tmonos)
            for m, c in g.terms.items():
                mm = tuple(a + b for a, b in zip(m, mu))
                col[index[mm]] = c
            columns.append(col)
    nunk = len(columns)
    rows = [[columns[c][r] for c in range(nunk)] for r in range(len(tmonos))]
    rhs = coordinates(target, ti, tj)
    sol = linalg.solve(rows, rhs, nunk, ring.field)
    if sol is None:
        return None
    out = []
    k = 0
    for g, monos in blocks:
        terms = {}
        for mu in monos:
            if sol[k]:
                terms[mu] = sol[k]
            k += 1
        out.append(Poly(ring, terms))
    check = ring.zero()
    for a, g in zip(out, gens):
        check = check + a * g
    assert check == target, "internal error: combination failed to re-expand"
    return out
