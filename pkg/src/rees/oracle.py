"""Independent ground truth: Buchberger engine, saturation, bigraded counts.

Everything here works on the ambient ring S = k[x0,x1][T1..Tn] and never
touches the tower machinery, so its answers cross-check the constructive
pipeline.  Fixed term order: degree-reverse-lexicographic within each block,
T-variables before x-variables, x1 last ("block-degrevlex(T>x, x1 last)").

Saturation at the irrelevant ideal of the x-variables is the generic iterated
colon: J := (J : x0) intersect (J : x1) until the reduced basis stabilizes.
Intersections use one tag variable t and the elimination order t > everything:
the ideal (t*A + (1-t)*B) meets the t-free subring in A intersect B.  The tag
carries bidegree (0, 0), so tagged generators stay bihomogeneous; a splitting
safeguard restores bihomogeneity anyway if an engine change ever breaks it.

Windows are ((x_lo, x_hi), (t_lo, t_hi)), inclusive on both ends.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from heapq import heapify, heappop, heappush

from . import combinat, gradedlin, linalg
from .field import RationalField
from .ring import Poly, PolyRing, bidegree, ring_R
from .tower import PresentationInput, load_presentation, sym_equations

ORDER_DESCRIPTOR = "block-degrevlex(T>x, x1 last)"


# -- term order --------------------------------------------------------------

def _key_funcs(nt: int, elim: bool):
    """Ascending comparison key and its negation on exponent tuples.

    Exponents are (e_x0, e_x1, e_T1..e_Tnt[, e_tag]); the largest key is the
    lead monomial.  The negated key drives min-heaps that pop monomials in
    descending order.  Keys are flat int tuples.
    """
    if elim:
        def key(m):
            tex = m[2:2 + nt]
            return ((m[2 + nt], sum(tex)) + tuple(-e for e in reversed(tex))
                    + (m[0] + m[1], -m[1], -m[0]))

        def negkey(m):
            tex = m[2:2 + nt]
            return ((-m[2 + nt], -sum(tex)) + tuple(reversed(tex))
                    + (-m[0] - m[1], m[1], m[0]))
    else:
        def key(m):
            tex = m[2:]
            return ((sum(tex),) + tuple(-e for e in reversed(tex))
                    + (m[0] + m[1], -m[1], -m[0]))

        def negkey(m):
            tex = m[2:]
            return ((-sum(tex),) + tuple(reversed(tex))
                    + (-m[0] - m[1], m[1], m[0]))
    return key, negkey


def _ring_keys(ring: PolyRing):
    return _key_funcs(len(ring.tvar_names), elim=False)


# -- core reduction ----------------------------------------------------------

def _monic(terms: dict, key, field) -> tuple:
    """(lead, terms scaled to lead coefficient 1)."""
    lead = max(terms, key=key)
    lc = terms[lead]
    p = field.modulus
    if p is not None:
        if lc != 1:
            inv = pow(lc, p - 2, p)
            terms = {m: c * inv % p for m, c in terms.items()}
    else:
        if lc != 1:
            terms = {m: c / lc for m, c in terms.items()}
    return lead, terms


def _nf_terms(terms: dict, gens: list, negkey, field) -> dict:
    """Full normal form of a terms dict against monic (lead, terms) reducers."""
    p = field.modulus
    work = dict(terms)
    heap = [(negkey(m), m) for m in work]
    heapify(heap)
    rem = {}
    while heap:
        _, m = heappop(heap)
        c = work.get(m)
        if not c:
            continue
        for lead, gt in gens:
            divisible = True
            for a, b in zip(m, lead):
                if a < b:
                    divisible = False
                    break
            if not divisible:
                continue
            shift = tuple(a - b for a, b in zip(m, lead))
            del work[m]
            if p is not None:
                for gm, gc in gt.items():
                    if gm == lead:
                        continue
                    nm = tuple(a + b for a, b in zip(gm, shift))
                    old = work.get(nm)
                    if old is None:
                        nv = -c * gc % p
                        if nv:
                            work[nm] = nv
                            heappush(heap, (negkey(nm), nm))
                    else:
                        nv = (old - c * gc) % p
                        if nv:
                            work[nm] = nv
                        else:
                            del work[nm]
            else:
                for gm, gc in gt.items():
                    if gm == lead:
                        continue
                    nm = tuple(a + b for a, b in zip(gm, shift))
                    old = work.get(nm)
                    if old is None:
                        nv = -c * gc
                        if nv:
                            work[nm] = nv
                            heappush(heap, (negkey(nm), nm))
                    else:
                        nv = old - c * gc
                        if nv:
                            work[nm] = nv
                        else:
                            del work[nm]
            break
        else:
            rem[m] = c
            del work[m]
    return rem


def _spoly_terms(gi: tuple, gj: tuple, field) -> dict:
    """S-polynomial of two monic (lead, terms) pairs."""
    p = field.modulus
    (li, ti), (lj, tj) = gi, gj
    lcm = tuple(max(a, b) for a, b in zip(li, lj))
    si = tuple(a - b for a, b in zip(lcm, li))
    sj = tuple(a - b for a, b in zip(lcm, lj))
    out = {}
    for m, c in ti.items():
        if m == li:
            continue
        out[tuple(a + b for a, b in zip(m, si))] = c
    for m, c in tj.items():
        if m == lj:
            continue
        nm = tuple(a + b for a, b in zip(m, sj))
        old = out.get(nm)
        nv = -c if old is None else old - c
        if p is not None:
            nv %= p
        if nv:
            out[nm] = nv
        elif old is not None:
            del out[nm]
    return out


def _buchberger_core(term_dicts: list, key, negkey, field) -> list:
    """Reduced monic basis as (lead, terms) pairs, sorted by ascending lead.

    Pair selection: smallest lcm first.  Pairs with coprime leads are skipped;
    so is any pair whose lcm is divisible by a third lead when both associated
    pairs were already treated (treated pairs always predate the skip, so the
    justification is well-founded).
    """
    G: list = []
    pairs: list = []
    done: set = set()

    def add_gen(terms):
        lead, terms = _monic(terms, key, field)
        idx = len(G)
        G.append((lead, terms))
        for t in range(idx):
            lcm = tuple(max(a, b) for a, b in zip(G[t][0], lead))
            heappush(pairs, (key(lcm), t, idx))

    for terms in term_dicts:
        if not terms:
            continue
        nf = _nf_terms(terms, G, negkey, field) if G else dict(terms)
        if nf:
            add_gen(nf)

    while pairs:
        _, i, j = heappop(pairs)
        if (i, j) in done:
            continue
        done.add((i, j))
        li = G[i][0]
        lj = G[j][0]
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        if all(a + b == c for a, b, c in zip(li, lj, lcm)):
            continue
        chained = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            lk = G[k][0]
            if all(a <= b for a, b in zip(lk, lcm)) \
                    and (min(i, k), max(i, k)) in done \
                    and (min(j, k), max(j, k)) in done:
                chained = True
                break
        if chained:
            continue
        nf = _nf_terms(_spoly_terms(G[i], G[j], field), G, negkey, field)
        if nf:
            add_gen(nf)

    return _interreduce(G, key, negkey, field)


def _interreduce(G: list, key, negkey, field) -> list:
    if not G:
        return []
    order = sorted(range(len(G)), key=lambda t: key(G[t][0]))
    kept = []
    for t in order:
        lead = G[t][0]
        if any(all(a <= b for a, b in zip(kl, lead)) for kl, _ in kept):
            continue
        kept.append(G[t])
    out = []
    for idx, (lead, terms) in enumerate(kept):
        others = kept[:idx] + kept[idx + 1:]
        out.append((lead, _nf_terms(terms, others, negkey, field)))
    out.sort(key=lambda g: key(g[0]))
    return out


# -- public engine -----------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic basis, deterministically ordered by ascending lead."""

    generators: tuple
    order: str = ORDER_DESCRIPTOR
    reduced: bool = True

    @property
    def ring(self):
        return self.generators[0].ring if self.generators else None


def buchberger(gens) -> GroebnerBasis:
    """Reduced Groebner basis of the given bihomogeneous generators."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis(generators=())
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
        if not g.is_bihomogeneous():
            raise ValueError("generators must be bihomogeneous")
    key, negkey = _ring_keys(ring)
    core = _buchberger_core([g.terms for g in gens], key, negkey, ring.field)
    return GroebnerBasis(tuple(Poly(ring, dict(t)) for _, t in core))


def normal_form(p: Poly, G: GroebnerBasis) -> Poly:
    """Remainder of full multivariate division; zero iff p is in the ideal."""
    if p.is_zero() or not G.generators:
        return p
    ring = p.ring
    if G.ring != ring:
        raise ValueError("polynomial and basis live in different rings")
    key, negkey = _ring_keys(ring)
    gens = [_monic(g.terms, key, ring.field) for g in G.generators]
    return Poly(ring, _nf_terms(p.terms, gens, negkey, ring.field))


# -- tag-variable constructions ---------------------------------------------

def _tag_ring(ring: PolyRing) -> PolyRing:
    return PolyRing(ring.field, tuple(ring.tvar_names) + ("tag",),
                    tuple(ring.tweights) + (0,))


def _bihomogeneous_components(p: Poly) -> list:
    if p.is_bihomogeneous():
        return [p]
    buckets: dict = {}
    for m, c in p.terms.items():
        b = (p.monomial_xdeg(m), sum(m[2:]))
        buckets.setdefault(b, {})[m] = c
    return [Poly(p.ring, t) for _, t in sorted(buckets.items())]


def intersect_ideals(gens_a, gens_b, ring: PolyRing) -> list:
    """Generators of the intersection, via one (0,0)-graded tag variable."""
    gens_a = [g for g in gens_a if not g.is_zero()]
    gens_b = [g for g in gens_b if not g.is_zero()]
    if not gens_a or not gens_b:
        return []
    field = ring.field
    p = field.modulus
    key, negkey = _key_funcs(len(ring.tvar_names), elim=True)
    lifted = []
    for a in gens_a:
        lifted.append({m + (1,): c for m, c in a.terms.items()})
    for b in gens_b:
        terms = {}
        for m, c in b.terms.items():
            terms[m + (0,)] = c
            terms[m + (1,)] = -c % p if p is not None else -c
        lifted.append(terms)
    core = _buchberger_core(lifted, key, negkey, field)
    out = []
    for lead, terms in core:
        if lead[-1] == 0:
            if any(m[-1] for m in terms):
                raise ArithmeticError("elimination produced a mixed element")
            out.append(Poly(ring, {m[:-1]: c for m, c in terms.items()}))
    final = []
    for q in out:
        final.extend(_bihomogeneous_components(q))
    return final


def _exact_divide(h: Poly, f: Poly, key, negkey) -> Poly:
    """h / f when the division is exact; ArithmeticError otherwise."""
    field = h.ring.field
    p = field.modulus
    flead, fterms = _monic(dict(f.terms), key, field)
    flc = f.terms[flead]
    work = dict(h.terms)
    heap = [(negkey(m), m) for m in work]
    heapify(heap)
    quot = {}
    while heap:
        _, m = heappop(heap)
        c = work.get(m)
        if not c:
            continue
        for a, b in zip(m, flead):
            if a < b:
                raise ArithmeticError("division is not exact")
        shift = tuple(a - b for a, b in zip(m, flead))
        quot[shift] = c
        del work[m]
        if p is not None:
            for gm, gc in fterms.items():
                if gm == flead:
                    continue
                nm = tuple(a + b for a, b in zip(gm, shift))
                old = work.get(nm)
                if old is None:
                    nv = -c * gc % p
                    if nv:
                        work[nm] = nv
                        heappush(heap, (negkey(nm), nm))
                else:
                    nv = (old - c * gc) % p
                    if nv:
                        work[nm] = nv
                    else:
                        del work[nm]
        else:
            for gm, gc in fterms.items():
                if gm == flead:
                    continue
                nm = tuple(a + b for a, b in zip(gm, shift))
                old = work.get(nm)
                if old is None:
                    nv = -c * gc
                    if nv:
                        work[nm] = nv
                        heappush(heap, (negkey(nm), nm))
                else:
                    nv = old - c * gc
                    if nv:
                        work[nm] = nv
                    else:
                        del work[nm]
    if p is not None:
        inv = pow(flc, p - 2, p)
        quot = {m: c * inv % p for m, c in quot.items()}
    elif flc != 1:
        quot = {m: c / flc for m, c in quot.items()}
    return Poly(h.ring, quot)


def colon_ideal(gens, f: Poly, ring: PolyRing) -> list:
    """Generators of (gens) : f, via ((gens) intersect (f)) / f."""
    if f.is_zero():
        raise ValueError("cannot colon by zero")
    key, negkey = _ring_keys(ring)
    inter = intersect_ideals(gens, [f], ring)
    return [_exact_divide(h, f, key, negkey) for h in inter]


def saturate_m(J: GroebnerBasis) -> GroebnerBasis:
    """Stable limit of J := (J : x0) intersect (J : x1).

    Each round costs three tag eliminations (two colons, one intersection)
    plus one plain reduced basis; the loop stops when the reduced basis
    repeats, with a loud failure at 100 rounds.
    """
    if not J.generators:
        return J
    ring = J.ring
    x0 = ring.var("x0")
    x1 = ring.var("x1")
    current = J if J.reduced else buchberger(list(J.generators))
    for _ in range(100):
        gens = list(current.generators)
        quo0 = colon_ideal(gens, x0, ring)
        quo1 = colon_ideal(gens, x1, ring)
        nxt = buchberger(intersect_ideals(quo0, quo1, ring))
        if nxt.generators == current.generators:
            return current
        current = nxt
    raise RuntimeError("saturation did not stabilize within 100 rounds")


# -- bigraded accounting -----------------------------------------------------

def _check_window(window):
    (xlo, xhi), (tlo, thi) = window
    if xlo > xhi or tlo > thi:
        raise ValueError("empty bidegree window")
    return int(xlo), int(xhi), int(tlo), int(thi)


def bigraded_hilbert(G: GroebnerBasis, window) -> dict:
    """dim of the ideal's bidegree-(i,j) pieces over the window.

    The dimension is the number of monomials of S_(i,j) divisible by some
    lead of the reduced basis (the complement counts standard monomials).
    """
    xlo, xhi, tlo, thi = _check_window(window)
    out = {}
    if not G.generators:
        for i in range(xlo, xhi + 1):
            for j in range(tlo, thi + 1):
                out[(i, j)] = 0
        return out
    ring = G.ring
    key, _ = _ring_keys(ring)
    leads = [max(g.terms, key=key) for g in G.generators]
    for i in range(xlo, xhi + 1):
        for j in range(tlo, thi + 1):
            cnt = 0
            for mu in gradedlin.piece_basis(ring, i, j):
                m = next(iter(mu.terms))
                if any(all(a >= b for a, b in zip(m, lead)) for lead in leads):
                    cnt += 1
            out[(i, j)] = cnt
    return out


def minimal_generator_bidegrees(G: GroebnerBasis, window,
                                x_separator: int | None = None):
    """Bidegree counts of a minimal bihomogeneous generating set, windowed.

    The count at (i, j) is dim of the ideal's (i, j) piece minus the rank of
    the one-step-down span x0*P(i-1,j) + x1*P(i-1,j) + sum_a T_a*P(i,j-1),
    where P is the ideal's piece and a step that would leave the window is
    dropped.  A window that reaches down to the ideal's support therefore
    counts minimal generators of the ideal itself, while a window whose left
    column sits higher counts that column's elements as generators of the
    windowed module (the single-x-degree-slice point of view: only
    T-multiples are subtracted there).
    """
    xlo, xhi, tlo, thi = _check_window(window)
    counts: dict = {}
    if G.generators:
        ring = G.ring
        field = ring.field
        graded = [(bidegree(g), g) for g in G.generators]
        x0 = ring.var("x0")
        x1 = ring.var("x1")
        tvars = [ring.var(name) for name in ring.tvar_names]
        pieces: dict = {}

        def ideal_piece(i, j):
            got = pieces.get((i, j))
            if got is not None:
                return got
            dim = gradedlin.piece_dim(ring, i, j)
            basis = []
            if dim:
                ech = linalg.Echelon(dim, field)
                for (xg, tg), g in graded:
                    if xg > i or tg > j:
                        continue
                    for v in gradedlin.piece_basis(ring, i - xg, j - tg):
                        p = v * g
                        if ech.add(gradedlin.coordinates(p, i, j)):
                            basis.append(p)
            pieces[(i, j)] = basis
            return basis

        for i in range(xlo, xhi + 1):
            for j in range(tlo, thi + 1):
                dim = gradedlin.piece_dim(ring, i, j)
                if dim == 0:
                    continue
                ech = linalg.Echelon(dim, field)
                if i - 1 >= xlo:
                    for p in ideal_piece(i - 1, j):
                        ech.add(gradedlin.coordinates(x0 * p, i, j))
                        ech.add(gradedlin.coordinates(x1 * p, i, j))
                if j - 1 >= tlo:
                    for p in ideal_piece(i, j - 1):
                        for tv in tvars:
                            ech.add(gradedlin.coordinates(tv * p, i, j))
                # products of ideal elements stay inside the piece, so the
                # rank gain below is dim(piece) - dim(subtracted span)
                gained = 0
                for p in ideal_piece(i, j):
                    if ech.add(gradedlin.coordinates(p, i, j)):
                        gained += 1
                if gained:
                    counts[(i, j)] = gained
    sep = x_separator if x_separator is not None else xlo - 1
    return combinat.BidegreeTable(counts=counts, x_separator=sep)


# -- pipeline-facing wrappers ------------------------------------------------

def saturated_ideal(inp: PresentationInput, m: int | None = None,
                    rational_check: bool = False) -> GroebnerBasis:
    """Reduced basis of (g_1..g_m) : (x0,x1)^infinity (default: all columns).

    With rational_check=True the computation is repeated over the rationals
    (coefficients lifted symmetrically around zero) and the two initial
    ideals must agree; disagreement raises ArithmeticError (unlucky prime).
    Intended for small instances only.
    """
    m = inp.n - 1 if m is None else m
    if not 1 <= m <= inp.n - 1:
        raise ValueError("column count out of range")
    gs = list(sym_equations(inp))[:m]
    K = saturate_m(buchberger(gs))
    if rational_check and inp.field.modulus is not None:
        twin = _rational_twin(inp)
        gsq = list(sym_equations(twin))[:m]
        KQ = saturate_m(buchberger(gsq))
        key, _ = _ring_keys(inp.sring)
        mine = {max(g.terms, key=key) for g in K.generators}
        theirs = {max(g.terms, key=key) for g in KQ.generators}
        if mine != theirs:
            raise ArithmeticError(
                "modular basis disagrees with the rational one; "
                "the prime looks unlucky for this instance")
    return K


def _rational_twin(inp: PresentationInput) -> PresentationInput:
    p = inp.field.modulus
    half = p // 2
    QQ = RationalField()
    base = ring_R(QQ)
    rows = []
    for row in inp.phi.rows:
        out = []
        for entry in row:
            out.append(Poly(base, {
                m: Fraction(c if c <= half else c - p)
                for m, c in entry.terms.items()}))
        rows.append(tuple(out))
    return load_presentation(QQ, inp.col_degrees, tuple(rows))
