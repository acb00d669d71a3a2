"""Polynomials over k[x0,x1], k[x0,x1][T1..Tn] and k[x0,x1][w1..ws].

A `PolyRing` fixes the coefficient field and the list of T-like variables
together with their x-degree weights:

  * no T-like variables            -> the base ring R = k[x0,x1]
  * T1..Tn, weight 0 each          -> the symmetric-algebra ambient S
  * w1..ws, weight -sigma_i        -> the coordinate ring of the free hull,
                                      where w_i carries bidegree (-sigma_i, 1)

Terms are stored as a dict mapping exponent tuples (x0, x1, t_1, ..., t_k) to
nonzero field elements.  Nothing forces a polynomial to be bihomogeneous — the
Groebner layer needs inhomogeneous intermediates — but `bidegree` validates it.

The x-bidegree of a monomial is  x0 + x1 + sum(e_i * weight_i)  and the
T-bidegree is  sum(e_i);  for R-polynomials the single grading is x0 + x1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class ParseError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (position {pos})")
        self.pos = pos


class GradingError(ValueError):
    """Raised when a polynomial fails a required homogeneity check."""


@dataclass(frozen=True)
class PolyRing:
    field: object
    tvar_names: tuple = ()
    tweights: tuple = ()

    def __post_init__(self):
        if len(self.tvar_names) != len(self.tweights):
            raise ValueError("one weight per T-like variable required")

    @property
    def nvars(self):
        return 2 + len(self.tvar_names)

    @property
    def var_names(self):
        return ("x0", "x1") + tuple(self.tvar_names)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.nvars: self.field.one})

    def const(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> "Poly":
        try:
            i = self.var_names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r} in this ring") from None
        exps = [0] * self.nvars
        exps[i] = 1
        return Poly(self, {tuple(exps): self.field.one})

    def monomial(self, exps, coeff=1) -> "Poly":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple {exps}")
        c = self.field(coeff)
        return Poly(self, {exps: c} if c else {})

    def from_terms(self, terms: dict) -> "Poly":
        clean = {}
        for m, c in terms.items():
            c = self.field(c)
            if c:
                clean[tuple(m)] = c
        return Poly(self, clean)


def ring_R(field) -> PolyRing:
    return PolyRing(field)


def ring_S(field, n: int) -> PolyRing:
    return PolyRing(field, tuple(f"T{i+1}" for i in range(n)), (0,) * n)


def ring_scroll(field, sigma) -> PolyRing:
    sigma = tuple(sigma)
    return PolyRing(field, tuple(f"w{i+1}" for i in range(len(sigma))),
                    tuple(-s for s in sigma))


def print_key(exps):
    # Degree-reverse-lexicographic with x0 > x1 > T1 > ... (or w1 > ...).
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def monomial_xdeg(self, m) -> int:
        w = self.ring.tweights
        return m[0] + m[1] + sum(e * wi for e, wi in zip(m[2:], w))

    def xdeg(self, m=None):
        if m is not None:
            return self.monomial_xdeg(m)
        degs = {self.monomial_xdeg(mm) for mm in self.terms}
        if len(degs) != 1:
            raise GradingError("x-degree undefined: polynomial is zero or mixed")
        return degs.pop()

    def tdeg(self):
        degs = {sum(m[2:]) for m in self.terms}
        if len(degs) != 1:
            raise GradingError("T-degree undefined: polynomial is zero or mixed")
        return degs.pop()

    def is_bihomogeneous(self) -> bool:
        if not self.terms:
            return True
        try:
            self.xdeg(), self.tdeg()
        except GradingError:
            return False
        return True

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: print_key(t[0]), reverse=True)

    def lead_monomial(self, key=print_key):
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        return max(self.terms, key=key)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        self._check(other)
        p = self.ring.field.modulus
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            c = c if acc is None else acc + c
            if p is not None:
                c %= p
            if c:
                out[m] = c
            elif acc is not None:
                del out[m]
        return Poly(self.ring, out)

    def __neg__(self):
        p = self.ring.field.modulus
        if p is None:
            return Poly(self.ring, {m: -c for m, c in self.terms.items()})
        return Poly(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        p = self.ring.field.modulus
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                acc = out.get(m)
                out[m] = c1 * c2 if acc is None else acc + c1 * c2
        if p is None:
            return Poly(self.ring, {m: c for m, c in out.items() if c})
        return Poly(self.ring, {m: cp for m, c in out.items() if (cp := c % p)})

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        p = self.ring.field.modulus
        if p is None:
            return Poly(self.ring, {m: c0 * c for m, c0 in self.terms.items()})
        return Poly(self.ring, {m: cp for m, c0 in self.terms.items()
                                if (cp := c0 * c % p)})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def monic(self):
        if not self.terms:
            return self
        lc = self.terms[self.lead_monomial()]
        return self.scale(self.ring.field.inv(lc))

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __str__(self):
        return poly_to_str(self)

    def __repr__(self):
        return f"<{poly_to_str(self)}>"


def bidegree(p: Poly):
    """The (x-degree, T-degree) of a nonzero bihomogeneous polynomial.

    For a polynomial over the base ring the T-degree is 0.  Raises GradingError
    on zero or on mixed degrees.
    """
    if p.is_zero():
        raise GradingError("degree of the zero polynomial is undefined")
    return (p.xdeg(), p.tdeg())


# -- text format -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|([\^*+/-]))")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse `poly := term (('+'|'-') term)*` with an optional leading sign.

    term  := [coeff '*'?] monomial | coeff
    coeff := int | int '/' uint
    mono  := var ('^' uint)? ('*' var ('^' uint)?)*

    Variables must belong to the ring; the result must be homogeneous (base
    ring) or bihomogeneous (T/w rings).
    """
    toks = _tokenize(text)
    idx = 0
    names = ring.var_names

    def peek():
        return toks[idx]

    def take():
        nonlocal idx
        t = toks[idx]
        idx += 1
        return t

    def parse_coeff():
        kind, val, pos = take()
        assert kind == "int"
        if peek()[0] == "op" and peek()[1] == "/":
            take()
            k2, v2, p2 = take()
            if k2 != "int":
                raise ParseError("expected integer denominator", p2)
            if v2 == 0:
                raise ParseError("zero denominator", p2)
            return Fraction(val, v2)
        return val

    def parse_var_power(exps):
        kind, val, pos = take()
        if kind != "name":
            raise ParseError("expected a variable", pos)
        try:
            vi = names.index(val)
        except ValueError:
            raise ParseError(f"unknown variable {val!r}", pos) from None
        e = 1
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            k2, v2, p2 = take()
            if k2 != "int":
                raise ParseError("expected integer exponent", p2)
            e = v2
        exps[vi] += e

    def parse_term():
        coeff = Fraction(1)
        exps = [0] * ring.nvars
        kind, val, pos = peek()
        if kind == "int":
            coeff = Fraction(parse_coeff())
            if peek()[0] == "op" and peek()[1] == "*":
                take()
                parse_var_power(exps)
            elif peek()[0] == "name":
                parse_var_power(exps)
            else:
                return coeff, tuple(exps)
        elif kind == "name":
            parse_var_power(exps)
        else:
            raise ParseError("expected a term", pos)
        while peek()[0] == "op" and peek()[1] == "*":
            take()
            parse_var_power(exps)
        return coeff, tuple(exps)

    field = ring.field
    terms = {}
    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take()[1] == "-" else 1
    while True:
        coeff, exps = parse_term()
        c = field(coeff if sign > 0 else -coeff)
        if c:
            acc = terms.get(exps)
            tot = c if acc is None else field(acc + c)
            if tot:
                terms[exps] = tot
            elif acc is not None:
                del terms[exps]
        kind, val, pos = peek()
        if kind == "end":
            break
        if kind != "op" or val not in "+-":
            raise ParseError("expected '+', '-' or end of input", pos)
        sign = -1 if take()[1] == "-" else 1
    p = Poly(ring, terms)
    if ring.tvar_names:
        if not p.is_bihomogeneous():
            raise GradingError(f"not bihomogeneous: {text!r}")
    else:
        if not p.is_zero():
            degs = {m[0] + m[1] for m in p.terms}
            if len(degs) != 1:
                raise GradingError(f"not homogeneous: {text!r}")
    return p


def _monomial_str(exps, names):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_to_str(p: Poly) -> str:
    """Canonical text form; `parse_poly(poly_to_str(p), p.ring) == p`.

    Terms in descending degrevlex order; F_p coefficients as 0..p-1, rational
    coefficients with explicit signs.
    """
    if p.is_zero():
        return "0"
    names = p.ring.var_names
    chunks = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        mono = _monomial_str(m, names)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)


# -- ring moves ------------------------------------------------------------

def promote(p: Poly, target: PolyRing) -> Poly:
    """Reinterpret a base-ring polynomial inside a ring with T-like variables."""
    if p.ring.tvar_names:
        raise ValueError("promote expects a base-ring polynomial")
    pad = (0,) * len(target.tvar_names)
    return Poly(target, {m + pad: c for m, c in p.terms.items()})


def substitute_T(p: Poly, images, target: PolyRing) -> Poly:
    """Substitute T_j -> images[j] into p, carrying x0, x1 over unchanged.

    `images` are polynomials of the target ring, one per T-like variable of
    p's ring.  Powers of the images are cached per variable, so repeated
    exponents cost one multiplication each.
    """
    n = len(p.ring.tvar_names)
    if len(images) != n:
        raise ValueError("one image per T-like variable required")
    pad = (0,) * len(target.tvar_names)
    powers = [{0: target.one()} for _ in range(n)]

    def image_power(j, e):
        cache = powers[j]
        if e not in cache:
            cache[e] = image_power(j, e - 1) * images[j]
        return cache[e]

    out = target.zero()
    for m, c in p.terms.items():
        piece = Poly(target, {(m[0], m[1]) + pad: c})
        for j in range(n):
            if m[2 + j]:
                piece = piece * image_power(j, m[2 + j])
        out = out + piece
    return out


def substitute_T_with_w(p: Poly, xi_rows, sigma) -> Poly:
    """Substitute T_j -> sum_i xi[i][j] * w_i into a T-ring polynomial.

    `xi_rows` is an s x n matrix of base-ring polynomials (row i homogeneous of
    degree sigma_i); the result lives in the scroll ring for `sigma` and has
    the same bidegree as `p`.  This is the ring map underlying every
    substitution certificate in the tower.
    """
    sigma = tuple(sigma)
    s = len(sigma)
    n = len(p.ring.tvar_names)
    target = ring_scroll(p.ring.field, sigma)
    if s and len(xi_rows[0]) != n:
        raise ValueError("matrix shape does not match the number of T variables")
    images = []
    for j in range(n):
        img = target.zero()
        for i in range(s):
            entry = xi_rows[i][j]
            if entry.is_zero():
                continue
            wexp = [0] * s
            wexp[i] = 1
            img = img + Poly(target, {m + tuple(wexp): c
                                      for m, c in entry.terms.items()})
        images.append(img)
    return substitute_T(p, images, target)


def apply_T_coordinate_change(p: Poly, chi_cols) -> Poly:
    """Substitute T'_k -> sum_j chi[j][k] * T_j (a constant linear change).

    `chi_cols[j][k]` is the (j,k) entry of an invertible n x n matrix over the
    field; used to report tower output in the caller's original coordinates.
    """
    ring = p.ring
    n = len(ring.tvar_names)
    lin = []
    for k in range(n):
        img = ring.zero()
        for j in range(n):
            c = chi_cols[j][k]
            if c:
                exps = [0] * ring.nvars
                exps[2 + j] = 1
                img = img + ring.monomial(exps, c)
        lin.append(img)
    powers = [{0: ring.one()} for _ in range(n)]

    def lin_power(k, e):
        cache = powers[k]
        if e not in cache:
            cache[e] = lin_power(k, e - 1) * lin[k]
        return cache[e]

    out = ring.zero()
    for m, c in p.terms.items():
        piece = ring.monomial((m[0], m[1]) + (0,) * n, c)
        for k in range(n):
            if m[2 + k]:
                piece = piece * lin_power(k, m[2 + k])
        out = out + piece
    return out
