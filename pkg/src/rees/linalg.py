"""Exact dense linear algebra over F_p and over the rationals.

Prime-field matrices ride numpy int64 with vectorized row elimination (safe
whenever p < 2**31, far above the default 32003); rational matrices fall back
to plain Fraction Gaussian elimination, with a fraction-free Bareiss routine
for bare rank questions.  All routines are deterministic: pivots are chosen
left to right, canonical nullspace/solution vectors come straight out of the
reduced row echelon form with free variables set to zero (nullspace: one
vector per free column, that free coordinate set to one).
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

_NUMPY_LIMIT = 1 << 31


def _use_numpy(field) -> bool:
    return field.modulus is not None and field.modulus < _NUMPY_LIMIT


def rref(rows, ncols, field):
    """Reduced row echelon form.  Returns (reduced_rows, pivot_columns)."""
    if _use_numpy(field):
        return _rref_fp(rows, ncols, field.modulus)
    return _rref_frac(rows, ncols, field)


def _rref_fp(rows, ncols, p):
    if len(rows) == 0 or ncols == 0:
        return [], []
    M = np.array(rows, dtype=np.int64) % p
    nr = M.shape[0]
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nr:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        M[r] = M[r] * pow(int(M[r, c]), p - 2, p) % p
        col = M[:, c].copy()
        col[r] = 0
        M = (M - np.outer(col, M[r])) % p
        pivots.append(c)
        r += 1
    return [[int(v) for v in row] for row in M[:r]], pivots


def _rref_frac(rows, ncols, field):
    M = [[Fraction(v) for v in row] for row in rows]
    r = 0
    pivots = []
    for c in range(ncols):
        if r == len(M):
            break
        sel = next((i for i in range(r, len(M)) if M[i][c]), None)
        if sel is None:
            continue
        M[r], M[sel] = M[sel], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(rows, ncols, field) -> int:
    if not rows or ncols == 0:
        return 0
    if _use_numpy(field):
        return len(_rref_fp(rows, ncols, field.modulus)[1])
    return _rank_bareiss(rows, ncols)


def _rank_bareiss(rows, ncols) -> int:
    # Fraction-free elimination on a cleared-denominator integer copy.
    M = []
    for row in rows:
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = den * v.denominator // _gcd(den, v.denominator)
        M.append([int(v * den) if isinstance(v, Fraction) else int(v) * den
                  for v in row])
    r, prev = 0, 1
    for c in range(ncols):
        if r == len(M):
            break
        sel = next((i for i in range(r, len(M)) if M[i][c]), None)
        if sel is None:
            continue
        M[r], M[sel] = M[sel], M[r]
        for i in range(r + 1, len(M)):
            for j in range(c + 1, ncols):
                M[i][j] = (M[i][j] * M[r][c] - M[i][c] * M[r][j]) // prev
            M[i][c] = 0
        prev = M[r][c]
        r += 1
    return r


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def nullspace(rows, ncols, field):
    """Canonical basis of {v : M v = 0}, one vector per RREF free column."""
    if ncols == 0:
        return []
    if not rows:
        basis = []
        for f in range(ncols):
            v = [field.zero] * ncols
            v[f] = field.one
            basis.append(v)
        return basis
    R, pivots = rref(rows, ncols, field)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for k, pc in enumerate(pivots):
            coeff = R[k][f]
            if coeff:
                v[pc] = field.neg(coeff) if field.modulus is None else (-coeff) % field.modulus
        basis.append(v)
    return basis


def solve(rows, rhs, ncols, field):
    """One solution of M v = rhs (free variables zero), or None."""
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    R, pivots = rref(aug, ncols + 1, field)
    if ncols in pivots:
        return None
    v = [field.zero] * ncols
    for k, pc in enumerate(pivots):
        v[pc] = R[k][ncols]
    return v


class Echelon:
    """Incremental row echelon form for streaming rank/membership tests."""

    def __init__(self, ncols, field):
        self.ncols = ncols
        self.field = field
        self._np = _use_numpy(field)
        self.rows = []      # reduced rows (np arrays on the fast path)
        self.pivots = []    # pivot column per row

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec):
        p = self.field.modulus
        if self._np:
            v = np.asarray(vec, dtype=np.int64) % p
            for row, pc in zip(self.rows, self.pivots):
                c = int(v[pc])
                if c:
                    v = (v - c * row) % p
            return v
        vec = list(vec)
        for row, pc in zip(self.rows, self.pivots):
            c = vec[pc]
            if c:
                if p is None:
                    vec = [a - c * b for a, b in zip(vec, row)]
                else:
                    vec = [(a - c * b) % p for a, b in zip(vec, row)]
        return vec

    def contains(self, vec) -> bool:
        red = self._reduce(vec)
        if self._np:
            return not red.any()
        return not any(red)

    def add(self, vec) -> bool:
        """Insert a vector; True if it enlarged the span."""
        p = self.field.modulus
        vec = self._reduce(vec)
        if self._np:
            nz = np.nonzero(vec)[0]
            if nz.size == 0:
                return False
            pc = int(nz[0])
            vec = vec * pow(int(vec[pc]), p - 2, p) % p
            for k in range(len(self.rows)):
                c = int(self.rows[k][pc])
                if c:
                    self.rows[k] = (self.rows[k] - c * vec) % p
            self.rows.append(vec)
            self.pivots.append(pc)
            return True
        pc = next((i for i, v in enumerate(vec) if v), None)
        if pc is None:
            return False
        inv = self.field.inv(vec[pc])
        if p is None:
            vec = [v * inv for v in vec]
        else:
            vec = [v * inv % p for v in vec]
        for k in range(len(self.rows)):
            c = self.rows[k][pc]
            if c:
                if p is None:
                    self.rows[k] = [a - c * b for a, b in zip(self.rows[k], vec)]
                else:
                    self.rows[k] = [(a - c * b) % p for a, b in zip(self.rows[k], vec)]
        self.rows.append(vec)
        self.pivots.append(pc)
        return True


def invert(rows, field):
    """Inverse of a square matrix over the field, or None if singular."""
    n = len(rows)
    aug = [list(row) + [field.one if i == j else field.zero
                        for j in range(n)] for i, row in enumerate(rows)]
    R, pivots = rref(aug, 2 * n, field)
    if list(pivots[:n]) != list(range(n)) or len(pivots) != n:
        return None
    return [row[n:] for row in R[:n]]
