"""Exact dense linear algebra over the rationals and small prime fields.

Matrices are plain lists of row lists. Every routine takes the field as its
first argument so the same elimination code serves both ``QQ`` and ``GF(p)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence

Matrix = List[List]


class RationalField:
    """The field of rationals, elements stored as :class:`fractions.Fraction`."""

    characteristic = 0
    tag = "Q"

    def __call__(self, value) -> Fraction:
        if isinstance(value, str):
            return Fraction(value.strip())
        return Fraction(value)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def elements(self):
        raise TypeError("the rationals are infinite")

    def format(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field F_p with elements represented as ints in ``range(p)``."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.tag = f"Fp:{p}"
        self.zero = 0
        self.one = 1

    def __call__(self, value) -> int:
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def elements(self):
        return range(self.p)

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()
_PRIME_FIELDS = {}


def GF(p: int) -> PrimeField:
    if p not in _PRIME_FIELDS:
        _PRIME_FIELDS[p] = PrimeField(p)
    return _PRIME_FIELDS[p]


def field_from_tag(tag: str):
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    tag = tag.strip()
    if tag in ("Q", "QQ"):
        return QQ
    if tag.startswith("Fp:"):
        return GF(int(tag[3:]))
    raise ValueError(f"unknown field tag {tag!r}")


# -- constructors -----------------------------------------------------------

def zeros(F, rows: int, cols: int) -> Matrix:
    return [[F.zero] * cols for _ in range(rows)]


def identity(F, n: int) -> Matrix:
    m = zeros(F, n, n)
    for i in range(n):
        m[i][i] = F.one
    return m


def convert(F, m: Sequence[Sequence]) -> Matrix:
    return [[F(x) for x in row] for row in m]


def shape(m: Matrix, rows: int = None, cols: int = None):
    """Shape of ``m``; empty matrices need the caller's declared shape."""
    r = len(m)
    c = len(m[0]) if r else (cols or 0)
    return r, c


# -- arithmetic -------------------------------------------------------------

def matmul(F, a: Matrix, b: Matrix, inner: int = None) -> Matrix:
    """Product ``a @ b``. ``inner`` is needed when ``a`` has no rows."""
    rows = len(a)
    k = len(b) if inner is None else inner
    cols = len(b[0]) if b else 0
    out = zeros(F, rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x == 0:
                continue
            bt = b[t]
            for j in range(cols):
                if bt[j] != 0:
                    oi[j] = F.add(oi[j], F.mul(x, bt[j]))
    return out


def matadd(F, a: Matrix, b: Matrix) -> Matrix:
    return [[F.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(F, a: Matrix, b: Matrix) -> Matrix:
    return [[F.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(F, c, a: Matrix) -> Matrix:
    return [[F.mul(c, x) for x in row] for row in a]


def transpose(m: Matrix, cols: int = 0) -> Matrix:
    if not m:
        return [[] for _ in range(cols)]
    return [list(col) for col in zip(*m)]


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for row in m for x in row)


def block_diag(F, blocks: Sequence[Matrix], shapes: Sequence[tuple]) -> Matrix:
    rows = sum(s[0] for s in shapes)
    cols = sum(s[1] for s in shapes)
    out = zeros(F, rows, cols)
    r0 = c0 = 0
    for blk, (r, c) in zip(blocks, shapes):
        for i in range(r):
            for j in range(c):
                out[r0 + i][c0 + j] = blk[i][j]
        r0 += r
        c0 += c
    return out


# -- elimination ------------------------------------------------------------

def rref(F, m: Matrix, cols: int = None):
    """Reduced row echelon form. Returns ``(R, pivot_columns)``."""
    a = [list(row) for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else (cols or 0)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        a[r] = [F.mul(inv, x) for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                ar = a[r]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], ar)]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(F, m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(F, m)[1])


def nullspace(F, m: Matrix, cols: int = None) -> List[list]:
    """Basis of ``{x : m x = 0}`` as a list of column vectors (plain lists)."""
    ncols = len(m[0]) if m else (cols or 0)
    if not m:
        return [[F.one if i == j else F.zero for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(F, m, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [F.zero] * ncols
        v[fcol] = F.one
        for row, pc in enumerate(pivots):
            v[pc] = F.neg(R[row][fcol])
        basis.append(v)
    return basis


def column_space(F, m: Matrix, rows: int) -> List[list]:
    """Basis of the column span of ``m`` (an ``rows x k`` matrix) as column vectors."""
    if rows == 0:
        return []
    t = transpose(m, rows)
    R, pivots = rref(F, t)
    return [R[i] for i in range(len(pivots))]


def solve(F, a: Matrix, b: Matrix, cols: int = None):
    """One solution ``x`` of ``a x = b`` or ``None`` if inconsistent."""
    nrows = len(a)
    ncols = len(a[0]) if a else (cols or 0)
    nb = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(nrows)]
    R, pivots = rref(F, aug, ncols + nb)
    if any(p >= ncols for p in pivots):
        return None
    x = zeros(F, ncols, nb)
    for row, pc in enumerate(pivots):
        for j in range(nb):
            x[pc][j] = R[row][ncols + j]
    return x


def inverse(F, m: Matrix) -> Matrix:
    n = len(m)
    if n == 0:
        return []
    aug = [list(m[i]) + identity(F, n)[i] for i in range(n)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def det(F, m: Matrix):
    n = len(m)
    a = [list(row) for row in m]
    d = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return F.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = F.neg(d)
        d = F.mul(d, a[c][c])
        inv = F.inv(a[c][c])
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = F.mul(a[i][c], inv)
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[c])]
    return d


def matpow(F, m: Matrix, k: int) -> Matrix:
    n = len(m)
    result = identity(F, n)
    base = m
    while k:
        if k & 1:
            result = matmul(F, result, base)
        base = matmul(F, base, base)
        k >>= 1
    return result


# -- integer lattices -------------------------------------------------------

def integer_kernel(m: Sequence[Sequence[int]], ncols: int = None) -> List[List[int]]:
    """Z-basis of ``{x in Z^n : m x = 0}`` via unimodular column reduction."""
    a = [list(map(int, row)) for row in m]
    n = len(a[0]) if a else (ncols or 0)
    u = [[int(i == j) for j in range(n)] for i in range(n)]  # columns track ops

    def colop(j, k, q):  # col_j -= q * col_k
        for row in a:
            row[j] -= q * row[k]
        for row in u:
            row[j] -= q * row[k]

    def colswap(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in u:
            row[j], row[k] = row[k], row[j]

    lead = 0
    for row in a:
        if lead >= n:
            break
        while True:
            nz = [j for j in range(lead, n) if row[j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(row[j]))
            colswap(lead, j0)
            done = True
            for j in range(lead + 1, n):
                if row[j] != 0:
                    colop(j, lead, row[j] // row[lead])
                    if row[j] != 0:
                        done = False
            if done:
                lead += 1
                break
    basis = [[u[i][j] for i in range(n)] for j in range(lead, n)]
    return hermite_normal_form(basis)


def hermite_normal_form(rows: List[List[int]]) -> List[List[int]]:
    """Row HNF of an integer matrix with full row rank; leading entries positive."""
    a = [list(r) for r in rows]
    if not a:
        return []
    n = len(a[0])
    out_row = 0
    for c in range(n):
        if out_row == len(a):
            break
        while True:
            nz = [i for i in range(out_row, len(a)) if a[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][c]))
            a[out_row], a[i0] = a[i0], a[out_row]
            clean = True
            for i in range(out_row + 1, len(a)):
                if a[i][c] != 0:
                    q = a[i][c] // a[out_row][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[out_row])]
                    if a[i][c] != 0:
                        clean = False
            if clean:
                break
        if any(a[i][c] != 0 for i in range(out_row, len(a))):
            if a[out_row][c] < 0:
                a[out_row] = [-x for x in a[out_row]]
            piv = a[out_row][c]
            for i in range(out_row):
                q = a[i][c] // piv
                a[i] = [x - q * y for x, y in zip(a[i], a[out_row])]
            out_row += 1
    return [r for r in a if any(r)]


def primitive(v: Iterable) -> List[int]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints
