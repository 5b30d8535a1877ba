"""Exact scalars and linear algebra over the rationals and Gaussian rationals.

Rationals are plain ``int`` or ``fractions.Fraction`` values. Gaussian
rationals with a nonzero imaginary part are ``Gauss`` instances; a Gaussian
value whose imaginary part vanishes collapses back to a plain rational, so
real data never pays for complex arithmetic.

Matrices and tensors are numpy arrays of dtype ``object`` holding those
scalars. Entry ``(i, j)`` of a matrix is the coefficient of basis vector ``i``
in the image of basis vector ``j``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

import numpy as np

RATIONAL = "rational"
GAUSSIAN = "gaussian_rational"
FIELDS = (RATIONAL, GAUSSIAN)


def _rat(x):
    if isinstance(x, Gauss):
        raise TypeError("expected a rational, got a Gaussian value")
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _rat(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return _rat(Fraction(x))
    raise TypeError(f"cannot use {x!r} as an exact scalar")


class Gauss:
    """Gaussian rational ``re + im*i`` with ``im != 0``.

    Construct through :func:`gauss`, which returns a plain rational when the
    imaginary part is zero.
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = re
        self.im = im

    @staticmethod
    def _split(x):
        if isinstance(x, Gauss):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return x, 0
        if isinstance(x, Rational):
            return _rat(x), 0
        return None

    def __add__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return gauss(self.re + o[0], self.im + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return gauss(self.re - o[0], self.im - o[1])

    def __rsub__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return gauss(o[0] - self.re, o[1] - self.im)

    def __mul__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = o
        return gauss(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        c, d = o
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        a, b = self.re, self.im
        return gauss(Fraction(a * c + b * d) / n, Fraction(b * c - a * d) / n)

    def __rtruediv__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return gauss(*o) * self.inverse()

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        return gauss(Fraction(self.re) / n, Fraction(-self.im) / n)

    def __neg__(self):
        return Gauss(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._split(other)
        if o is None:
            return NotImplemented
        return self.re == o[0] and self.im == o[1]

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return True

    def conjugate(self):
        return Gauss(self.re, -self.im)

    def __repr__(self):
        return f"Gauss({format_scalar(self.re)}, {format_scalar(self.im)})"

    def __str__(self):
        return format_scalar(self)


I = Gauss(0, 1)


def gauss(re, im=0):
    """Gaussian rational ``re + im*i``; a plain rational when ``im == 0``."""
    re = _rat(re)
    im = _rat(im)
    if im == 0:
        return re
    return Gauss(re, im)


def scalar(x):
    """Normalize ``x`` (int, Fraction, str, Gauss) to a canonical exact scalar."""
    if isinstance(x, Gauss):
        return gauss(x.re, x.im)
    if isinstance(x, str):
        return parse_scalar(x)
    return _rat(x)


def real_part(x):
    return x.re if isinstance(x, Gauss) else x


def imag_part(x):
    return x.im if isinstance(x, Gauss) else 0


def conj(x):
    return x.conjugate() if isinstance(x, Gauss) else x


def is_real(x):
    return not isinstance(x, Gauss)


_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^(?P<re>{_RAT})?(?:(?P<isign>[+-])?(?P<inum>\d+)?i(?:/(?P<iden>\d+))?)?$"
)


def parse_scalar(text: str):
    """Parse ``"p"``, ``"p/q"`` or a Gaussian literal such as ``"1/2-3i/4"``.

    The imaginary part is written ``[sign][numerator]i[/denominator]``; a bare
    ``i`` means one.
    """
    s = text.strip().replace(" ", "")
    m = _GAUSS_RE.match(s)
    if not s or m is None or (m.group("re") is None and "i" not in s):
        raise ValueError(f"bad coefficient {text!r}")
    try:
        re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    except ZeroDivisionError:
        raise ValueError(f"bad coefficient {text!r}") from None
    im_part = Fraction(0)
    if "i" in s:
        if m.group("re") is not None and m.group("isign") is None:
            raise ValueError(f"bad coefficient {text!r}")
        num = int(m.group("inum")) if m.group("inum") else 1
        den = int(m.group("iden")) if m.group("iden") else 1
        if den == 0:
            raise ValueError(f"bad coefficient {text!r}")
        im_part = Fraction(num, den)
        if m.group("isign") == "-":
            im_part = -im_part
    return gauss(re_part, im_part)


def format_scalar(x) -> str:
    """Inverse of :func:`parse_scalar`."""
    if isinstance(x, Gauss):
        im = Fraction(x.im)
        sign = "-" if im < 0 else "+"
        im = abs(im)
        tail = f"{im.numerator}i" + (f"/{im.denominator}" if im.denominator != 1 else "")
        return f"{format_scalar(x.re)}{sign}{tail}"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# arrays


_norm = np.frompyfunc(scalar, 1, 1)
_conj = np.frompyfunc(conj, 1, 1)
_re = np.frompyfunc(real_part, 1, 1)
_im = np.frompyfunc(imag_part, 1, 1)


def array(data) -> np.ndarray:
    """Object array of canonical exact scalars."""
    a = np.array(data, dtype=object)
    if a.size == 0:
        return a
    return np.asarray(_norm(a), dtype=object)


def matrix(rows) -> np.ndarray:
    a = array(rows)
    if a.ndim != 2:
        raise ValueError("a matrix needs a rectangular list of rows")
    return a


def zeros(*shape) -> np.ndarray:
    a = np.empty(shape, dtype=object)
    a.fill(0)
    return a


def identity(n: int) -> np.ndarray:
    a = zeros(n, n)
    for i in range(n):
        a[i, i] = 1
    return a


def diag(values) -> np.ndarray:
    values = [scalar(v) for v in values]
    a = zeros(len(values), len(values))
    for i, v in enumerate(values):
        a[i, i] = v
    return a


def normalize(a) -> np.ndarray:
    """Collapse integral Fractions to ints (faster downstream arithmetic)."""
    a = np.asarray(a, dtype=object)
    if a.size == 0:
        return a
    return np.asarray(_norm(a), dtype=object)


def conjugate(a) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    if a.size == 0:
        return a
    return np.asarray(_conj(a), dtype=object)


def re_part(a) -> np.ndarray:
    return np.asarray(_re(np.asarray(a, dtype=object)), dtype=object)


def im_part(a) -> np.ndarray:
    return np.asarray(_im(np.asarray(a, dtype=object)), dtype=object)


def is_real_array(a) -> bool:
    return not any(isinstance(x, Gauss) for x in np.asarray(a, dtype=object).flat)


def field_of(a) -> str:
    return RATIONAL if is_real_array(a) else GAUSSIAN


def equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and bool(np.all(a == b))


def is_zero(a) -> bool:
    return bool(np.all(np.asarray(a, dtype=object) == 0))


def _check_matrix(A, name="A"):
    A = np.asarray(A, dtype=object)
    if A.ndim != 2:
        raise ValueError(f"{name} must be a matrix, got shape {A.shape}")
    return A


# ---------------------------------------------------------------------------
# elimination


def _echelon(A):
    """Fraction-free (Bareiss) row echelon form.

    Returns ``(rows, pivots, sign)`` where ``rows`` is a list of lists in echelon
    form, ``pivots`` the pivot columns and ``sign`` the parity of row swaps.
    Every division performed is exact.
    """
    M = [list(r) for r in A]
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    pivots = []
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
            sign = -sign
        piv = M[r][c]
        row_r = M[r]
        for i in range(r + 1, nrows):
            row_i = M[i]
            f = row_i[c]
            for j in range(c + 1, ncols):
                v = piv * row_i[j] - f * row_r[j]
                row_i[j] = _div(v, prev) if prev != 1 else v
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return M, pivots, sign


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, rem = divmod(a, b)
        return q if rem == 0 else Fraction(a, b)
    q = a / b
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


def rref(A):
    """Reduced row echelon form ``(R, pivots)``; R is an object array."""
    A = _check_matrix(A)
    nrows, ncols = A.shape
    if nrows == 0 or ncols == 0:
        return A.copy(), []
    M, pivots, _ = _echelon(A)
    rank = len(pivots)
    M = M[:rank]
    for r in range(rank - 1, -1, -1):
        c = pivots[r]
        piv = M[r][c]
        M[r] = [_div(v, piv) for v in M[r]]
        for i in range(r):
            f = M[i][c]
            if f != 0:
                M[i] = [vi - f * vr for vi, vr in zip(M[i], M[r])]
    R = zeros(rank, ncols)
    for i in range(rank):
        R[i, :] = array(M[i])
    return R, pivots


def rank(A) -> int:
    A = _check_matrix(A)
    if A.size == 0:
        return 0
    return len(_echelon(A)[1])


def determinant(A):
    """Exact determinant by Bareiss elimination."""
    A = _check_matrix(A)
    n, m = A.shape
    if n != m:
        raise ValueError(f"determinant needs a square matrix, got {n}x{m}")
    if n == 0:
        return 1
    M, pivots, sign = _echelon(A)
    if len(pivots) < n:
        return 0
    return scalar(sign * M[n - 1][n - 1])


def solve_linear(A, b):
    """Solve ``A x = b`` exactly.

    Returns None when the system is inconsistent. For underdetermined systems
    the free variables are set to zero. ``b`` may be a vector or a matrix of
    right-hand sides (solved column by column; None if any column fails).
    """
    A = _check_matrix(A)
    b = np.asarray(b, dtype=object)
    vector = b.ndim == 1
    B = b.reshape(-1, 1) if vector else b
    if B.ndim != 2 or B.shape[0] != A.shape[0]:
        raise ValueError(f"shape mismatch: A is {A.shape}, b is {b.shape}")
    n = A.shape[1]
    aug = np.concatenate([A, B], axis=1)
    R, pivots = rref(aug)
    if any(p >= n for p in pivots):
        return None
    X = zeros(n, B.shape[1])
    for r, c in enumerate(pivots):
        X[c, :] = R[r, n:]
    X = normalize(X)
    return X[:, 0] if vector else X


def kernel_basis(A) -> list:
    """Exact basis of the null space as a list of vectors."""
    A = _check_matrix(A)
    ncols = A.shape[1]
    if A.shape[0] == 0:
        R, pivots = zeros(0, ncols), []
    else:
        R, pivots = rref(A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = zeros(ncols)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = -R[r, f]
        basis.append(normalize(v))
    return basis


def inverse(A) -> np.ndarray:
    A = _check_matrix(A)
    n, m = A.shape
    if n != m:
        raise ValueError("inverse needs a square matrix")
    X = solve_linear(A, identity(n))
    if X is None or rank(A) < n:
        raise ValueError("matrix is singular")
    return X


def column_space_basis(A) -> np.ndarray:
    """Reduced row echelon basis of the column span, returned as columns."""
    A = _check_matrix(A)
    if A.shape[1] == 0:
        return zeros(A.shape[0], 0)
    R, _ = rref(A.T)
    return R.T.copy()


# ---------------------------------------------------------------------------
# symmetric forms


def is_symmetric(S) -> bool:
    S = _check_matrix(S, "S")
    return S.shape[0] == S.shape[1] and equal(S, S.T)


def is_skew(W) -> bool:
    W = _check_matrix(W, "W")
    return W.shape[0] == W.shape[1] and equal(W, -W.T)


def leading_minors(S) -> list:
    S = _check_matrix(S, "S")
    return [determinant(S[:k, :k]) for k in range(1, S.shape[0] + 1)]


def is_positive_definite(S) -> bool:
    """Sylvester's criterion on a symmetric rational matrix."""
    S = _check_matrix(S, "S")
    if not is_symmetric(S):
        raise ValueError("is_positive_definite needs a symmetric matrix")
    if not is_real_array(S):
        raise ValueError("is_positive_definite needs rational entries")
    return all(m > 0 for m in leading_minors(S))


def signature(S) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric rational form.

    Diagonalizes by congruence with exact pivoting; a zero diagonal with a
    nonzero off-diagonal entry is fixed by adding one basis vector to another.
    """
    S = _check_matrix(S, "S")
    if not is_symmetric(S):
        raise ValueError("signature needs a symmetric matrix")
    if not is_real_array(S):
        raise ValueError("signature needs rational entries")
    M = [[Fraction(v) for v in row] for row in S]
    n = len(M)
    pos = neg = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if M[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if M[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # x_i <- x_i + x_j gives a nonzero diagonal entry 2 M[i][j]
            for t in range(n):
                M[i][t] += M[j][t]
            for t in range(n):
                M[t][i] += M[t][j]
            p = i
        if p != k:
            M[k], M[p] = M[p], M[k]
            for row in M:
                row[k], row[p] = row[p], row[k]
        d = M[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = M[i][k] / d
            if f:
                for t in range(k, n):
                    M[i][t] -= f * M[k][t]
        for i in range(k + 1, n):
            M[k][i] = 0
            M[i][k] = 0
        k += 1
    return pos, neg, n - pos - neg
