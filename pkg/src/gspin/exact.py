"""Exact scalar and dense linear algebra over the Gaussian rationals.

Scalars are ``GaussRat`` values: pairs of ``fractions.Fraction`` real and
imaginary parts, so every number of the form a/b + (c/d)*i is represented
exactly.  Matrices are immutable and dense, and all algorithms here
(characteristic polynomial, rank, inversion, Jordan partitions, nilpotent
exponentials) are pivot-exact.  Nothing in this module touches floating
point.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm


def _as_gauss(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x)
    return None


class GaussRat:
    """A Gaussian rational ``re + im*i`` with exact ``Fraction`` parts.

    Mixed arithmetic with ``int`` and ``Fraction`` is supported.  The
    canonical text form always shows both parts ("3/2-5/4*i", "1+0*i");
    :meth:`parse` additionally accepts plain rationals ("7", "-2/3") and
    bare imaginary parts ("i", "-i", "2*i").
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _fast(cls, re, im):
        # internal: both arguments must already be Fractions
        self = object.__new__(cls)
        self.re = re
        self.im = im
        return self

    @classmethod
    def parse(cls, text):
        """Parse a Gaussian rational from its text form."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty Gaussian rational literal")
        if not s.endswith("i"):
            return cls(Fraction(s))
        body = s[:-1]
        cut = 0
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "+-*/":
                cut = k
                break
        re_text, im_text = body[:cut], body[cut:]
        if im_text.endswith("*"):
            im_text = im_text[:-1]
        if im_text in ("", "+"):
            im_text = "1"
        elif im_text == "-":
            im_text = "-1"
        re_part = Fraction(re_text) if re_text else Fraction(0)
        return cls(re_part, Fraction(im_text))

    def conj(self):
        return GaussRat(self.re, -self.im)

    def norm(self):
        """The field norm re^2 + im^2, a non-negative Fraction."""
        return self.re * self.re + self.im * self.im

    def is_rational(self):
        return self.im == 0

    def __add__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return GaussRat._fast(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return GaussRat._fast(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return GaussRat._fast(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = o.re, o.im
        if not b and not d:
            return GaussRat._fast(a * c, b)
        return GaussRat._fast(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRat._fast((self.re * o.re + self.im * o.im) / n,
                              (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return GaussRat._fast(-self.re, -self.im)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = GaussRat(1) / self
            k = -k
        out = GaussRat(1)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}*i"

    __repr__ = __str__


#: the chosen square root of -1 in Q(i)
SQRT_M1 = GaussRat(0, 1)


class Poly:
    """Polynomial over Q(i); coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [c if isinstance(c, GaussRat) else GaussRat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def shift(self, k):
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly((GaussRat(0),) * k + self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly(())
            out = [GaussRat(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for j, a in enumerate(self.coeffs):
                if not a:
                    continue
                for k, b in enumerate(other.coeffs):
                    if b:
                        out[j + k] = out[j + k] + a * b
            return Poly(out)
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return Poly(tuple(c * o for c in self.coeffs))

    def __rmul__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return self * o

    def __call__(self, x):
        """Evaluate by Horner's rule; x may be a GaussRat-like scalar or a square Mat."""
        if isinstance(x, Mat):
            acc = Mat.zeros(x.nrows, x.ncols)
            one = Mat.identity(x.nrows)
            for c in reversed(self.coeffs):
                acc = acc * x + one * c
            return acc
        acc = GaussRat(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def pretty(self, var="x"):
        """Human-readable form, highest degree first."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{k}"
            if c.is_rational():
                lead = str(c.re)
                if mono and lead == "1":
                    lead = ""
                elif mono and lead == "-1":
                    lead = "-"
            else:
                lead = f"({c})"
            if mono and lead and not lead.endswith("-"):
                text = f"{lead}*{mono}" if lead not in ("", "-") else f"{lead}{mono}"
            else:
                text = f"{lead}{mono}"
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    __repr__ = pretty

    def to_json(self):
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls([GaussRat.parse(s) for s in data])


class Mat:
    """Immutable dense matrix over Q(i), stored as a tuple of row tuples."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows):
        body = tuple(tuple(c if isinstance(c, GaussRat) else GaussRat(c) for c in r)
                     for r in rows)
        if not body or not body[0]:
            raise ValueError("matrix needs at least one row and one column")
        if len({len(r) for r in body}) != 1:
            raise ValueError("ragged rows")
        self.rows = body
        self.nrows = len(body)
        self.ncols = len(body[0])

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(GaussRat(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        z = GaussRat(0)
        return cls(tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def diag(cls, values):
        vals = [v if isinstance(v, GaussRat) else GaussRat(v) for v in values]
        n = len(vals)
        z = GaussRat(0)
        return cls(tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def from_cols(cls, cols):
        return cls(tuple(zip(*cols)))

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def entry(self, i, j):
        return self.rows[i][j]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self):
        return Mat(tuple(zip(*self.rows)))

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        acc = GaussRat(0)
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self):
        return all(not c for r in self.rows for c in r)

    def is_diagonal(self):
        return all(not c for i, r in enumerate(self.rows) for j, c in enumerate(r) if i != j)

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in addition")
        return Mat(tuple(tuple(a + b for a, b in zip(r, s))
                         for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Mat(tuple(tuple(-c for c in r) for r in self.rows))

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in multiplication")
            zero = GaussRat(0)
            out = []
            for row in self.rows:
                acc = [zero] * other.ncols
                for k, a in enumerate(row):
                    if not a:
                        continue
                    for j, b in enumerate(other.rows[k]):
                        if b:
                            acc[j] = acc[j] + a * b
                out.append(acc)
            return Mat(out)
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return Mat(tuple(tuple(c * o for c in r) for r in self.rows))

    def __rmul__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return self * o

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        out = Mat.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(c) for c in r) for r in self.rows)
        return f"Mat[{body}]"

    def to_json(self):
        return [[str(c) for c in r] for r in self.rows]

    @classmethod
    def from_json(cls, data):
        return cls([[GaussRat.parse(s) for s in r] for r in data])


def charpoly(m):
    """Characteristic polynomial det(x*I - m), monic, computed exactly.

    The matrix is first brought to Hessenberg form by an exact similarity
    (so the result is unchanged), then the polynomial is built by the
    leading-principal-minor recurrence for Hessenberg matrices.
    """
    if not m.is_square:
        raise ValueError("charpoly of a non-square matrix")
    n = m.nrows
    H = [list(row) for row in m.rows]
    for k in range(n - 2):
        piv = None
        for r in range(k + 1, n):
            if H[r][k]:
                piv = r
                break
        if piv is None:
            continue
        if piv != k + 1:
            H[k + 1], H[piv] = H[piv], H[k + 1]
            for row in H:
                row[k + 1], row[piv] = row[piv], row[k + 1]
        p = H[k + 1][k]
        for r in range(k + 2, n):
            if not H[r][k]:
                continue
            f = H[r][k] / p
            hr, hk = H[r], H[k + 1]
            for j in range(k, n):
                hr[j] = hr[j] - f * hk[j]
            for row in H:
                row[k + 1] = row[k + 1] + f * row[r]
    one = GaussRat(1)
    polys = [Poly((one,))]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        pk = prev.shift(1) - H[k - 1][k - 1] * prev
        run = one
        for j in range(k - 1, 0, -1):
            run = run * H[j][j - 1]
            if not run:
                break
            if H[j - 1][k - 1]:
                pk = pk - (H[j - 1][k - 1] * run) * polys[j - 1]
        polys.append(pk)
    return polys[n]


def rank(m):
    """Row rank over Q(i).

    Rows are scaled to Gaussian-integer entries, then eliminated by the
    fraction-free (Bareiss) two-step rule, which keeps every intermediate
    entry a minor of the scaled matrix.
    """
    rows = []
    for row in m.rows:
        den = 1
        for a in row:
            den = lcm(den, a.re.denominator, a.im.denominator)
        rows.append([a * den for a in row])
    nr, nc = m.nrows, m.ncols
    zero = GaussRat(0)
    prev = GaussRat(1)
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev
            rows[i][c] = zero
        prev = rows[r][c]
        r += 1
        if r == nr:
            break
    return r


def inverse(m):
    """Exact inverse by Gauss-Jordan elimination.

    Raises ValueError on singular input.
    """
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    aug = [list(row) + [GaussRat(int(i == j)) for j in range(n)]
           for i, row in enumerate(m.rows)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if aug[r][c]:
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [a / p for a in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return Mat([row[n:] for row in aug])


def jordan_partition(u):
    """Jordan block sizes of a unipotent matrix, largest first.

    Computed from the kernel-dimension sequence of (u - I)^k.  Raises
    ValueError if u is not unipotent.
    """
    if not u.is_square:
        raise ValueError("jordan_partition of a non-square matrix")
    n = u.nrows
    nilp = u - Mat.identity(n)
    kernels = [0]
    power = Mat.identity(n)
    while kernels[-1] < n:
        power = power * nilp
        d = n - rank(power)
        if d == kernels[-1]:
            raise ValueError("matrix is not unipotent")
        kernels.append(d)
    blocks_ge = [kernels[k] - kernels[k - 1] for k in range(1, len(kernels))]
    parts = []
    for k in range(1, len(blocks_ge) + 1):
        exact = blocks_ge[k - 1] - (blocks_ge[k] if k < len(blocks_ge) else 0)
        parts.extend([k] * exact)
    parts.sort(reverse=True)
    assert sum(parts) == n
    return parts


def exp_nilpotent(nmat):
    """exp of a nilpotent matrix: the finite exact sum of nmat^k / k!.

    Raises ValueError if the input is not nilpotent.
    """
    if not nmat.is_square:
        raise ValueError("exp_nilpotent of a non-square matrix")
    n = nmat.nrows
    acc = Mat.identity(n)
    term = Mat.identity(n)
    for k in range(1, n + 1):
        term = term * nmat
        if term.is_zero():
            break
        acc = acc + term * GaussRat(Fraction(1, factorial(k)))
    else:
        raise ValueError("matrix is not nilpotent")
    return acc
