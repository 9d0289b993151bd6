"""Clifford algebras of the split quadratic spaces and the groups GPin/GSpin.

The spaces come in three shapes: the even space of dimension 2n (basis
e_1..e_2n, hyperbolic pairs e_j/e_{n+j}), the odd space of dimension 2n-1
(basis f_1..f_{2n-1}, pairs f_j/f_{n-1+j} plus the anisotropic line
f_{2n-1} with Q = 1), and one-dimensional lines with a chosen Q-value.

Clifford elements are finite sums of monomials e_{s_1}...e_{s_r} with
strictly increasing indices; multiplication folds generators into a
monomial one at a time using e_j e_k = <e_j,e_k> - e_k e_j for j > k and
e_j^2 = Q(e_j).  On top of the algebra sit the group elements
(``GPinElement``: homogeneous, invertible, stabilizing V under
conjugation), the spinor norm, the vector representations pr_circ and pr,
the graded embedding ``c_phi`` of an orthogonal decomposition, the
standard embedding ``i_std`` of the odd group into the even one, and the
outer automorphism ``theta`` given by conjugation with
theta_elt = sqrt(-1)*(e_n - e_{2n}).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import SQRT_M1, GaussRat, Mat, _as_gauss


class QuadSpace:
    """A split quadratic space with a distinguished basis.

    kind "even": dim 2n, Q(e_j) = 0, <e_j, e_{n+j}> = 1.
    kind "odd":  dim 2n-1, Q(f_j) = 0 for j <= 2n-2, <f_j, f_{n-1+j}> = 1,
                 Q(f_{2n-1}) = 1 (so <f_{2n-1}, f_{2n-1}> = 2).
    kind "line": dim 1 with a prescribed Q-value on its basis vector.
    """

    __slots__ = ("kind", "n", "q_val", "_hash")

    def __init__(self, kind, n=None, q_val=None):
        if kind == "even":
            if not (isinstance(n, int) and n >= 1):
                raise ValueError("even space needs n >= 1")
            self.kind, self.n, self.q_val = kind, n, None
        elif kind == "odd":
            if not (isinstance(n, int) and n >= 2):
                raise ValueError("odd space needs n >= 2")
            self.kind, self.n, self.q_val = kind, n, None
        elif kind == "line":
            q = _as_gauss(q_val)
            if q is None:
                raise ValueError("line space needs a Q-value")
            self.kind, self.n, self.q_val = kind, 1, q
        else:
            raise ValueError(f"unknown space kind {kind!r}")
        self._hash = hash((self.kind, self.n, self.q_val))

    @property
    def dim(self):
        if self.kind == "even":
            return 2 * self.n
        if self.kind == "odd":
            return 2 * self.n - 1
        return 1

    def q(self, j):
        """Q on the j-th basis vector (1-based)."""
        self._check_index(j)
        if self.kind == "even":
            return GaussRat(0)
        if self.kind == "odd":
            return GaussRat(1) if j == 2 * self.n - 1 else GaussRat(0)
        return self.q_val

    def pair(self, j, k):
        """The bilinear pairing <v_j, v_k> of basis vectors (1-based)."""
        self._check_index(j)
        self._check_index(k)
        if j == k:
            return GaussRat(2) * self.q(j)
        if self.kind == "even":
            return GaussRat(int(abs(j - k) == self.n))
        if self.kind == "odd":
            return GaussRat(int(abs(j - k) == self.n - 1 and max(j, k) <= 2 * self.n - 2))
        return GaussRat(0)

    def _check_index(self, j):
        if not (isinstance(j, int) and 1 <= j <= self.dim):
            raise ValueError(f"basis index {j} out of range for dim {self.dim}")

    def gram(self):
        """Gram matrix of the bilinear pairing."""
        d = self.dim
        return Mat([[self.pair(i + 1, j + 1) for j in range(d)] for i in range(d)])

    def bilinear(self, v, w):
        """<v, w> for coordinate sequences."""
        v, w = list(v), list(w)
        if len(v) != self.dim or len(w) != self.dim:
            raise ValueError("coordinate length mismatch")
        acc = GaussRat(0)
        for j, a in enumerate(v):
            if not a:
                continue
            for k, b in enumerate(w):
                if b:
                    acc = acc + a * b * self.pair(j + 1, k + 1)
        return acc

    def quad(self, v):
        """Q(v) for a coordinate sequence, using Q(x+y) = Q(x)+Q(y)+<x,y>."""
        v = list(v)
        if len(v) != self.dim:
            raise ValueError("coordinate length mismatch")
        acc = GaussRat(0)
        for j, a in enumerate(v):
            if a:
                acc = acc + a * a * self.q(j + 1)
        for j in range(self.dim):
            if not v[j]:
                continue
            for k in range(j + 1, self.dim):
                if v[k]:
                    acc = acc + v[j] * v[k] * self.pair(j + 1, k + 1)
        return acc

    def basis_letter(self):
        return {"even": "e", "odd": "f", "line": "u"}[self.kind]

    def __eq__(self, other):
        if other is self:
            return True
        if not isinstance(other, QuadSpace):
            return NotImplemented
        return (self.kind, self.n, self.q_val) == (other.kind, other.n, other.q_val)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.kind == "line":
            return f"QuadSpace(line, Q={self.q_val})"
        return f"QuadSpace({self.kind}, n={self.n}, dim={self.dim})"

    def to_json(self):
        if self.kind == "line":
            return {"kind": "line", "q": str(self.q_val)}
        return {"kind": self.kind, "n": self.n}

    @classmethod
    def from_json(cls, data):
        if data["kind"] == "line":
            return cls("line", q_val=GaussRat.parse(data["q"]))
        return cls(data["kind"], data["n"])


def even_space(n):
    return QuadSpace("even", n)


def odd_space(n):
    return QuadSpace("odd", n)


def line_space(q_val):
    return QuadSpace("line", q_val=q_val)


@lru_cache(maxsize=None)
def _push_generator(space, mono, g):
    """Multiply the monomial e_mono by e_g on the right.

    Returns a tuple of (monomial, scalar) pairs.  Folding from the right:
    e_S e_g with s = max(S): if s < g just append; if s = g contract to
    Q(g); if s > g use e_s e_g = <e_s,e_g> - e_g e_s.
    """
    if not mono:
        return (((g,), GaussRat(1)),)
    s = mono[-1]
    if s < g:
        return ((mono + (g,), GaussRat(1)),)
    if s == g:
        qg = space.q(g)
        return ((mono[:-1], qg),) if qg else ()
    out = []
    pairing = space.pair(s, g)
    if pairing:
        out.append((mono[:-1], pairing))
    for sub, c in _push_generator(space, mono[:-1], g):
        out.append((sub + (s,), -c))
    return tuple(out)


class CliffordElement:
    """An element of C(V): a finite sum of basis monomials with Q(i) coefficients."""

    __slots__ = ("space", "terms")

    def __init__(self, space, terms):
        self.space = space
        clean = {}
        for mono, c in terms.items():
            cc = c if isinstance(c, GaussRat) else GaussRat(c)
            if not cc:
                continue
            mono = tuple(mono)
            if any(not (1 <= j <= space.dim) for j in mono):
                raise ValueError(f"monomial {mono} out of range")
            if any(mono[k] >= mono[k + 1] for k in range(len(mono) - 1)):
                raise ValueError(f"monomial {mono} not strictly increasing")
            clean[mono] = cc
        self.terms = clean

    @classmethod
    def scalar(cls, space, c):
        return cls(space, {(): c})

    @classmethod
    def one(cls, space):
        return cls.scalar(space, GaussRat(1))

    @classmethod
    def zero(cls, space):
        return cls(space, {})

    @classmethod
    def generator(cls, space, j):
        space._check_index(j)
        return cls(space, {(j,): GaussRat(1)})

    @classmethod
    def vector(cls, space, coords):
        coords = list(coords)
        if len(coords) != space.dim:
            raise ValueError("coordinate length mismatch")
        return cls(space, {(j + 1,): c for j, c in enumerate(coords)})

    @classmethod
    def monomial(cls, space, indices, c=1):
        return cls(space, {tuple(indices): c})

    def _require_same_space(self, other):
        if self.space != other.space:
            raise ValueError("elements live in different quadratic spaces")

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), GaussRat(0))

    def is_zero(self):
        return not self.terms

    def is_scalar(self):
        return all(m == () for m in self.terms)

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.terms.get((), GaussRat(0))

    def as_vector(self):
        """Coordinates if the element is a pure vector, else None."""
        if not all(len(m) == 1 for m in self.terms):
            return None
        coords = [GaussRat(0)] * self.space.dim
        for (j,), c in self.terms.items():
            coords[j - 1] = c
        return coords

    def parity(self):
        """0 for even, 1 for odd; raises on mixed terms.  Zero counts as even."""
        ps = {len(m) % 2 for m in self.terms}
        if len(ps) > 1:
            raise ValueError("element is not homogeneous")
        return ps.pop() if ps else 0

    def is_homogeneous(self):
        return len({len(m) % 2 for m in self.terms}) <= 1

    def __add__(self, other):
        if isinstance(other, CliffordElement):
            self._require_same_space(other)
            terms = dict(self.terms)
            for m, c in other.terms.items():
                terms[m] = terms.get(m, GaussRat(0)) + c
            return CliffordElement(self.space, terms)
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return self + CliffordElement.scalar(self.space, o)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, CliffordElement):
            return self + (-other)
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CliffordElement(self.space, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            self._require_same_space(other)
            acc = {}
            for mb, cb in other.terms.items():
                for ma, ca in self.terms.items():
                    frontier = {ma: ca * cb}
                    for g in mb:
                        nxt = {}
                        for mono, c in frontier.items():
                            for mono2, c2 in _push_generator(self.space, mono, g):
                                prev = nxt.get(mono2)
                                nxt[mono2] = c * c2 if prev is None else prev + c * c2
                        frontier = nxt
                    for mono, c in frontier.items():
                        prev = acc.get(mono)
                        acc[mono] = c if prev is None else prev + c
            return CliffordElement(self.space, acc)
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return CliffordElement(self.space, {m: c * o for m, c in self.terms.items()})

    def __rmul__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return self * o

    def __truediv__(self, other):
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return self * (GaussRat(1) / o)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = CliffordElement.one(self.space)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CliffordElement):
            return self.space == other.space and self.terms == other.terms
        o = _as_gauss(other)
        if o is None:
            return NotImplemented
        return self == CliffordElement.scalar(self.space, o)

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        letter = self.space.basis_letter()
        parts = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[mono]
            body = "*".join(f"{letter}{j}" for j in mono)
            if not body:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{body}")
        return " + ".join(parts)

    def to_json(self):
        terms = [{"indices": list(m), "coeff": str(c)}
                 for m, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))]
        return {"space": self.space.to_json(), "terms": terms}

    @classmethod
    def from_json(cls, data):
        space = QuadSpace.from_json(data["space"])
        terms = {tuple(t["indices"]): GaussRat.parse(t["coeff"]) for t in data["terms"]}
        return cls(space, terms)


def mul(x, y):
    """Clifford product; same as x * y."""
    return x * y


def beta(x):
    """The involution that fixes V pointwise and reverses products.

    beta(e_{s_1}...e_{s_r}) = e_{s_r}...e_{s_1}, renormalized through the
    Clifford relations.  (The familiar sign (-1)^(r(r-1)/2) applies only to
    monomials of pairwise-orthogonal generators; basis monomials here may
    contain hyperbolic partners, so the reversed product is folded out in
    full.)
    """
    space = x.space
    acc = {}
    for m, c in x.terms.items():
        frontier = {(): c}
        for g in reversed(m):
            nxt = {}
            for mono, cc in frontier.items():
                for mono2, c2 in _push_generator(space, mono, g):
                    prev = nxt.get(mono2)
                    val = cc * c2
                    nxt[mono2] = val if prev is None else prev + val
            frontier = nxt
        for mono, cc in frontier.items():
            prev = acc.get(mono)
            acc[mono] = cc if prev is None else prev + cc
    return CliffordElement(space, acc)


class GPinElement:
    """An element of GPin(V): homogeneous, invertible, with x V x^{-1} = V.

    Membership is verified eagerly at construction: the element must be
    homogeneous, x*beta(x) must be a nonzero scalar (the spinor norm), and
    conjugation must send every basis vector back into V.  The vector
    representation matrix (pr_circ) and the norm are cached.
    """

    __slots__ = ("elt", "space", "parity", "norm", "_pr_circ", "_inv_elt")

    def __init__(self, elt):
        if not isinstance(elt, CliffordElement):
            raise TypeError("GPinElement wraps a CliffordElement")
        if elt.is_zero():
            raise ValueError("zero is not in GPin")
        if not elt.is_homogeneous():
            raise ValueError("GPin elements must be homogeneous in the grading")
        self.elt = elt
        self.space = elt.space
        self.parity = elt.parity()
        nrm = elt * beta(elt)
        if not nrm.is_scalar():
            raise ValueError("x*beta(x) is not scalar: element is not in GPin")
        self.norm = nrm.scalar_value()
        if not self.norm:
            raise ValueError("spinor norm is zero: element is not invertible")
        self._inv_elt = beta(elt) / self.norm
        cols = []
        for j in range(1, self.space.dim + 1):
            image = elt * CliffordElement.generator(self.space, j) * self._inv_elt
            coords = image.as_vector()
            if coords is None:
                raise ValueError("conjugation does not stabilize V: element is not in GPin")
            cols.append(coords)
        self._pr_circ = Mat.from_cols(cols)

    @property
    def is_even(self):
        return self.parity == 0

    def pr_circ(self):
        """Matrix of v -> x v x^{-1} on the basis of V."""
        return self._pr_circ

    def pr(self):
        """Matrix of v -> x v beta(x); equals norm * pr_circ."""
        return self._pr_circ * self.norm

    def spinor_norm(self):
        return self.norm

    def coords_of(self):
        """Spinor-side torus coordinates, if this is a torus element."""
        from .rootdata import coords_of

        return coords_of(self)

    def inverse(self):
        return GPinElement(self._inv_elt)

    def __mul__(self, other):
        if not isinstance(other, GPinElement):
            return NotImplemented
        return GPinElement(self.elt * other.elt)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = GPinElement(CliffordElement.one(self.space))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GPinElement):
            return NotImplemented
        return self.elt == other.elt

    def __hash__(self):
        return hash(self.elt)

    def __repr__(self):
        return f"GPin<{self.elt!r}>"


def spinor_norm(x):
    """The spinor norm N(x) = x*beta(x) of a GPin element."""
    return x.spinor_norm()


def pr_circ(x):
    return x.pr_circ()


def pr(x):
    return x.pr()


def theta_element(space):
    """theta_elt = sqrt(-1)*(e_n - e_{2n}) in C(V_2n); squares to 1."""
    if space.kind != "even":
        raise ValueError("theta element lives in the even Clifford algebra")
    n = space.n
    return CliffordElement(space, {(n,): SQRT_M1, (2 * n,): -SQRT_M1})


def theta_circ_matrix(n):
    """The vector-side involution: fixes the line through e_n - e_{2n}, negates
    its orthogonal complement.  On the basis: e_n -> -e_{2n}, e_{2n} -> -e_n,
    e_j -> -e_j otherwise.

    This is pr_circ of the theta element: conjugation by a vector w acts on
    V as v -> (<v,w>/Q(w)) w - v, the negated reflection in w.
    """
    rows = []
    for i in range(2 * n):
        row = [GaussRat(0)] * (2 * n)
        if i == n - 1:
            row[2 * n - 1] = GaussRat(-1)
        elif i == 2 * n - 1:
            row[n - 1] = GaussRat(-1)
        else:
            row[i] = GaussRat(-1)
        rows.append(row)
    return Mat(rows)


def theta(g):
    """The outer automorphism: conjugation by the theta element."""
    if g.space.kind != "even":
        raise ValueError("theta is defined on the even-space group")
    th = theta_element(g.space)
    return GPinElement(th * g.elt * th)


class OrthogonalSplit:
    """An orthogonal decomposition V = W_1 perp W_2 given by generator images.

    images1[j-1] (resp. images2) is the image in C(V) of the j-th basis
    vector of source1 (resp. source2).  Construction checks that the
    images are vectors, that each factor map is an isometry, that the two
    factors are orthogonal, and that together they span V.
    """

    __slots__ = ("target", "source1", "source2", "images1", "images2")

    def __init__(self, target, source1, images1, source2, images2):
        if source1.dim + source2.dim != target.dim:
            raise ValueError("decomposition dimensions do not add up")
        coords1 = _vector_coords(target, images1, source1)
        coords2 = _vector_coords(target, images2, source2)
        for src, coords in ((source1, coords1), (source2, coords2)):
            for j in range(src.dim):
                for k in range(j, src.dim):
                    want = src.pair(j + 1, k + 1)
                    got = target.bilinear(coords[j], coords[k])
                    if got != want:
                        raise ValueError("factor map is not an isometry")
        for cj in coords1:
            for ck in coords2:
                if target.bilinear(cj, ck):
                    raise ValueError("factors are not orthogonal")
        from .exact import rank as _rank
        if _rank(Mat.from_cols(coords1 + coords2)) != target.dim:
            raise ValueError("images do not span the target space")
        self.target = target
        self.source1, self.images1 = source1, list(images1)
        self.source2, self.images2 = source2, list(images2)

    def embed1(self, x):
        return _embed(x, self.source1, self.target, self.images1)

    def embed2(self, y):
        return _embed(y, self.source2, self.target, self.images2)

    def change_of_basis(self):
        """Columns = image coordinates of all source basis vectors, factor 1 then 2."""
        cols = [img.as_vector() for img in self.images1 + self.images2]
        return Mat.from_cols(cols)


def _vector_coords(target, images, source):
    if len(images) != source.dim:
        raise ValueError("one image per source basis vector required")
    out = []
    for img in images:
        if img.space != target:
            raise ValueError("images must live in the target space")
        coords = img.as_vector()
        if coords is None:
            raise ValueError("images must be vectors")
        out.append(coords)
    return out


def _embed(x, source, target, images):
    if x.space != source:
        raise ValueError("element does not live in the declared source space")
    acc = CliffordElement.zero(target)
    for mono, c in x.terms.items():
        prod = CliffordElement.scalar(target, c)
        for j in mono:
            prod = prod * images[j - 1]
        acc = acc + prod
    return acc


def c_phi(x, y, split):
    """The graded-product map on an orthogonal decomposition: x (x) y -> x*y.

    Both arguments are mapped into C(target) along the split and then
    multiplied there; Clifford anticommutation supplies the graded signs.
    """
    return split.embed1(x) * split.embed2(y)


@lru_cache(maxsize=None)
def std_split(n):
    """V_2n = phi(V_{2n-1}) perp U with phi, phi' as fixed index maps.

    phi: f_i -> e_i (i <= n-1), f_{n-1+j} -> e_{n+j} (j <= n-1),
    f_{2n-1} -> e_n + e_{2n}; phi': u -> e_n - e_{2n} with Q(u) = -1.
    """
    target = even_space(n)
    source1 = odd_space(n)
    images1 = []
    for i in range(1, n):
        images1.append(CliffordElement.generator(target, i))
    for j in range(1, n):
        images1.append(CliffordElement.generator(target, n + j))
    images1.append(CliffordElement(target, {(n,): GaussRat(1), (2 * n,): GaussRat(1)}))
    source2 = line_space(GaussRat(-1))
    images2 = [CliffordElement(target, {(n,): GaussRat(1), (2 * n,): GaussRat(-1)})]
    return OrthogonalSplit(target, source1, images1, source2, images2)


def i_std(g):
    """Embed the odd-space group (or algebra) into the even one.

    GPinElements map to GPinElements; plain CliffordElements are pushed
    through the same algebra map (useful for non-invertible monomials).
    """
    if isinstance(g, GPinElement):
        if g.space.kind != "odd":
            raise ValueError("i_std embeds the odd-space group")
        return GPinElement(std_split(g.space.n).embed1(g.elt))
    if isinstance(g, CliffordElement):
        if g.space.kind != "odd":
            raise ValueError("i_std embeds the odd-space algebra")
        return std_split(g.space.n).embed1(g)
    raise TypeError("i_std expects a GPinElement or CliffordElement")


# ------------------------------------------------------------- randomness

def random_vector(space, rng, anisotropic=True, span=9, nnz=None):
    """A random vector with nonzero coordinates in [-span, span] \\ {0}.

    At most ``nnz`` coordinates are nonzero (default 3; pass ``space.dim``
    for dense vectors); Q != 0 is enforced when ``anisotropic``.  Sparse
    support keeps products of many vectors from blowing up in term count.
    """
    if nnz is None:
        nnz = min(3, space.dim)
    while True:
        support = rng.sample(range(space.dim), rng.randint(1, nnz))
        coords = [GaussRat(0)] * space.dim
        for j in support:
            c = 0
            while c == 0:
                c = rng.randint(-span, span)
            coords[j] = GaussRat(c)
        if anisotropic and not space.quad(coords):
            continue
        return CliffordElement.vector(space, coords)


def random_gpin(space, rng, factors=None, span=9):
    """A random GPin element: a product of `factors` anisotropic vectors."""
    if factors is None:
        factors = rng.choice((2, 3))
    acc = CliffordElement.one(space)
    for _ in range(factors):
        acc = acc * random_vector(space, rng, anisotropic=True, span=span)
    return GPinElement(acc)


def random_gspin(space, rng, span=9):
    """A random GSpin element: a product of an even number of vectors."""
    return random_gpin(space, rng, factors=rng.choice((2, 4)), span=span)
