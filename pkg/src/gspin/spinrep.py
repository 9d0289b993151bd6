"""The exterior-algebra module of C(V) and the (half-)spin matrix models.

The module is the exterior algebra on W = span(e_1..e_n) inside V_2n:
W-generators act by wedging, W'-generators (e_{n+1}..e_{2n}) by
contraction against the pairing.  Module vectors are sparse dicts mapping
index subsets U of {1..n} (strictly increasing tuples) to coefficients;
the monomial for U is m_U = e_{u_1} ^ ... ^ e_{u_r}.

Basis bookkeeping follows the signed vectors b_U = (-1)^{#U} m_U.  The
even-degree b_U (where the sign is +1, so b_U = m_U) are ordered
colexicographically; the k-th odd-block basis vector is defined as the
image of the k-th even one under x -> (theta element)*x / sqrt(-1), which
works out to the plain monomial of U xor {n}.  That choice makes the
theta intertwiner literally sqrt(-1) times the identity and turns the
restriction triangle through psi into an on-the-nose matrix identity.

The odd-dimensional space V_{2n-1} gets the analogous module on subsets
of {1..n-1}, with the anisotropic generator f_{2n-1} acting by parity:
+1 on even degrees, -1 on odd ones.
"""

from __future__ import annotations

from functools import lru_cache

from .clifford import CliffordElement, GPinElement, beta, even_space, theta_element
from .exact import GaussRat, Mat


def _colex_subsets(universe_size, base=1):
    """All subsets of {base .. base+universe_size-1} in colex (bitmask) order."""
    out = []
    for mask in range(1 << universe_size):
        out.append(tuple(base + j for j in range(universe_size) if mask >> j & 1))
    return out


class FockBasis:
    """The ordered basis of the exterior module for V_2n.

    even_subsets: the even-|U| subsets of {1..n} in colex order.
    odd_subsets:  the theta-images, i.e. U xor {n} for each even U in order.
    subsets:      even block followed by odd block.
    sign(U):      the bookkeeping sign (-1)^{#U} relating the basis
                  monomial m_U to the signed vector b_U = sign(U) * m_U.
    """

    __slots__ = ("n", "even_subsets", "odd_subsets", "subsets", "_index")

    def __init__(self, n):
        if n < 1:
            raise ValueError("n >= 1 required")
        self.n = n
        evens = [u for u in _colex_subsets(n) if len(u) % 2 == 0]
        self.even_subsets = evens
        self.odd_subsets = [self._xor_n(u) for u in evens]
        self.subsets = self.even_subsets + self.odd_subsets
        self._index = {u: k for k, u in enumerate(self.subsets)}
        assert len(self.even_subsets) == len(self.odd_subsets) == 2 ** (n - 1)

    def _xor_n(self, u):
        if self.n in u:
            return tuple(j for j in u if j != self.n)
        return tuple(sorted(u + (self.n,)))

    @staticmethod
    def sign(u):
        return GaussRat(-1 if len(u) % 2 else 1)

    def index(self, u):
        return self._index[tuple(u)]

    def block_index(self, u):
        """(epsilon, position within the epsilon block)."""
        k = self.index(u)
        half = 1 << (self.n - 1)
        return (1, k) if k < half else (-1, k - half)

    def __len__(self):
        return len(self.subsets)

    def manifest(self):
        """Ordered subset list, JSON-friendly."""
        return [list(u) for u in self.subsets]


@lru_cache(maxsize=None)
def fock_basis(n):
    return FockBasis(n)


@lru_cache(maxsize=None)
def odd_module_basis(n):
    """Basis subsets of the V_{2n-1}-module: subsets of {1..n-1}, colex order."""
    return tuple(_colex_subsets(n - 1))


def vacuum():
    """The vacuum vector of either module."""
    return {(): GaussRat(1)}


def _wedge(u, j):
    """(sign, u + {j}) or None if j already present."""
    if j in u:
        return None
    smaller = sum(1 for x in u if x < j)
    sign = -1 if smaller % 2 else 1
    return sign, tuple(sorted(u + (j,)))


def _contract(u, j):
    """(sign, u - {j}) or None if j absent; sign (-1)^{pos+1} per the action rule."""
    if j not in u:
        return None
    pos = u.index(j) + 1
    sign = 1 if (pos + 1) % 2 == 0 else -1
    return sign, tuple(x for x in u if x != j)


def _apply_generator(space, j, vec):
    n = space.n
    out = {}
    if space.kind == "even":
        if j <= n:
            action = ("wedge", j)
        else:
            action = ("contract", j - n)
    else:
        if j <= n - 1:
            action = ("wedge", j)
        elif j <= 2 * n - 2:
            action = ("contract", j - (n - 1))
        else:
            action = ("parity", None)
    for u, c in vec.items():
        if action[0] == "wedge":
            hit = _wedge(u, action[1])
        elif action[0] == "contract":
            hit = _contract(u, action[1])
        else:
            hit = (1 if len(u) % 2 == 0 else -1, u)
        if hit is None:
            continue
        sign, target = hit
        add = c if sign > 0 else -c
        prev = out.get(target)
        out[target] = add if prev is None else prev + add
    return {u: c for u, c in out.items() if c}


def act(c, vec):
    """Apply a Clifford element to a module vector (sparse subset dict)."""
    if not isinstance(c, CliffordElement):
        raise TypeError("act expects a CliffordElement")
    space = c.space
    if space.kind not in ("even", "odd"):
        raise ValueError("the exterior module is defined for the even and odd spaces")
    limit = space.n if space.kind == "even" else space.n - 1
    for u in vec:
        if any(not (1 <= j <= limit) for j in u):
            raise ValueError("module vector indices out of range for this space")
    acc = {}
    for mono, coeff in c.terms.items():
        cur = {u: v * coeff for u, v in vec.items()}
        for g in reversed(mono):
            cur = _apply_generator(space, g, cur)
            if not cur:
                break
        for u, v in cur.items():
            prev = acc.get(u)
            acc[u] = v if prev is None else prev + v
    return {u: v for u, v in acc.items() if v}


class SpinMatrix:
    """A spin or half-spin matrix together with its block label."""

    __slots__ = ("epsilon", "mat")

    def __init__(self, epsilon, mat):
        if epsilon not in ("+", "-", "full"):
            raise ValueError("epsilon must be '+', '-' or 'full'")
        self.epsilon = epsilon
        self.mat = mat

    def __eq__(self, other):
        if not isinstance(other, SpinMatrix):
            return NotImplemented
        return self.epsilon == other.epsilon and self.mat == other.mat

    def __repr__(self):
        return f"SpinMatrix({self.epsilon}, {self.mat.nrows}x{self.mat.ncols})"


def _eps_label(eps):
    if eps in ("+", 1):
        return "+"
    if eps in ("-", -1):
        return "-"
    raise ValueError("epsilon must be +1/-1 or '+'/'-'")


def spin_matrix(x):
    """The full spin matrix of a GPin element in the fixed Fock ordering.

    For the even space this is 2^n-square (even-parity elements are block
    diagonal, odd-parity ones block anti-diagonal); for the odd space it is
    the 2^{n-1}-square matrix on the full module.
    """
    if not isinstance(x, GPinElement):
        raise TypeError("spin_matrix expects a GPinElement")
    return SpinMatrix("full", _spin_mat_cached(x))


@lru_cache(maxsize=None)
def _spin_mat_cached(x):
    space = x.space
    if space.kind == "even":
        basis = fock_basis(space.n).subsets
        index = fock_basis(space.n).index
    elif space.kind == "odd":
        basis = odd_module_basis(space.n)
        index = {u: k for k, u in enumerate(basis)}.__getitem__
    else:
        raise ValueError("spin_matrix needs an even- or odd-space element")
    cols = []
    for u in basis:
        image = act(x.elt, {u: GaussRat(1)})
        col = [GaussRat(0)] * len(basis)
        for v, c in image.items():
            col[index(v)] = c
        cols.append(col)
    return Mat.from_cols(cols)


def half_spin_matrix(x, eps):
    """The half-spin matrix of an even GPin element on the epsilon block."""
    if not isinstance(x, GPinElement):
        raise TypeError("half_spin_matrix expects a GPinElement")
    if x.space.kind != "even":
        raise ValueError("half-spin representations live on the even space")
    if x.parity != 0:
        raise ValueError("odd-parity element has no half-spin matrix")
    label = _eps_label(eps)
    return SpinMatrix(label, _half_spin_mat_cached(x, label))


@lru_cache(maxsize=None)
def _half_spin_mat_cached(x, label):
    fb = fock_basis(x.space.n)
    block = fb.even_subsets if label == "+" else fb.odd_subsets
    offsets = {u: k for k, u in enumerate(block)}
    cols = []
    for u in block:
        image = act(x.elt, {u: GaussRat(1)})
        col = [GaussRat(0)] * len(block)
        for v, c in image.items():
            k = offsets.get(v)
            if k is None:
                raise ValueError("even element does not preserve the half-spin block")
            col[k] = c
        cols.append(col)
    return Mat.from_cols(cols)


def theta_intertwiner(n):
    """Matrix of x -> (theta element) * x from the + block to the - block.

    With this package's basis ordering it equals sqrt(-1) * I by
    construction; the matrix is still computed from the module action.
    """
    fb = fock_basis(n)
    th = theta_element(even_space(n))
    offsets = {u: k for k, u in enumerate(fb.odd_subsets)}
    cols = []
    for u in fb.even_subsets:
        image = act(th, {u: GaussRat(1)})
        col = [GaussRat(0)] * len(fb.odd_subsets)
        for v, c in image.items():
            col[offsets[v]] = c
        cols.append(col)
    return Mat.from_cols(cols)


def psi_matrix(n):
    """Change-of-module matrix from the V_{2n-1} module to the + block of V_2n.

    Even-degree monomials map to themselves, odd-degree ones pick up a
    trailing wedge with e_n; both land in even degrees of the big module.
    """
    if n < 2:
        raise ValueError("psi_matrix needs n >= 2")
    fb = fock_basis(n)
    offsets = {u: k for k, u in enumerate(fb.even_subsets)}
    src = odd_module_basis(n)
    size = len(src)
    cols = []
    for s in src:
        target = s if len(s) % 2 == 0 else tuple(sorted(s + (n,)))
        col = [GaussRat(0)] * size
        col[offsets[target]] = GaussRat(1)
        cols.append(col)
    return Mat.from_cols(cols)


@lru_cache(maxsize=None)
def pairing_gram(n):
    """Gram matrix of the invariant pairing on the full Fock basis.

    ((w1, w2)) is the coefficient of the top monomial e_1...e_n in
    beta(w1) * w2, computed inside C(V); on W-only monomials the Clifford
    product coincides with the wedge product.
    """
    space = even_space(n)
    fb = fock_basis(n)
    top = tuple(range(1, n + 1))
    rows = []
    for u in fb.subsets:
        bu = beta(CliffordElement.monomial(space, u))
        row = []
        for v in fb.subsets:
            mv = CliffordElement.monomial(space, v)
            row.append((bu * mv).coefficient(top))
        rows.append(row)
    return Mat(rows)
