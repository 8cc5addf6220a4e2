"""Matrix views of the moment recursions, plus the determinant identities.

The one-step transfer matrix has the unit-width step weights as entries,
so its n-th power tabulates generalized moments.  The same walk factors
into a product of two-band matrices built from 2x2 blocks, one factor
per column of the parity-constrained model.  Both evaluators truncate
the infinite operators; the truncation bound comes from the path height
bound and is exercised by a grow-the-dimension test.

Determinants are taken by fraction-free elimination, which is exact over
the symbolic coefficient ring and also serves the numeric mode.
"""

from .algebra import exact_div, is_zero_scalar, values_close
from .core import moments_from_phis


class ScalarMatrix:
    """Dense square matrix over either coefficient representation."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.dim = len(self.rows)
        if any(len(r) != self.dim for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, dim, one, zero):
        rows = [[zero] * dim for _ in range(dim)]
        for i in range(dim):
            rows[i][i] = one
        return cls(rows)

    def entry(self, i, j):
        return self.rows[i][j]

    def __getitem__(self, i):
        return self.rows[i]

    def __mul__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        d = self.dim
        zero = self.rows[0][0] * 0
        out = [[zero] * d for _ in range(d)]
        for i in range(d):
            arow = self.rows[i]
            orow = out[i]
            for k in range(d):
                a = arow[k]
                if is_zero_scalar(a):
                    continue
                brow = other.rows[k]
                for j in range(d):
                    b = brow[j]
                    if not is_zero_scalar(b):
                        orow[j] = orow[j] + a * b
        return ScalarMatrix(out)

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return "ScalarMatrix(%r)" % (self.rows,)


# ---------------------------------------------------------------------------
# transfer matrix and its powers


def build_U(vs, dim):
    """One-step transfer matrix: entry (i, j) is the i -> j step weight."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    rows = []
    for i in range(dim):
        row = [vs.zero()] * dim
        if i + 1 < dim:
            row[i + 1] = vs.one()
        prod = vs.one()
        for j in range(i, -1, -1):
            row[j] = -vs.alpha(i) * vs.alpha_bar(j - 1) * prod
            if j:
                prod = vs.rho(j - 1) * prod
        rows.append(row)
    return ScalarMatrix(rows)


def u_power_matrix(vs, n, dim):
    """n-th power of the transfer matrix at a fixed truncation."""
    key = ("u_pows", dim)
    mats = vs.cache.get(key)
    if mats is None:
        mats = [ScalarMatrix.identity(dim, vs.one(), vs.zero())]
        vs.cache[key] = mats
    if n >= 1 and len(mats) == 1:
        mats.append(build_U(vs, dim))
    while len(mats) <= n:
        mats.append(mats[-1] * mats[1])
    return mats[n]


def u_power_entry(vs, n, r, s):
    """Generalized moment as the (r, s) entry of the n-th transfer power.

    Truncating at dimension r + n + 1 is enough: a walk from height r
    with n unit-width steps stays below that.  A larger cached dimension
    is reused unchanged, which the truncation-sufficiency test backs.
    """
    if min(n, r, s) < 0:
        raise ValueError("indices must be nonnegative")
    need = r + n + 1
    if s >= need:
        return vs.zero()
    dim = vs.cache.get(("u_dim",), 0)
    if dim < need:
        dim = need
        vs.cache[("u_dim",)] = dim
    return u_power_matrix(vs, n, dim)[r][s]


# ---------------------------------------------------------------------------
# factored two-band form


def theta_block(vs, j):
    """The 2x2 block pairing heights j and j+1."""
    return [[vs.alpha(j), vs.one()], [vs.rho(j), -vs.alpha_bar(j)]]


def cmv_factor(vs, x, dim):
    """Transfer factor for the column starting at x, truncated to dim.

    Even columns couple heights (0,1), (2,3), ...; odd columns fix height
    0 and couple (1,2), (3,4), ...  Entry (i, j) reproduces the weight of
    the parity-model step (x, i) -> (x+1, j).
    """
    zero = vs.zero()
    rows = [[zero] * dim for _ in range(dim)]
    if x % 2 == 0:
        j = 0
    else:
        rows[0][0] = vs.one()
        j = 1
    while j < dim:
        blk = theta_block(vs, j)
        rows[j][j] = blk[0][0]
        if j + 1 < dim:
            rows[j][j + 1] = blk[0][1]
            rows[j + 1][j] = blk[1][0]
            rows[j + 1][j + 1] = blk[1][1]
        j += 2
    return ScalarMatrix(rows)


def cmv_prefix_products(vs, r, width, dim):
    """Products of the first 0..width factors starting at column -r."""
    key = ("cmv_prefix", r)
    entry = vs.cache.get(key)
    if entry is None or entry[0] < dim:
        entry = (dim, [ScalarMatrix.identity(dim, vs.one(), vs.zero())])
        vs.cache[key] = entry
    d, prods = entry
    while len(prods) <= width:
        x = -r + len(prods) - 1
        prods.append(prods[-1] * cmv_factor(vs, x, d))
    return prods


def cmv_walk_entry(vs, n, r, s):
    """Generalized moment as an entry of the factored-walk product.

    The product runs over the 2n + r - s columns of the parity model,
    factors ordered by increasing column; entry (r, s) is read off.  An
    empty product means the n = 0, r = s case.
    """
    if min(n, r, s) < 0:
        raise ValueError("indices must be nonnegative")
    width = 2 * n + r - s
    if width < 0 or s > r + n:
        return vs.zero()
    dim = r + n + 2
    prods = cmv_prefix_products(vs, r, width, dim)
    return prods[width][r][s]


# ---------------------------------------------------------------------------
# determinants


def determinant(mat, one):
    """Fraction-free elimination with row-swap pivoting.

    Every division is exact over an integral domain; the same control
    flow serves the numeric mode, where the divisions are ordinary.
    """
    d = mat.dim
    a = [list(row) for row in mat.rows]
    sign = 1
    prev = one
    for k in range(d - 1):
        if is_zero_scalar(a[k][k]):
            for i in range(k + 1, d):
                if not is_zero_scalar(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return one * 0
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev)
        prev = a[k][k]
    det = a[d - 1][d - 1]
    return det if sign == 1 else -det


def toeplitz_matrix(vs, n):
    """(n+1) x (n+1) matrix of classical moments, entry (i, j) index i - j."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    pos, neg = moments_from_phis(vs, n)
    rows = [[pos[i - j] if i >= j else neg[j - i] for j in range(n + 1)]
            for i in range(n + 1)]
    return ScalarMatrix(rows)


def toeplitz_det(vs, n):
    """Determinant of the order-n classical moment matrix."""
    return determinant(toeplitz_matrix(vs, n), vs.one())


def rho_power_product(vs, n):
    """The closed product the order-n determinant must equal."""
    out = vs.one()
    for k in range(n):
        out = out * vs.rho(k) ** (n - k)
    return out


def det_identity_check(vs, m, n, tol=1e-9):
    """Shifted-moment determinant against its generalized-moment factorization.

    Left side: det of the (n+1)-square matrix with entry (i, j) the
    classical moment of index m + i - j.  Right side: the rho product
    times det of the matrix with entry (i, j) the generalized moment
    (m + i, 0, j), negative first index handled by the mirrored model.
    Returns (lhs, rhs, equal).
    """
    from .paths import moment_lukasiewicz, moment_negative

    if n < 0:
        raise ValueError("order must be nonnegative")
    bound = abs(m) + n
    pos, neg = moments_from_phis(vs, bound)
    lhs_rows = [[pos[m + i - j] if m + i - j >= 0 else neg[j - m - i]
                 for j in range(n + 1)] for i in range(n + 1)]
    lhs = determinant(ScalarMatrix(lhs_rows), vs.one())

    def gen(idx, j):
        if idx >= 0:
            return moment_lukasiewicz(vs, idx, 0, j)
        return moment_negative(vs, -idx, 0, j)

    rhs_rows = [[gen(m + i, j) for j in range(n + 1)] for i in range(n + 1)]
    rhs = rho_power_product(vs, n) * determinant(ScalarMatrix(rhs_rows), vs.one())
    return lhs, rhs, values_close(lhs, rhs, tol)
