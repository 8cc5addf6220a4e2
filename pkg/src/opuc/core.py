"""Verblunsky sequences, the monic polynomial recurrences, the moment
functional, and the inner-product oracle.

Everything downstream is cross-checked against `moment_oracle`, which
computes generalized moments directly from the definition: the moment
functional L is recovered from the polynomial coefficient matrices by
solving two unit-lower-triangular systems, and the sesquilinear form is
<f, g> = L(f(z) * conj(g)(1/z)).
"""

from fractions import Fraction

from .algebra import (SYMBOLIC, NUMERIC, ExactScalar, LaurentPoly,
                      alpha as sym_alpha, alpha_bar as sym_alpha_bar,
                      as_mode_scalar, bar_inverse_substitute, conjugate,
                      exact_div, is_zero_scalar, one_of, zero_of)


class VerblunskySequence:
    """A rule j -> alpha_j together with a mode tag and per-object caches.

    alpha(-1) is the boundary constant -1.  Numeric mode insists on
    |alpha_j| < 1 for every accessed j; symbolic mode cannot check this
    and leaves it as a caller obligation.  Instances are treated as
    immutable; the caches only memoize pure functions of the sequence.
    """

    def __init__(self, accessor, mode, source="table"):
        self.mode = mode
        self.source = source
        self._accessor = accessor
        self._alphas = {}
        self._phis = [LaurentPoly.one(mode)]
        self._phistars = [LaurentPoly.one(mode)]
        self._mu_pos = None
        self._mu_neg = None
        self.cache = {}

    @classmethod
    def generic(cls):
        """Fully symbolic sequence: alpha_j stays the symbol a_j."""
        return cls(lambda j: sym_alpha(j), SYMBOLIC, source="generic")

    @classmethod
    def from_table(cls, values, mode):
        values = list(values)

        def accessor(j):
            if j >= len(values):
                raise IndexError(
                    "alpha_%d requested but table has %d entries"
                    % (j, len(values)))
            return values[j]

        return cls(accessor, mode, source="table[%d]" % len(values))

    @classmethod
    def from_function(cls, fn, mode, source="rule"):
        return cls(fn, mode, source=source)

    def alpha(self, j):
        if j == -1:
            return as_mode_scalar(-1, self.mode)
        if j < -1:
            raise ValueError("alpha index must be >= -1, got %d" % j)
        v = self._alphas.get(j)
        if v is None:
            v = self._accessor(j)
            if self.mode == NUMERIC:
                v = complex(v)
                if abs(v) >= 1:
                    raise ValueError(
                        "|alpha_%d| = %g >= 1; numeric sequences must stay "
                        "inside the open unit disk" % (j, abs(v)))
            elif not isinstance(v, ExactScalar):
                v = as_mode_scalar(v, SYMBOLIC)
            self._alphas[j] = v
        return v

    def alpha_bar(self, j):
        return conjugate(self.alpha(j))

    def rho(self, j):
        """1 - alpha_j * conj(alpha_j)."""
        if j < 0:
            raise ValueError("rho index must be >= 0, got %d" % j)
        return 1 - self.alpha(j) * self.alpha_bar(j)

    def rho_product(self, lo, hi):
        """Product of rho_j for lo <= j < hi (empty product is 1)."""
        out = one_of(self.mode)
        for j in range(lo, hi):
            out = out * self.rho(j)
        return out

    def one(self):
        return one_of(self.mode)

    def zero(self):
        return zero_of(self.mode)


class PhiPair:
    """Monic polynomial of degree n together with its reverse."""

    __slots__ = ("n", "phi", "phi_star")

    def __init__(self, n, phi, phi_star):
        self.n = n
        self.phi = phi
        self.phi_star = phi_star


def phi(vs, n):
    """The degree-n monic orthogonal polynomial and its reverse.

    Both members are advanced by the coupled recurrences
    phi_{k+1} = z*phi_k - conj(alpha_k)*phi_k^* and
    phi_{k+1}^* = phi_k^* - alpha_k*z*phi_k, from phi_0 = phi_0^* = 1.
    """
    if n < 0:
        raise ValueError("polynomial degree must be >= 0")
    phis, stars = vs._phis, vs._phistars
    while len(phis) <= n:
        k = len(phis) - 1
        p, ps = phis[k], stars[k]
        zp = p.shift(1)
        phis.append(zp - ps.scale(vs.alpha_bar(k)))
        stars.append(ps - zp.scale(vs.alpha(k)))
    return PhiPair(n, phis[n], stars[n])


def reverse(f, declared_degree):
    """z**declared_degree times conj(f)(1/z), for a polynomial f."""
    if not f.is_zero and f.valuation() < 0:
        raise ValueError("reverse needs a polynomial (no negative powers)")
    if not f.is_zero and f.degree() > declared_degree:
        raise ValueError("declared degree %d below actual degree %d"
                         % (declared_degree, f.degree()))
    return LaurentPoly({declared_degree - k: conjugate(c)
                        for k, c in f.coeffs.items()}, f.mode)


def kappa(vs, n):
    """Squared norm of phi_n: the product of (1 - |alpha_j|^2), j < n."""
    if n < 0:
        raise ValueError("kappa index must be >= 0")
    return vs.rho_product(0, n)


def moments_from_phis(vs, N):
    """Moments mu_0..mu_N and mu_{-1}..mu_{-N} of the functional L.

    L kills phi_n and its coefficient-conjugate for n >= 1 and sends 1
    to 1.  With phi_n = sum_k c_{n,k} z^k and L(z^k) = mu_{-k} this is a
    pair of unit-lower-triangular systems:

        mu_{-n} = delta_{n,0} - sum_{k<n} c_{n,k} mu_{-k}
        mu_{ n} = delta_{n,0} - sum_{k<n} conj(c_{n,k}) mu_{k}

    The two systems are solved independently (the negative-index run
    never conjugates the positive one), so downstream reciprocity checks
    are genuine tests.  Results are cached on the sequence and extended
    lazily.  Returns (nonneg, nonpos) with nonneg[k] = mu_k and
    nonpos[k] = mu_{-k}.
    """
    if vs._mu_pos is None:
        vs._mu_pos = [one_of(vs.mode)]
        vs._mu_neg = [one_of(vs.mode)]
    pos, neg = vs._mu_pos, vs._mu_neg
    while len(pos) <= N:
        n = len(pos)
        p = phi(vs, n).phi
        acc_neg = zero_of(vs.mode)
        acc_pos = zero_of(vs.mode)
        for k in range(n):
            c = p.coeff(k)
            if is_zero_scalar(c):
                continue
            acc_neg = acc_neg + c * neg[k]
            acc_pos = acc_pos + conjugate(c) * pos[k]
        neg.append(-acc_neg)
        pos.append(-acc_pos)
    return pos[:N + 1], neg[:N + 1]


def functional_eval(vs, f):
    """Apply L to a Laurent polynomial: L(z^k) = mu_{-k}."""
    if f.is_zero:
        return zero_of(vs.mode)
    need = max(abs(f.valuation()), abs(f.degree()))
    pos, neg = moments_from_phis(vs, need)
    out = zero_of(vs.mode)
    for k, c in f.coeffs.items():
        out = out + c * (neg[k] if k >= 0 else pos[-k])
    return out


def inner_product(vs, f, g):
    """<f, g> = L(f(z) * conj(g)(1/z))."""
    return functional_eval(vs, f * bar_inverse_substitute(g))


def moment_oracle(vs, n, r, s):
    """mu_{n,r,s} = <phi_s, z^n phi_r> / <phi_s, phi_s>, from scratch.

    n may be negative.  This is the ground truth every other moment
    method is tested against.
    """
    if r < 0 or s < 0:
        raise ValueError("r and s must be >= 0")
    key = ("oracle", n, r, s)
    hit = vs.cache.get(key)
    if hit is not None:
        return hit
    num = inner_product(vs, phi(vs, s).phi, phi(vs, r).phi.shift(n))
    val = exact_div(num, kappa(vs, s))
    vs.cache[key] = val
    return val


class MomentTable:
    """Cache of generalized moments with per-entry provenance.

    A thin mapping (n, r, s) -> (value, method tag) used by the CLI to
    collect results; the kronecker-delta normalization mu_{0,r,s} =
    delta_{r,s} is asserted on insertion for method-computed entries.
    """

    def __init__(self, mode):
        self.mode = mode
        self._entries = {}

    def put(self, n, r, s, value, method):
        self._entries[(n, r, s)] = (value, method)

    def get(self, n, r, s):
        return self._entries.get((n, r, s))

    def items(self):
        return sorted(self._entries.items())
