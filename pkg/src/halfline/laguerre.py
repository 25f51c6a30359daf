"""Generalized Laguerre polynomials and the decaying trial family built on them.

The trial family on [0, inf) is

    phi_j(x) = exp(-x / 2L) * L_j^1(x / L),    L > 0,  j = 0..N-1,

i.e. generalized Laguerre polynomials with parameter 1, scaled by L and
damped by a half-exponential so every member decays at infinity.
Collocation nodes are the N roots of L_N^alpha(x / L); the companion
quadrature weights make the nodal inner product reproduce the family's
orthogonality constants Gamma(n+2) / (L^2 n!) exactly for degrees < N.

The alpha parameter moves only the nodes; the trial members themselves are
always the parameter-1 family.
"""

import math

import numpy as np

from .core import CollocationGrid, DiscreteInnerProductRule
from .errors import (ConfigurationError, NodeComputationError,
                     UnsupportedOrderError, UnsupportedParameterError)

_POLISH_TOL = 1e-9


def _check_order(order):
    if not isinstance(order, (int, np.integer)) or order < 0 or order > 3:
        raise UnsupportedOrderError("derivative order must be in 0..3, got %r" % (order,))
    return int(order)


def laguerre_raw(n, alpha, y):
    """L_n^alpha(y) by the upward three-term recurrence; y may be an ndarray."""
    y = np.asarray(y, dtype=float)
    if n == 0:
        return np.ones_like(y)
    prev = np.ones_like(y)          # L_0
    cur = 1.0 + alpha - y           # L_1
    for m in range(2, n + 1):
        prev, cur = cur, ((2 * m - 1 + alpha - y) * cur - (m + alpha - 1) * prev) / m
    return cur


def laguerre_table(nmax, alpha, y):
    """Stacked values L_0^alpha(y) .. L_nmax^alpha(y), shape (nmax+1, len(y))."""
    y = np.atleast_1d(np.asarray(y, dtype=float))
    out = np.empty((nmax + 1, y.size))
    out[0] = 1.0
    if nmax >= 1:
        out[1] = 1.0 + alpha - y
    for m in range(2, nmax + 1):
        out[m] = ((2 * m - 1 + alpha - y) * out[m - 1] - (m + alpha - 1) * out[m - 2]) / m
    return out


def laguerre_eval(n, alpha, x, order=0):
    """L_n^alpha(x) or its order-th derivative.

    Derivatives use the exact shift d/dx L_n^alpha = -L_{n-1}^{alpha+1},
    applied repeatedly: the m-th derivative is (-1)^m L_{n-m}^{alpha+m},
    zero once the degree is exhausted.
    """
    if n < 0:
        raise ConfigurationError("degree must be >= 0, got %r" % (n,))
    if alpha <= -1:
        raise ConfigurationError("alpha must exceed -1, got %r" % (alpha,))
    m = _check_order(order)
    if m > n:
        return 0.0
    sign = -1.0 if m % 2 else 1.0
    return sign * float(laguerre_raw(n - m, alpha + m, float(x)))


class LaguerreBasis:
    """Descriptor for the decaying Laguerre trial family.

    N      -- number of members, indices 0..N-1
    alpha  -- node-placement parameter of L_N^alpha (> -1)
    L      -- length scale (> 0)
    """

    def __init__(self, N, alpha=1.0, L=1.0):
        if not isinstance(N, (int, np.integer)) or N < 1:
            raise ConfigurationError("N must be an integer >= 1, got %r" % (N,))
        if not (L > 0):
            raise ConfigurationError("scale L must be positive, got %r" % (L,))
        if not (alpha > -1):
            raise ConfigurationError("alpha must exceed -1, got %r" % (alpha,))
        self.N = int(N)
        self.alpha = float(alpha)
        self.L = float(L)

    @property
    def dimension(self):
        return self.N

    def member(self, i, x, order=0):
        return mglf_eval(self, i, x, order)

    def nodes(self):
        return laguerre_nodes(self)

    def quadrature(self):
        return mglf_quadrature_weights(self, self.nodes())

    def __repr__(self):
        return "LaguerreBasis(N=%d, alpha=%g, L=%g)" % (self.N, self.alpha, self.L)


def _phi_scalar(j, L, x, order):
    """order-th derivative of exp(-x/2L) L_j^1(x/L), any j >= 0."""
    y = x / L
    damp = math.exp(-0.5 * y)
    total = 0.0
    for i in range(order + 1):
        q = order - i                       # derivatives landing on the polynomial
        if q > j:
            continue
        poly = float(laguerre_raw(j - q, 1 + q, y))
        term = math.comb(order, i) * (-0.5 / L) ** i * (-1.0 / L) ** q * poly
        total += term
    return damp * total


def mglf_eval(basis, j, x, order=0):
    """j-th trial member phi_j = exp(-x/2L) L_j^1(x/L), or a derivative of it."""
    m = _check_order(order)
    if not (0 <= j < basis.N):
        raise ConfigurationError("member index %r outside 0..%d" % (j, basis.N - 1))
    return _phi_scalar(j, basis.L, float(x), m)


def mglf_matrix(basis, xs, order=0):
    """Values phi_j^(order)(x_i) for all members, shape (N, len(xs)).

    Vectorized over the evaluation points via the recurrence tables; used by
    the solver assembly where the same matrix multiplies every Newton step.
    """
    m = _check_order(order)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    y = xs / basis.L
    damp = np.exp(-0.5 * y)
    N = basis.N
    out = np.zeros((N, xs.size))
    # tables[q][n] = L_n^(1+q)(y) for the q-fold differentiated polynomial part
    tables = [laguerre_table(N - 1, 1 + q, y) if N - 1 - q >= 0 else None
              for q in range(m + 1)]
    for i in range(m + 1):
        q = m - i
        c = math.comb(m, i) * (-0.5 / basis.L) ** i * (-1.0 / basis.L) ** q
        table = tables[q]
        for j in range(q, N):
            out[j] += c * table[j - q]
    out *= damp
    return out


def laguerre_nodes(basis):
    """The N roots of L_N^alpha(x / L), ascending, Newton-polished.

    Roots come from the symmetric tridiagonal (Jacobi) matrix of the
    recurrence -- diagonal 2k + alpha + 1, off-diagonal sqrt(k (k + alpha)) --
    then each eigenvalue gets Newton polish steps using the exact derivative
    -L_{N-1}^{alpha+1}.  The acceptance check is on the exponentially damped
    member value e^(-y/2) L_N^alpha(y) <= 1e-9: the raw polynomial's
    floating-point noise grows like e^(+y/2) near the far roots, so for
    moderate N the raw value cannot be driven to a small absolute level at
    any argument, while the damped value (the quantity the basis actually
    uses) can, at every N in scope.
    """
    N, alpha, L = basis.N, basis.alpha, basis.L
    diag = 2.0 * np.arange(N) + alpha + 1.0
    off = np.sqrt(np.arange(1, N) * (np.arange(1, N) + alpha))
    try:
        y = np.linalg.eigvalsh(np.diag(diag) + np.diag(off, 1) + np.diag(off, -1))
    except np.linalg.LinAlgError as exc:
        raise NodeComputationError("eigen-solve for Laguerre nodes failed: %s" % exc)
    y = np.sort(y)
    for _ in range(5):
        vals = laguerre_raw(N, alpha, y)
        if np.all(np.abs(np.exp(-0.5 * y) * vals) <= _POLISH_TOL):
            break
        derivs = -laguerre_raw(N - 1, alpha + 1, y)
        with np.errstate(divide="raise", invalid="raise"):
            try:
                y = y - vals / derivs
            except FloatingPointError:
                raise NodeComputationError("Newton polish hit a zero derivative")
    else:
        raise NodeComputationError(
            "Laguerre nodes failed to polish below %g" % _POLISH_TOL)
    return CollocationGrid(L * y)


def mglf_quadrature_weights(basis, grid):
    """Radau-type weights paired with the parameter-1 node set.

    w_j = x_j * Gamma(N+2) / (L^3 * N! * [(N+1) * phi_{N+1}(x_j)]^2)

    These make the nodal inner product reproduce the continuous constants
    <phi_m, phi_n> = Gamma(n+2)/(L^2 n!) * delta_mn for all m, n < N.
    Only alpha = 1 is supported: the weight formula belongs to the phi
    family, which fixes the parameter.
    """
    if basis.alpha != 1.0:
        raise UnsupportedParameterError(
            "quadrature weights are defined only for alpha = 1, got alpha=%g" % basis.alpha)
    if len(grid) != basis.N:
        raise ConfigurationError(
            "grid has %d nodes, expected %d" % (len(grid), basis.N))
    N, L = basis.N, basis.L
    x = grid.nodes
    # Gamma(N+2)/N! = N+1
    phi_next = np.array([_phi_scalar(N + 1, L, xj, 0) for xj in x])
    w = x * (N + 1.0) / (L ** 3 * ((N + 1.0) * phi_next) ** 2)
    if np.any(w <= 0) or not np.all(np.isfinite(w)):
        raise NodeComputationError("quadrature weights must be positive and finite")
    return DiscreteInnerProductRule(x, w)
