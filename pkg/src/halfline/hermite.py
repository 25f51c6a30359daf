"""Normalized Hermite functions and their log-mapped transplant onto [0, inf).

The line family is

    G_0(t) = exp(-t^2 / 2),   G_1(t) = sqrt(2) t exp(-t^2 / 2),
    G_{n+1}(t) = t sqrt(2/(n+1)) G_n(t) - sqrt(n/(n+1)) G_{n-1}(t),

orthogonal on R with constant sqrt(pi).  The half-line member is
G_n(ln(x) / k); near x = 0 the Gaussian factor crushes every derivative to
zero, so the mapped family carries no boundary information at the origin.
"""

import math

import numpy as np

from .core import CollocationGrid, DiscreteInnerProductRule
from .errors import ConfigurationError, DomainError, NodeComputationError, UnsupportedOrderError

_POLISH_TOL = 1e-9


def _check_order(order):
    if not isinstance(order, (int, np.integer)) or order < 0 or order > 3:
        raise UnsupportedOrderError("derivative order must be in 0..3, got %r" % (order,))
    return int(order)


def _line_tables(nmax, t, max_order):
    """Values and t-derivatives of G_0..G_nmax at scalar t.

    Returns a list D with D[m][n] = d^m/dt^m G_n(t), for m = 0..max_order.
    The derivative recurrence G_n' = sqrt(2n) G_{n-1} - t G_n differentiates
    into one extra -G term per order.
    """
    g = np.empty(nmax + 1)
    g[0] = math.exp(-0.5 * t * t)
    if nmax >= 1:
        g[1] = math.sqrt(2.0) * t * g[0]
    for n in range(1, nmax):
        g[n + 1] = t * math.sqrt(2.0 / (n + 1)) * g[n] - math.sqrt(n / (n + 1.0)) * g[n - 1]
    D = [g]
    root = np.sqrt(2.0 * np.arange(nmax + 1))
    for m in range(1, max_order + 1):
        prev = D[m - 1]
        shifted = np.empty(nmax + 1)
        shifted[0] = 0.0
        shifted[1:] = prev[:-1]
        cur = root * shifted - t * prev
        if m >= 2:
            cur -= (m - 1) * D[m - 2]
        D.append(cur)
    return D


def hermite_fn_eval(n, t, order=0):
    """G_n(t) or a t-derivative of it (orders 0..3)."""
    if n < 0:
        raise ConfigurationError("degree must be >= 0, got %r" % (n,))
    m = _check_order(order)
    return float(_line_tables(n, float(t), m)[m][n])


class HermiteBasis:
    """Descriptor for the log-mapped Hermite family.

    N -- top index; members 0..N, dimension N+1
    k -- map constant in t = ln(x) / k  (k > 0)
    """

    def __init__(self, N, k=1.0):
        if not isinstance(N, (int, np.integer)) or N < 1:
            raise ConfigurationError("N must be an integer >= 1, got %r" % (N,))
        if not (k > 0):
            raise ConfigurationError("map constant k must be positive, got %r" % (k,))
        self.N = int(N)
        self.k = float(k)

    @property
    def dimension(self):
        return self.N + 1

    def member(self, i, x, order=0):
        return transformed_hermite_eval(self, i, x, order)

    def nodes(self):
        return hermite_nodes(self)

    def __repr__(self):
        return "HermiteBasis(N=%d, k=%g)" % (self.N, self.k)


def _map_derivatives(k, x):
    """(t, t', t'', t''') for t = ln(x)/k at x > 0."""
    t = math.log(x) / k
    p1 = 1.0 / (k * x)
    p2 = -1.0 / (k * x * x)
    p3 = 2.0 / (k * x * x * x)
    return t, p1, p2, p3


def _chain(D, n, p1, p2, p3, order):
    """x-derivative of order 'order' from line-derivative tables D at one member n."""
    if order == 0:
        return D[0][n]
    if order == 1:
        return D[1][n] * p1
    if order == 2:
        return D[2][n] * p1 * p1 + D[1][n] * p2
    return (D[3][n] * p1 ** 3 + 3.0 * D[2][n] * p1 * p2 + D[1][n] * p3)


def transformed_hermite_eval(basis, n, x, order=0):
    """Half-line member G_n(ln(x)/k) or its x-derivative.

    At x = 0 every order returns the continuous-extension limit 0: the
    Gaussian factor decays faster than any power of the diverging map
    derivatives grows.
    """
    m = _check_order(order)
    if not (0 <= n <= basis.N):
        raise ConfigurationError("member index %r outside 0..%d" % (n, basis.N))
    x = float(x)
    if x < 0:
        raise DomainError("mapped Hermite members live on x >= 0, got %r" % (x,))
    if x == 0.0:
        return 0.0
    t, p1, p2, p3 = _map_derivatives(basis.k, x)
    D = _line_tables(n, t, m)
    return float(_chain(D, n, p1, p2, p3, m))


def hermite_matrix(basis, xs, order=0):
    """Values of all members' order-th derivative at each x, shape (N+1, len(xs))."""
    m = _check_order(order)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    out = np.empty((basis.N + 1, xs.size))
    for col, x in enumerate(xs):
        if x < 0:
            raise DomainError("mapped Hermite members live on x >= 0, got %r" % (x,))
        if x == 0.0:
            out[:, col] = 0.0
            continue
        t, p1, p2, p3 = _map_derivatives(basis.k, x)
        D = _line_tables(basis.N, t, m)
        if m == 0:
            out[:, col] = D[0]
        elif m == 1:
            out[:, col] = D[1] * p1
        elif m == 2:
            out[:, col] = D[2] * p1 * p1 + D[1] * p2
        else:
            out[:, col] = D[3] * p1 ** 3 + 3.0 * D[2] * p1 * p2 + D[1] * p3
    return out


def hermite_line_nodes(N):
    """Roots of G_{N+1} (equivalently the Hermite polynomial H_{N+1}), ascending."""
    off = np.sqrt(0.5 * np.arange(1, N + 1))
    try:
        t = np.linalg.eigvalsh(np.diag(off, 1) + np.diag(off, -1))
    except np.linalg.LinAlgError as exc:
        raise NodeComputationError("eigen-solve for Hermite nodes failed: %s" % exc)
    t = np.sort(t)
    for _ in range(5):
        vals = np.array([hermite_fn_eval(N + 1, tj, 0) for tj in t])
        if np.all(np.abs(vals) <= _POLISH_TOL):
            break
        derivs = np.array([hermite_fn_eval(N + 1, tj, 1) for tj in t])
        with np.errstate(divide="raise", invalid="raise"):
            try:
                t = t - vals / derivs
            except FloatingPointError:
                raise NodeComputationError("Newton polish hit a zero derivative")
    else:
        raise NodeComputationError("Hermite nodes failed to polish below %g" % _POLISH_TOL)
    return t


def hermite_nodes(basis):
    """The N+1 half-line collocation points exp(k * t_j), ascending."""
    t = hermite_line_nodes(basis.N)
    return CollocationGrid(np.exp(basis.k * t))


def mapped_trapezoid_rule(basis, t_span=8.0, dt=0.05):
    """Trapezoid rule in t = ln(x)/k over [-t_span, t_span], folded to x-space.

    The measure dx/(k x) = dt is absorbed into the weights, so plain nodal
    sums approximate integral u(x) v(x) / (k x) dx.  Used by property tests
    (orthogonality, projection); the solver path never needs it.
    """
    n = int(round(2 * t_span / dt))
    t = -t_span + dt * np.arange(n + 1)
    w = np.full(n + 1, dt)
    w[0] = w[-1] = 0.5 * dt
    return DiscreteInnerProductRule(np.exp(basis.k * t), w)
