"""Shared trial-space machinery: expansions, grids, and discrete inner products.

A basis object (Laguerre, Hermite, or sinc family) exposes

    dimension          -- number of coefficients in a truncated expansion
    member(i, x, m)    -- i-th basis member, m-th derivative, at x >= 0

and this module supplies everything generic on top of that: evaluating a
truncated series (optionally shifted by a closed-form seed profile),
projecting a function onto the basis with a discrete inner-product rule,
and the weighted nodal sums themselves.
"""

import numpy as np

from .errors import ConfigurationError, DomainError, UnsupportedOrderError

MAX_ORDER = 3


def _readonly(a):
    arr = np.asarray(a, dtype=float).copy()
    arr.setflags(write=False)
    return arr


class CollocationGrid:
    """Strictly increasing collocation nodes on (0, inf)."""

    def __init__(self, nodes):
        nodes = _readonly(nodes)
        if nodes.ndim != 1 or nodes.size == 0:
            raise ConfigurationError("grid needs a non-empty 1-D node array")
        if not np.all(np.isfinite(nodes)):
            raise ConfigurationError("grid nodes must be finite")
        if np.any(np.diff(nodes) <= 0):
            raise ConfigurationError("grid nodes must be strictly increasing")
        self.nodes = nodes

    def __len__(self):
        return self.nodes.size

    def __iter__(self):
        return iter(self.nodes)

    def __repr__(self):
        return "CollocationGrid(%d nodes on [%g, %g])" % (
            len(self), self.nodes[0], self.nodes[-1])


class DiscreteInnerProductRule:
    """Nodes and weights for <u, v> = sum_j u(x_j) v(x_j) w_j.

    Nodes must be strictly increasing and positive.  Weight positivity is a
    property of specific rules (the Laguerre-Radau rule guarantees it), not
    of the container, so it is checked by the rule constructors.
    """

    def __init__(self, nodes, weights):
        self.nodes = _readonly(nodes)
        self.weights = _readonly(weights)
        if self.nodes.shape != self.weights.shape or self.nodes.ndim != 1:
            raise ConfigurationError("nodes and weights must be 1-D and the same length")
        if self.nodes.size == 0:
            raise ConfigurationError("empty inner-product rule")
        if not (np.all(np.isfinite(self.nodes)) and np.all(np.isfinite(self.weights))):
            raise ConfigurationError("rule nodes/weights must be finite")
        if np.any(self.nodes <= 0) or np.any(np.diff(self.nodes) <= 0):
            raise ConfigurationError("rule nodes must be positive and strictly increasing")

    def __len__(self):
        return self.nodes.size


class Expansion:
    """Truncated series sum_i c_i B_i(x), plus an optional additive seed profile.

    The seed (see problems.SeedProfile) carries boundary values in closed
    form; the basis part vanishes where the boundary conditions live, or is
    constrained there by explicit equations.
    """

    def __init__(self, basis, coefficients, seed=None):
        self.basis = basis
        self.coefficients = _readonly(coefficients)
        if self.coefficients.ndim != 1:
            raise ConfigurationError("coefficients must be a 1-D array")
        if self.coefficients.size != basis.dimension:
            raise ConfigurationError(
                "coefficient count %d != basis dimension %d"
                % (self.coefficients.size, basis.dimension))
        if not np.all(np.isfinite(self.coefficients)):
            raise ConfigurationError("coefficients must be finite")
        self.seed = seed

    def __call__(self, x, order=0):
        return eval_expansion(self, x, order)


def _check_point(x, order):
    if not isinstance(order, (int, np.integer)) or order < 0 or order > MAX_ORDER:
        raise UnsupportedOrderError("derivative order must be an integer in 0..3, got %r" % (order,))
    x = float(x)
    if not np.isfinite(x):
        raise DomainError("evaluation point must be finite, got %r" % (x,))
    if x < 0:
        raise DomainError("evaluation point must be >= 0, got %r" % (x,))
    return x


def eval_expansion(e, x, order=0):
    """Value of the expansion's order-th derivative at x >= 0.

    Sums coefficient * member derivative over the basis, then adds the
    seed's derivative when a seed is attached.
    """
    x = _check_point(x, order)
    total = 0.0
    coef = e.coefficients
    basis = e.basis
    for i in range(coef.size):
        c = coef[i]
        if c != 0.0:
            total += c * basis.member(i, x, order)
    if e.seed is not None:
        total += e.seed(x, order)
    return total


def discrete_inner_product(u, v, rule):
    """Weighted nodal sum sum_j u(x_j) v(x_j) w_j."""
    if len(rule) == 0:
        raise ConfigurationError("empty inner-product rule")
    total = 0.0
    for xj, wj in zip(rule.nodes, rule.weights):
        total += u(xj) * v(xj) * wj
    return total


def project(f, basis, rule):
    """Expansion of f with coefficients <f, B_i> / <B_i, B_i> under the rule.

    The rule must resolve the basis: it needs at least as many nodes as the
    basis has members (the Laguerre-Radau rule pairs one node per member,
    the mapped trapezoid rule for Hermite uses many more).
    """
    if len(rule) < basis.dimension:
        raise ConfigurationError(
            "rule with %d nodes cannot resolve a %d-member basis"
            % (len(rule), basis.dimension))
    coefficients = np.empty(basis.dimension)
    fvals = np.array([f(xj) for xj in rule.nodes])
    for i in range(basis.dimension):
        bvals = np.array([basis.member(i, xj, 0) for xj in rule.nodes])
        num = np.sum(fvals * bvals * rule.weights)
        den = np.sum(bvals * bvals * rule.weights)
        coefficients[i] = num / den
    return Expansion(basis, coefficients)
