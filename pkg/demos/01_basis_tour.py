"""Tour of the three half-line basis families.

Shows where each family puts its collocation nodes, how the members decay,
and checks the discrete orthogonality relations numerically.
"""

import math

import numpy as np

from halfline import (
    HermiteBasis,
    LaguerreBasis,
    SincBasis,
    mapped_trapezoid_rule,
    mglf_matrix,
    transformed_hermite_eval,
)


def show_nodes(label, nodes, limit=8):
    nodes = np.asarray(nodes)
    head = ", ".join("%.4f" % x for x in nodes[:limit])
    print("  %-28s %d nodes: %s%s" % (label, nodes.size, head,
                                      ", ..." if nodes.size > limit else ""))


def main():
    print("== node layouts ==")
    lag = LaguerreBasis(12, 1.0, 0.8)
    show_nodes("Laguerre functions (L=0.8)", lag.nodes().nodes)
    herm = HermiteBasis(12, 0.9)
    show_nodes("log-mapped Hermite (k=0.9)", herm.nodes().nodes)
    comp = SincBasis(8, 0.7)
    show_nodes("composite translates (h=0.7)", comp.nodes().nodes)
    print()

    print("== far-field decay of member 4 ==")
    for x in (5.0, 20.0, 80.0):
        print("  x=%6.1f   laguerre %10.3e   hermite %10.3e   "
              "translate %10.3e"
              % (x, lag.member(4, x, 0), herm.member(4, x, 0),
                 comp.member(0, x, 0)))
    print()

    print("== discrete orthogonality ==")
    rule = lag.quadrature()
    phi = mglf_matrix(lag, np.asarray(rule.nodes), 0)
    gram = phi @ (np.asarray(rule.weights)[:, None] * phi.T)
    scale = np.array([math.gamma(n + 2) / (0.8 * 0.8 * math.factorial(n))
                      for n in range(12)])
    off = gram - np.diag(np.diag(gram))
    print("  laguerre: diagonal matches Gamma(n+2)/(L^2 n!) to %.1e,"
          % float(np.max(np.abs(np.diag(gram) - scale) / scale)))
    print("            largest off-diagonal %.1e" % float(np.max(np.abs(off))))

    rule = mapped_trapezoid_rule(herm)
    w = np.asarray(rule.weights)
    phi = np.array([[transformed_hermite_eval(herm, n, x)
                     for x in rule.nodes] for n in range(9)])
    gram = phi @ (w[:, None] * phi.T)
    err = float(np.max(np.abs(gram - math.sqrt(math.pi) * np.eye(9))))
    print("  hermite:  transformed members integrate to sqrt(pi)*delta "
          "within %.1e" % err)


if __name__ == "__main__":
    main()
