"""The independent check: shooting with Runge-Kutta plus a secant search.

Every collocation answer in this package can be cross-examined by an
oracle that never sees a basis function: integrate the ODE from the origin
with a guessed initial slope, score how badly the far-field condition is
violated, and drive the guess with a bracketed secant iteration.
"""

from halfline import (
    ConeParams,
    FluidParams,
    ShootConfig,
    ThomasFermiProblem,
    shoot,
)


def main():
    slope, (xs, states) = shoot(FluidParams(0.6, 0.1, 0.5))
    print("draining film:   f'(0) = %.9f" % slope)
    for z in (1.0, 5.0, 10.0):
        i = int(round(z / 1e-3))
        print("                 f(%4.1f) = %12.5e" % (z, states[i, 0]))

    slope, (xs, states) = shoot(ThomasFermiProblem())
    print("atomic screen:   y'(0) = %.9f" % slope)
    i = int(round(4.0 / 1e-3))
    print("                 y(4.0) = %12.5e" % states[i, 0])

    slope, (xs, states) = shoot(ConeParams(0.0))
    print("heated cone:     f'(0) = %.9f  (lam = 0)" % slope)

    # the bracket and mesh are adjustable when a problem needs them
    cfg = ShootConfig(z_max=60.0, step=1e-3, bracket=(0.0, 1.2))
    slope60, _ = shoot(ConeParams(0.0), cfg)
    print("                 doubling the domain moves it by %.1e" %
          abs(slope60 - slope))


if __name__ == "__main__":
    main()
