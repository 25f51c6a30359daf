"""Independent reference solutions by shooting.

Classical fixed-step RK4 integrates each model problem from the axis with a
trial initial slope s; a bracketed false-position iteration (secant with
bracket retention) drives the far-field mismatch to zero.

The mismatch landscape needs care.  Truncating at z_max and capping blown-up
trajectories manufactures spurious sign changes well inside the bracket: a
trajectory caught mid-dive sweeps continuously through zero as the blow-up
point crosses z_max.  The physical slope is the TOPMOST zero, and for the
convecting-cone problem it sits at the upper edge of a dip in the mismatch
only ~1e-2 wide, far narrower than any affordable scan grid.  upper-root
scanning therefore walks down from the top of the bracket and, whenever the
scan values stop decreasing before changing sign, golden-sections the local
minimum hunting for a hidden negative value, then refines the dip's upper
edge.  Mismatch values are log-compressed so capped trajectories cannot
swamp the secant updates.

The scan step is twice the configured RK step and the refinement uses the
configured step itself.  Steps much above 2e-3 go unstable on the stiffest
trial trajectories (the cone linearization reaches |A f| ~ 5e2, and RK4
needs h |lambda| < 2.8), which would poison the scan with oscillation roots.
"""

import math

import numpy as np

from .errors import BlowUpError, ConfigurationError, OracleError
from .problems import ConeParams, FluidParams, ThomasFermiProblem

_BOUND = 1e6
_TF_FAR_FIELD = 30.0
_TF_PRELUDE_END = 0.05
_TF_PRELUDE_STEPS = 1500
_SCAN_POINTS = 64


class ShootConfig:
    """Far-field truncation, RK step, slope-iteration tolerance, bracket.

    bracket = None picks the per-problem default: (-2, 0) for the fluid and
    Thomas-Fermi problems (their slopes are negative), (0, 2) for the cone.
    """

    def __init__(self, z_max=40.0, step=1e-3, secant_tol=1e-10, bracket=None):
        if not (z_max > 0):
            raise ConfigurationError("z_max must be positive, got %r" % (z_max,))
        if not (step > 0):
            raise ConfigurationError("step must be positive, got %r" % (step,))
        if not (secant_tol > 0):
            raise ConfigurationError("secant_tol must be positive, got %r" % (secant_tol,))
        if bracket is not None:
            lo, hi = float(bracket[0]), float(bracket[1])
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise ConfigurationError("bracket must be a finite pair lo < hi")
            bracket = (lo, hi)
        self.z_max = float(z_max)
        self.step = float(step)
        self.secant_tol = float(secant_tol)
        self.bracket = bracket


def rk4_integrate(rhs, y0, x0, x1, step):
    """Classical RK4 trajectory from x0 to x1, final step shortened to land on x1.

    Returns (abscissas, states) as arrays of shape (n+1,) and (n+1, dim).
    A non-finite state aborts with a blow-up error carrying the abscissa.
    """
    if not (step > 0):
        raise ConfigurationError("step must be positive, got %r" % (step,))
    y = tuple(float(v) for v in y0)
    x = float(x0)
    x1 = float(x1)
    xs = [x]
    states = [y]
    n = max(1, int(math.ceil((x1 - x) / step - 1e-12)))
    for _ in range(n):
        hh = min(step, x1 - x)
        y = _rk4_step(rhs, x, y, hh)
        x += hh
        if any(not math.isfinite(v) for v in y):
            raise BlowUpError("trajectory left double range", abscissa=x)
        xs.append(x)
        states.append(y)
    return np.array(xs), np.array(states)


def _rk4_step(rhs, x, y, hh):
    k1 = rhs(x, y)
    k2 = rhs(x + hh / 2, tuple(a + hh / 2 * b for a, b in zip(y, k1)))
    k3 = rhs(x + hh / 2, tuple(a + hh / 2 * b for a, b in zip(y, k2)))
    k4 = rhs(x + hh, tuple(a + hh * b for a, b in zip(y, k3)))
    return tuple(a + hh / 6 * (b + 2 * c + 2 * d + e)
                 for a, b, c, d, e in zip(y, k1, k2, k3, k4))


def _rk4_probe(rhs, y, x0, x1, h):
    """Fast capped integration: (x_reached, state, survived)."""
    x = x0
    n = max(1, int(math.ceil((x1 - x0) / h - 1e-12)))
    for _ in range(n):
        hh = min(h, x1 - x)
        y = _rk4_step(rhs, x, y, hh)
        x += hh
        if any(not math.isfinite(v) or abs(v) > _BOUND for v in y):
            return x, y, False
    return x, y, True


def _rk4_graded(rhs, y, x0, x1, nsub):
    """Geometrically graded steps from x0 to x1 (for the singular launch)."""
    ratio = (x1 / x0) ** (1.0 / nsub)
    x = x0
    for i in range(nsub):
        xn = x0 * ratio ** (i + 1)
        y = _rk4_step(rhs, x, y, xn - x)
        x = xn
        if any(not math.isfinite(v) or abs(v) > _BOUND for v in y):
            return x, y, False
    return x, y, True


# ---------------------------------------------------------------------------
# specialized probe loops
#
# The slope search evaluates the far-field mismatch dozens of times per
# problem, each evaluation a full fixed-step trajectory, and the generic
# tuple-based stepper spends most of that in interpreter overhead.  The
# loops below unroll _rk4_step/_rk4_probe component-wise for each built-in
# right-hand side with the floating-point operations in the identical order,
# so they return bit-for-bit the same states as the generic path (asserted
# against _rk4_probe in the test suite).  Only the mismatch scans use them;
# the reported trajectory still comes from rk4_integrate.

def _probe_fluid(params, f, fp, x0, x1, h):
    b1, b2, b3 = params.b1, params.b2, params.b3
    x = x0
    n = max(1, int(math.ceil((x1 - x0) / h - 1e-12)))
    for _ in range(n):
        hh = min(h, x1 - x)
        h2 = hh / 2
        k1f = fp
        k1p = (b2 * f * fp * fp + b3 * f) / (1.0 + b1 * fp * fp)
        af = f + h2 * k1f
        ap = fp + h2 * k1p
        k2f = ap
        k2p = (b2 * af * ap * ap + b3 * af) / (1.0 + b1 * ap * ap)
        af = f + h2 * k2f
        ap = fp + h2 * k2p
        k3f = ap
        k3p = (b2 * af * ap * ap + b3 * af) / (1.0 + b1 * ap * ap)
        af = f + hh * k3f
        ap = fp + hh * k3p
        k4f = ap
        k4p = (b2 * af * ap * ap + b3 * af) / (1.0 + b1 * ap * ap)
        h6 = hh / 6
        f = f + h6 * (k1f + 2 * k2f + 2 * k3f + k4f)
        fp = fp + h6 * (k1p + 2 * k2p + 2 * k3p + k4p)
        x += hh
        if not (abs(f) <= _BOUND and abs(fp) <= _BOUND):
            return x, (f, fp), False
    return x, (f, fp), True


def _probe_cone(params, f, fp, fpp, x0, x1, h):
    a = (params.lam + 5.0) / 2.0
    b = (2.0 * params.lam + 1.0) / 3.0
    x = x0
    n = max(1, int(math.ceil((x1 - x0) / h - 1e-12)))
    for _ in range(n):
        hh = min(h, x1 - x)
        h2 = hh / 2
        k10 = fp
        k11 = fpp
        k12 = b * fp * fp - a * f * fpp
        a0 = f + h2 * k10
        a1 = fp + h2 * k11
        a2 = fpp + h2 * k12
        k20 = a1
        k21 = a2
        k22 = b * a1 * a1 - a * a0 * a2
        a0 = f + h2 * k20
        a1 = fp + h2 * k21
        a2 = fpp + h2 * k22
        k30 = a1
        k31 = a2
        k32 = b * a1 * a1 - a * a0 * a2
        a0 = f + hh * k30
        a1 = fp + hh * k31
        a2 = fpp + hh * k32
        k40 = a1
        k41 = a2
        k42 = b * a1 * a1 - a * a0 * a2
        h6 = hh / 6
        f = f + h6 * (k10 + 2 * k20 + 2 * k30 + k40)
        fp = fp + h6 * (k11 + 2 * k21 + 2 * k31 + k41)
        fpp = fpp + h6 * (k12 + 2 * k22 + 2 * k32 + k42)
        x += hh
        if not (abs(f) <= _BOUND and abs(fp) <= _BOUND and abs(fpp) <= _BOUND):
            return x, (f, fp, fpp), False
    return x, (f, fp, fpp), True


def _probe_tf(u, up, x0, x1, h):
    copysign, sqrt = math.copysign, math.sqrt
    x = x0
    n = max(1, int(math.ceil((x1 - x0) / h - 1e-12)))
    for _ in range(n):
        hh = min(h, x1 - x)
        h2 = hh / 2
        k10 = up
        k11 = copysign(abs(u) ** 1.5, u) / sqrt(x)
        xm = x + h2
        a0 = u + h2 * k10
        a1 = up + h2 * k11
        k20 = a1
        k21 = copysign(abs(a0) ** 1.5, a0) / sqrt(xm)
        a0 = u + h2 * k20
        a1 = up + h2 * k21
        k30 = a1
        k31 = copysign(abs(a0) ** 1.5, a0) / sqrt(xm)
        xe = x + hh
        a0 = u + hh * k30
        a1 = up + hh * k31
        k40 = a1
        k41 = copysign(abs(a0) ** 1.5, a0) / sqrt(xe)
        h6 = hh / 6
        u = u + h6 * (k10 + 2 * k20 + 2 * k30 + k40)
        up = up + h6 * (k11 + 2 * k21 + 2 * k31 + k41)
        x += hh
        if not (abs(u) <= _BOUND and abs(up) <= _BOUND):
            return x, (u, up), False
    return x, (u, up), True


def _compress(v):
    return math.copysign(math.log1p(abs(v)), v)


def _refine(fun, lo, hi, flo, fhi, tol, maxit=100):
    """False position with bracket retention (Illinois) on a sign change."""
    if (flo < 0) == (fhi < 0):
        raise OracleError("refinement bracket does not straddle a sign change")
    side = 0
    for _ in range(maxit):
        denom = fhi - flo
        x = (lo * fhi - hi * flo) / denom if denom != 0 else 0.5 * (lo + hi)
        if not (min(lo, hi) < x < max(lo, hi)):
            x = 0.5 * (lo + hi)
        fx = fun(x)
        if fx == 0 or abs(hi - lo) <= tol * (1 + abs(x)):
            return x
        if (fx < 0) == (flo < 0):
            lo, flo = x, fx
            if side == -1:
                fhi /= 2
            side = -1
        else:
            hi, fhi = x, fx
            if side == 1:
                flo /= 2
            side = 1
    raise OracleError("slope iteration did not converge in %d steps" % maxit)


def _upper_root(mis_scan, mis_full, lo, hi, tol):
    """Topmost zero of the mismatch in (lo, hi); see the module docstring."""
    nscan = _SCAN_POINTS

    def full_pair_refine(a, b):
        fa = mis_full(a)
        fb = mis_full(b)
        ds = (hi - lo) / nscan
        for _ in range(3):
            if (fa < 0) != (fb < 0):
                break
            a = max(lo, a - ds)
            b = min(hi, b + ds)
            fa = mis_full(a)
            fb = mis_full(b)
        if (fa < 0) == (fb < 0):
            return None
        return _refine(mis_full, a, b, fa, fb, tol)

    ss = [lo + (hi - lo) * i / nscan for i in range(nscan + 1)]
    f_above = mis_scan(ss[nscan])
    if f_above < 0:
        raise OracleError("far-field mismatch is not positive at the top of the bracket")
    for i in range(nscan - 1, -1, -1):
        fi = mis_scan(ss[i])
        if fi == 0 or (fi < 0) != (f_above < 0):
            r = full_pair_refine(ss[i], ss[i + 1])
            if r is not None:
                return r
        elif fi > f_above and i + 2 <= nscan:
            # values rising as s falls: scan minimum at ss[i+1]; hunt for a
            # dip narrower than the scan grid inside (ss[i], ss[i+2])
            xa, xb, xc = ss[i], ss[i + 1], ss[i + 2]
            fxb = f_above
            neg = None
            g = 0.5 * (3.0 - math.sqrt(5.0))
            for _ in range(60):
                if (xb - xa) > (xc - xb):
                    xm = xb - g * (xb - xa)
                else:
                    xm = xb + g * (xc - xb)
                fm = mis_scan(xm)
                if fm < 0:
                    neg = xm
                    break
                if fm < fxb:
                    if xm < xb:
                        xc = xb
                    else:
                        xa = xb
                    xb, fxb = xm, fm
                else:
                    if xm < xb:
                        xa = xm
                    else:
                        xc = xm
                if xc - xa < 1e-11 * (1 + abs(xb)):
                    break
            if neg is not None:
                up = xc if xc > neg else ss[i + 2]
                r = full_pair_refine(neg, up)
                if r is not None:
                    return r
        f_above = fi
    raise OracleError("no far-field root found inside the bracket")


def _tf_launch(s, x0):
    """Series state (y, y') at small x0: y = 1 + s x + (4/3) x^{3/2} + (2s/5) x^{5/2}."""
    r = math.sqrt(x0)
    return (1.0 + s * x0 + (4.0 / 3.0) * x0 * r + (2.0 * s / 5.0) * x0 * x0 * r,
            s + 2.0 * r + s * x0 * r)


def _fluid_rhs(params):
    b1, b2, b3 = params.b1, params.b2, params.b3

    def rhs(x, y):
        f, fp = y
        return (fp, (b2 * f * fp * fp + b3 * f) / (1.0 + b1 * fp * fp))
    return rhs


def _cone_rhs(params):
    a = (params.lam + 5.0) / 2.0
    b = (2.0 * params.lam + 1.0) / 3.0

    def rhs(x, y):
        f, fp, fpp = y
        return (fp, fpp, b * fp * fp - a * f * fpp)
    return rhs


def _tf_rhs(x, y):
    u, up = y
    return (up, math.copysign(abs(u) ** 1.5, u) / math.sqrt(x))


def shoot(problem, cfg=None, launch_x0=1e-6):
    """Reference initial slope and trajectory for one model problem.

    problem is a FluidParams, ConeParams, or ThomasFermiProblem instance.
    Returns (slope, (abscissas, states)); states columns are the integrated
    components (f, f') / (f, f', f'') / (y, y').  The Thomas-Fermi problem
    launches from the small-x series at launch_x0 (graded steps carry it to
    0.05, uniform steps onward) and imposes its far-field condition at 30;
    the other problems impose theirs at cfg.z_max.
    """
    if cfg is None:
        cfg = ShootConfig()
    if isinstance(problem, FluidParams):
        rhs = _fluid_rhs(problem)
        lo, hi = cfg.bracket if cfg.bracket is not None else (-2.0, 0.0)

        def mismatch(h):
            def mis(s):
                x, y, ok = _probe_fluid(problem, 1.0, s, 0.0, cfg.z_max, h)
                return _compress(y[0] if ok else math.copysign(_BOUND, y[0]))
            return mis

        slope = _upper_root(mismatch(2.0 * cfg.step), mismatch(cfg.step), lo, hi,
                            cfg.secant_tol)
        traj = rk4_integrate(rhs, (1.0, slope), 0.0, cfg.z_max, cfg.step)
        return slope, traj
    if isinstance(problem, ConeParams):
        rhs = _cone_rhs(problem)
        lo, hi = cfg.bracket if cfg.bracket is not None else (0.0, 2.0)

        def mismatch(h):
            def mis(s):
                x, y, ok = _probe_cone(problem, 0.0, s, -1.0, 0.0, cfg.z_max, h)
                return _compress(y[1] if ok else math.copysign(_BOUND, y[1]))
            return mis

        slope = _upper_root(mismatch(2.0 * cfg.step), mismatch(cfg.step), lo, hi,
                            cfg.secant_tol)
        traj = rk4_integrate(rhs, (0.0, slope, -1.0), 0.0, cfg.z_max, cfg.step)
        return slope, traj
    if isinstance(problem, ThomasFermiProblem):
        if not (0 < launch_x0 < _TF_PRELUDE_END):
            raise ConfigurationError("launch_x0 must sit in (0, %g)" % _TF_PRELUDE_END)
        lo, hi = cfg.bracket if cfg.bracket is not None else (-2.0, 0.0)

        def mismatch(h):
            def mis(s):
                y = _tf_launch(s, launch_x0)
                x, y, ok = _rk4_graded(_tf_rhs, y, launch_x0, _TF_PRELUDE_END,
                                       _TF_PRELUDE_STEPS)
                if ok:
                    x, y, ok = _probe_tf(y[0], y[1], _TF_PRELUDE_END,
                                         _TF_FAR_FIELD, h)
                return _compress(y[0] if ok else math.copysign(_BOUND, y[0]))
            return mis

        slope = _upper_root(mismatch(2.0 * cfg.step), mismatch(cfg.step), lo, hi,
                            cfg.secant_tol)
        y = _tf_launch(slope, launch_x0)
        x, y, ok = _rk4_graded(_tf_rhs, y, launch_x0, _TF_PRELUDE_END,
                               _TF_PRELUDE_STEPS)
        if not ok:
            raise OracleError("converged slope still blows up in the launch region")
        traj = rk4_integrate(_tf_rhs, y, _TF_PRELUDE_END, _TF_FAR_FIELD, cfg.step)
        return slope, traj
    raise ConfigurationError("unknown problem kind: %r" % (problem,))
