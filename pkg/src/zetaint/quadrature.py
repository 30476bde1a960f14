"""Adaptive Gauss-Kronrod quadrature with breakpoints, tail bounds and
Cauchy principal values.

Integrands are called with a 1-d array of abscissae and must return an
array of the same shape; every refinement round evaluates all new panels in
one call, so an expensive vectorised integrand (zeta on a few thousand
points) costs a handful of calls rather than thousands.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonConvergent, NotSimplePole, UnsupportedKernel

# Kronrod abscissae on [0, 1] (positive half) and weights, QUADPACK qk15
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])
# full 15-point rule on [-1, 1]
NODES = np.concatenate((-_XGK[:-1], _XGK[::-1]))
KRONROD = np.concatenate((_WGK[:-1], _WGK[::-1]))
GAUSS = np.zeros(15)
GAUSS[1:7:2] = _WG[:3]
GAUSS[7] = _WG[3]
GAUSS[9:15:2] = _WG[2::-1]

_EPS = np.finfo(float).eps
MAX_DEPTH = 60


@dataclass
class IntegrationResult:
    value: float
    error_estimate: float
    evaluations: int
    breakpoints_used: list = field(default_factory=list)
    tail_bound: float = 0.0

    def __add__(self, other: "IntegrationResult") -> "IntegrationResult":
        return IntegrationResult(
            self.value + other.value,
            self.error_estimate + other.error_estimate,
            self.evaluations + other.evaluations,
            sorted(set(self.breakpoints_used) | set(other.breakpoints_used)),
            self.tail_bound + other.tail_bound,
        )

    def scaled(self, c: float) -> "IntegrationResult":
        return IntegrationResult(c * self.value, abs(c) * self.error_estimate,
                                 self.evaluations, list(self.breakpoints_used), abs(c) * self.tail_bound)


@dataclass(frozen=True)
class TailBound:
    t_cut: float
    bound: float


@dataclass(frozen=True)
class KernelSpec:
    """Envelope |kernel(t)| <= K / t**decay for t >= t_cut, with the
    integrand factor growing at most like A + B ln t."""

    name: str
    K: float = 1.0
    decay: float = 3.0
    A: float = 2.0
    B: float = 1.0


def _smooth(u):
    """Quintic endpoint map [0,1] -> [0,1] and its derivative 30 u^2 (1-u)^2."""
    return u * u * u * (10 - 15 * u + 6 * u * u), 30 * u * u * (1 - u) ** 2


def _rule(values: np.ndarray, half: np.ndarray):
    """Kronrod estimate and QUADPACK error estimate for rows of 15 values."""
    resk = values @ KRONROD
    resg = values @ GAUSS
    resabs = np.abs(values) @ KRONROD
    resasc = np.abs(values - 0.5 * resk[:, None]) @ KRONROD
    err = np.abs((resk - resg) * half)
    resasc = resasc * half
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200 * err / resasc) ** 1.5)
    err = np.where((resasc != 0) & (err != 0), scaled, err)
    floor = 50 * _EPS * resabs * half
    return resk * half, np.maximum(err, floor), floor


def integrate_adaptive(f, a: float, b: float, breakpoints=(), tol: float = 1e-10,
                       smooth_ends: bool = False, max_depth: int = MAX_DEPTH,
                       min_panels: int = 1) -> IntegrationResult:
    """Integrate f over [a, b], splitting at ``breakpoints`` first.

    Global adaptive bisection: each round bisects the panels with the
    largest error estimates until the remaining ones sum to tol/4, and
    stops once the summed estimate is <= tol, or once everything left
    above tol/2 is rounding noise that bisection cannot reduce.  With ``smooth_ends`` every
    piece between breakpoints is pulled back through a quintic map that
    flattens the integrand at both ends, which tames logarithmic endpoint
    singularities.
    """
    if not a < b:
        raise ValueError("integrate_adaptive needs a < b")
    bps = np.unique(np.asarray(breakpoints, dtype=float))
    if bps.size and (bps[0] <= a or bps[-1] >= b):
        raise ValueError("breakpoints must lie strictly inside (a, b)")
    edges = np.concatenate(([a], bps, [b]))
    lo_edge, width = edges[:-1], np.diff(edges)
    npieces = lo_edge.size

    # panels are stored in the unit coordinate of their piece
    piece = np.repeat(np.arange(npieces), min_panels)
    k = np.tile(np.arange(min_panels), npieces)
    ulo = k / min_panels
    uhi = (k + 1) / min_panels
    depth = np.zeros(ulo.size, dtype=int)
    evals = 0

    def evaluate(piece, ulo, uhi):
        nonlocal evals
        c = 0.5 * (ulo + uhi)
        h = 0.5 * (uhi - ulo)
        u = c[:, None] + h[:, None] * NODES[None, :]
        w = width[piece][:, None]
        if smooth_ends:
            s, ds = _smooth(u)
            x = lo_edge[piece][:, None] + w * s
            jac = w * ds
        else:
            x = lo_edge[piece][:, None] + w * u
            jac = np.broadcast_to(w, u.shape)
        if smooth_ends:
            # nodes that round onto a piece edge carry weight ~u^2; drop them
            # rather than evaluate a log singularity exactly at the edge
            lo = lo_edge[piece][:, None]
            at_edge = (x == lo) | (x == lo + w)
            fx = np.zeros(x.shape)
            inner = ~at_edge
            fx[inner] = np.asarray(f(x[inner]), dtype=float)
        else:
            fx = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
        evals += x.size
        return _rule(fx * jac, h)

    val, err, floor = evaluate(piece, ulo, uhi)
    for _ in range(10 * max_depth + 100):
        total = float(err.sum())
        if total <= tol:
            break
        # panels sitting on their rounding floor gain nothing from bisection
        live = err > 1.5 * floor
        live_total = float(err[live].sum())
        if live_total <= 0.5 * tol:
            break
        order = np.nonzero(live)[0][np.argsort(err[live])[::-1]]
        rest = live_total - np.cumsum(err[order])
        nsplit = min(int(np.searchsorted(-rest, -0.25 * tol)) + 1, order.size)
        split = order[:nsplit]
        if np.any(depth[split] >= max_depth):
            raise NonConvergent(
                f"subdivision depth {max_depth} reached with error {total:.3e} > tol {tol:.3e}")
        mid = 0.5 * (ulo[split] + uhi[split])
        np_ = np.concatenate((piece[split], piece[split]))
        nlo = np.concatenate((ulo[split], mid))
        nhi = np.concatenate((mid, uhi[split]))
        nd = np.concatenate((depth[split], depth[split])) + 1
        nv, ne, nf = evaluate(np_, nlo, nhi)
        keep = np.ones(ulo.size, dtype=bool)
        keep[split] = False
        piece = np.concatenate((piece[keep], np_))
        ulo = np.concatenate((ulo[keep], nlo))
        uhi = np.concatenate((uhi[keep], nhi))
        depth = np.concatenate((depth[keep], nd))
        val = np.concatenate((val[keep], nv))
        err = np.concatenate((err[keep], ne))
        floor = np.concatenate((floor[keep], nf))
    else:
        raise NonConvergent(f"no convergence, error {float(err.sum()):.3e}")
    # deterministic summation order: by piece, then by position
    order = np.lexsort((ulo, piece))
    value = math.fsum(val[order])
    return IntegrationResult(value, float(err.sum()), evals, [float(x) for x in bps])


def integrate_semi_infinite(f, a: float, tol: float = 1e-10) -> IntegrationResult:
    """Integrate f over [a, inf) (a > 0) through the map x = a / u."""
    if not a > 0:
        raise ValueError("semi-infinite map needs a > 0")

    def g(u):
        x = a / u
        return f(x) * a / (u * u)

    return integrate_adaptive(g, 0.0, 1.0, tol=tol)


def _power_tail(T: float, m: float):
    """int_T^inf t^-m dt and int_T^inf ln(t) t^-m dt for m > 1."""
    q = m - 1.0
    base = T ** (-q)
    return base / q, base * (math.log(T) / q + 1.0 / (q * q))


def improper_tail_bound(kernel: KernelSpec, t_cut: float) -> TailBound:
    """Bound on |int_{t_cut}^inf kernel * h| with |h| <= A + B ln t.

    For cubic decay this is K [A/(2T^2) + B (ln T/(2T^2) + 1/(4T^2))].
    """
    if kernel.decay < 3:
        raise UnsupportedKernel(f"kernel {kernel.name!r} decays like t^-{kernel.decay}, slower than t^-3")
    if t_cut < 100:
        raise ValueError("tail bounds are only offered for t_cut >= 100")
    p0, p1 = _power_tail(t_cut, kernel.decay)
    return TailBound(t_cut, kernel.K * (kernel.A * p0 + kernel.B * p1))


def integrate_principal_value(f, a: float, b: float, pole: float, tol: float = 1e-10,
                              check: bool = True) -> IntegrationResult:
    """Cauchy principal value of int_a^b f across a simple pole.

    The symmetric part is integrated as int_0^r [f(pole+u) + f(pole-u)] du,
    where the 1/u singularities cancel, plus the leftover one-sided piece.
    With ``check`` the result is compared with a Richardson extrapolation of
    the directly truncated integrals at eps = 1e-3 and 1e-4 (scaled down if
    the interval is short).
    """
    if not a < pole < b:
        raise ValueError("need a < pole < b")
    r = min(pole - a, b - pole)

    def paired(u):
        return f(pole + u) + f(pole - u)

    probe = np.array([1e-2, 1e-3, 1e-4, 1e-5]) * r
    gp = np.abs(paired(probe))
    if not np.all(np.isfinite(gp)) or gp[-1] > 10 * (1 + gp[0]):
        raise NotSimplePole(f"paired integrand grows near the pole {pole}: {gp}")
    res = integrate_adaptive(paired, 0.0, r, tol=0.5 * tol)
    if pole - a > r:
        res = res + integrate_adaptive(f, a, pole - r, tol=0.5 * tol)
    elif b - pole > r:
        res = res + integrate_adaptive(f, pole + r, b, tol=0.5 * tol)
    res.breakpoints_used = [float(pole)]
    if check:
        e1, e2 = min(1e-3, r / 10), min(1e-4, r / 100)

        def truncated(eps):
            left = integrate_adaptive(f, a, pole - eps, tol=tol)
            right = integrate_adaptive(f, pole + eps, b, tol=tol)
            return left.value + right.value, left.error_estimate + right.error_estimate

        v1, d1 = truncated(e1)
        v2, d2 = truncated(e2)
        rich = (e1 * v2 - e2 * v1) / (e1 - e2)
        # O(eps^2) remainder of the linear extrapolation
        slope = abs(paired(np.array([e1]))[0] - paired(np.array([e2]))[0]) / (e1 - e2)
        allowed = 10 * tol + 2 * (d1 + d2) * e1 / (e1 - e2) + slope * e1 * e1
        if abs(rich - res.value) > allowed:
            raise NotSimplePole(
                f"Richardson value {rich!r} disagrees with paired value {res.value!r} "
                f"by {abs(rich - res.value):.3e} (allowed {allowed:.3e})")
    return res
