"""Continuous argument of zeta along the polyline 2 -> 2+it -> b+it.

The vertical leg on Re s = 2 never needs unwrapping: there
Re zeta(2+it) >= 2 - zeta(2) > 0.35, so the continuous argument equals the
principal one.  All the work is on the horizontal leg, which is sampled on a
uniform grid and refined by bisecting every step whose phase increment
reaches pi/2.  Because each accepted increment is the principal argument of
a ratio of neighbouring samples, the final value is exactly
``Arg zeta(b+it) + 2*pi*k`` and does not drift with refinement.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, PathThroughZero, PoleAtOne, UnwrapInconsistent
from .zeta import ComplexPoint, riemann_siegel_theta, zeta_grid, zeta_values

ANCHOR = 2.0
MAX_STEP = math.pi / 2
ZERO_GUARD = 1e-9
DEFAULT_SAMPLES = 64


@dataclass
class PhasePath:
    anchor: ComplexPoint
    corner: ComplexPoint
    endpoint: ComplexPoint
    samples: list = field(default_factory=list)  # (ComplexPoint, accumulated arg)
    final_arg: float = 0.0


def _check(b: float, t: float):
    if not b > -2:
        raise DomainError("arg_zeta requires b > -2")
    if t < 0:
        raise DomainError("arg_zeta requires t >= 0")


def _refine_row(t: float, sig: np.ndarray, z: np.ndarray, tol: float, max_rounds: int = 60):
    """Bisect steps of one horizontal leg until every increment is < pi/2."""
    for _ in range(max_rounds):
        d = np.angle(z[1:] / z[:-1])
        bad = np.nonzero(np.abs(d) >= MAX_STEP)[0]
        if bad.size == 0:
            return sig, z, d
        mids = 0.5 * (sig[bad] + sig[bad + 1])
        if np.any(np.abs(sig[bad + 1] - sig[bad]) < 1e-13):
            raise PathThroughZero(f"cannot resolve the phase near {mids[0]} + {t}i")
        zm, _ = zeta_values(mids + 1j * t, tol)
        _guard(zm, mids, t)
        sig = np.insert(sig, bad + 1, mids)
        z = np.insert(z, bad + 1, zm)
    raise PathThroughZero(f"phase refinement did not settle at t = {t}")


def _guard(z, sig, t):
    small = np.abs(z) < ZERO_GUARD
    if np.any(small):
        where = np.atleast_1d(sig)[np.nonzero(small)[0][0]]
        raise PathThroughZero(f"sample {where} + {t}i lies on a zero of zeta; perturb t")


def arg_zeta_values(b: float, t, samples: int = DEFAULT_SAMPLES, tol: float = 1e-12) -> np.ndarray:
    """Continuous arg zeta(b + i t) for an array of ordinates t > 0."""
    b = float(b)
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if not b > -2:
        raise DomainError("arg_zeta requires b > -2")
    if np.any(t < 0):
        raise DomainError("arg_zeta requires t >= 0")
    out = np.empty(t.shape)
    zero_t = t == 0
    if np.any(zero_t):
        if b == 1.0:
            raise PoleAtOne("arg_zeta at the pole s = 1")
        # one-sided limit t -> 0+: the leg passes above the pole when b < 1
        out[zero_t] = 0.0 if b > 1 else -math.pi
    idx = np.nonzero(~zero_t)[0]
    if idx.size == 0:
        return out
    tt = t[idx]
    sig = np.linspace(ANCHOR, b, samples + 1)
    z = zeta_grid(tt, sig, tol)
    base = np.angle(z[:, 0])
    d = np.angle(z[:, 1:] / z[:, :-1])
    res = base + d.sum(axis=1)
    small = np.abs(z) < ZERO_GUARD
    if np.any(small):
        row = np.nonzero(small.any(axis=1))[0][0]
        raise PathThroughZero(f"sample on the path to {b} + {tt[row]}i lies on a zero of zeta")
    rows = np.nonzero(np.any(np.abs(d) >= MAX_STEP, axis=1))[0]
    for r in rows:
        _, _, dr = _refine_row(tt[r], sig.copy(), z[r].copy(), tol)
        res[r] = base[r] + dr.sum()
    out[idx] = res
    return out


def arg_zeta(b: float, t: float, tol: float = 1e-12, samples: int = DEFAULT_SAMPLES) -> float:
    """arg zeta(b + it) by continuous variation from 2 through 2 + it."""
    _check(b, t)
    return float(arg_zeta_values(b, np.array([t]), samples=samples, tol=tol)[0])


def phase_path(b: float, t: float, samples: int = DEFAULT_SAMPLES, tol: float = 1e-12) -> PhasePath:
    """Full record of the tracked path, both legs sampled and refined."""
    _check(b, t)
    path = PhasePath(ComplexPoint(ANCHOR, 0.0), ComplexPoint(ANCHOR, t), ComplexPoint(b, t))
    if t == 0 and b == ANCHOR:
        path.samples = [(path.anchor, 0.0)]
        return path
    acc = 0.0
    # vertical leg: fixed sigma = 2, variable t
    tv = np.linspace(0.0, t, samples + 1)
    zv, _ = zeta_values(ANCHOR + 1j * tv, tol)
    for _ in range(60):
        dv = np.angle(zv[1:] / zv[:-1])
        bad = np.nonzero(np.abs(dv) >= MAX_STEP)[0]
        if bad.size == 0:
            break
        mids = 0.5 * (tv[bad] + tv[bad + 1])
        zm, _ = zeta_values(ANCHOR + 1j * mids, tol)
        tv = np.insert(tv, bad + 1, mids)
        zv = np.insert(zv, bad + 1, zm)
    dv = np.angle(zv[1:] / zv[:-1])
    path.samples.append((path.anchor, 0.0))
    for tj, dj in zip(tv[1:], dv):
        acc += float(dj)
        path.samples.append((ComplexPoint(ANCHOR, float(tj)), acc))
    if t == 0 and b < 1:
        raise PoleAtOne("the horizontal leg at t = 0 runs through the pole")
    sig = np.linspace(ANCHOR, b, samples + 1)
    zh, _ = zeta_values(sig + 1j * t, tol)
    _guard(zh, sig, t)
    sig, zh, dh = _refine_row(t, sig, zh, tol)
    for sj, dj in zip(sig[1:], dh):
        acc += float(dj)
        path.samples.append((ComplexPoint(float(sj), t), acc))
    path.final_arg = acc
    return path


def counting_n(x: float, tol: float = 1e-12) -> float:
    """N(x) = 1 + theta(x)/pi + arg zeta(1/2 + ix)/pi.

    Counts the zeros with 0 < Im rho <= x.  The value comes back as a float
    that should sit on an integer; a distance above 1e-3 means the phase was
    mis-tracked and raises :class:`UnwrapInconsistent`.
    """
    if not x > 0:
        raise DomainError("counting_n requires x > 0")
    val = 1.0 + (riemann_siegel_theta(x) + arg_zeta(0.5, x, tol)) / math.pi
    if abs(val - round(val)) > 1e-3 or round(val) < 0:
        raise UnwrapInconsistent(f"N({x}) = {val!r} is not an integer")
    return val


def counting_n_values(x, tol: float = 1e-12) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=float))
    val = 1.0 + (riemann_siegel_theta(x) + arg_zeta_values(0.5, x, tol=tol)) / math.pi
    off = np.abs(val - np.round(val))
    if np.any(off > 1e-3):
        i = int(np.argmax(off))
        raise UnwrapInconsistent(f"N({x[i]}) = {val[i]!r} is not an integer")
    return val
