"""Double-precision zeta-family evaluation.

Everything here is built on Euler-Maclaurin summation

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{k=1..p} B_2k/(2k)! s(s+1)...(s+2k-2) N^(1-s-2k) + R_p

with Backlund's remainder bound |R_p| <= |s+2p+1|/(sigma+2p+1) |T_{p+1}|.
The cutoff N and the correction order p are chosen per batch so that the
bound meets the requested tolerance.  The derivative is obtained from the
term-wise differentiated sum; its remainder is bounded with a Cauchy
estimate on a circle of radius 1/2.

The array functions (``zeta_values`` and friends) are what the quadrature
integrands call; the scalar functions wrap them with the argument checks
and error reporting.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import (
    DomainError,
    LogOfZero,
    PoleAtOne,
    ToleranceUnachievable,
    ZeroDenominator,
)

EULER_GAMMA = 0.57721566490153286060651209008240243
LOG_PI = math.log(math.pi)
LOG_2PI = math.log(2.0 * math.pi)

_EPS = np.finfo(float).eps
_MAX_ORDER = 60
# elements per (points x terms) block, keeps temporaries around 32 MB
_BLOCK = 1 << 21


@dataclass(frozen=True)
class MathConstants:
    euler_gamma: float = EULER_GAMMA
    pi: float = math.pi


CONSTANTS = MathConstants()


@dataclass(frozen=True)
class ComplexPoint:
    """A point ``re + i*im``; both parts must be finite."""

    re: float
    im: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise DomainError(f"non-finite point ({self.re}, {self.im})")

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def conjugate(self) -> "ComplexPoint":
        return ComplexPoint(self.re, -self.im)

    @classmethod
    def of(cls, s) -> "ComplexPoint":
        if isinstance(s, ComplexPoint):
            return s
        if isinstance(s, tuple):
            return cls(float(s[0]), float(s[1]))
        z = complex(s)
        return cls(z.real, z.imag)


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_error_bound: float


def _as_complex(s) -> complex:
    return ComplexPoint.of(s).value


# --------------------------------------------------------------------------
# Bernoulli data


@lru_cache(maxsize=None)
def _bernoulli_fractions(nmax: int) -> tuple:
    """Exact B_0..B_nmax (B_1 = -1/2) by the Akiyama-Tanigawa algorithm."""
    out = []
    a = [Fraction(0)] * (nmax + 1)
    for m in range(nmax + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    out[1] = -out[1]
    return tuple(out)


@lru_cache(maxsize=None)
def _em_coefficients() -> np.ndarray:
    """c_k = B_2k / (2k)! for k = 0.._MAX_ORDER+1 (index 0 unused)."""
    b = _bernoulli_fractions(2 * _MAX_ORDER + 2)
    c = [0.0]
    for k in range(1, _MAX_ORDER + 2):
        c.append(float(b[2 * k] / math.factorial(2 * k)))
    return np.array(c)


@lru_cache(maxsize=None)
def _stirling_coefficients(nterms: int = 12) -> np.ndarray:
    b = _bernoulli_fractions(2 * nterms)
    return np.array([float(b[2 * k] / (2 * k * (2 * k - 1))) for k in range(1, nterms + 1)])


# --------------------------------------------------------------------------
# Euler-Maclaurin planning and summation


def _plan(s: np.ndarray, tol: float, deriv: bool = False):
    """Pick (N, p) for a batch of points; returns (N, p, truncation_bound).

    The bound is evaluated on an envelope of the batch: the smallest real
    part and the largest |s + j| over all points.
    """
    r = 0.5 if deriv else 0.0
    sig = float(np.min(s.real)) - r
    env = _envelope(s, 2 * _MAX_ORDER + 4) + r
    absre = np.abs(s.real)
    logc = np.log(np.abs(_em_coefficients()[1:]))  # k = 1.._MAX_ORDER+1
    logprod = np.cumsum(np.log(np.maximum(env, 1e-300)))  # sum_{i<=m} log env_i
    tmax = float(np.max(np.abs(s.imag))) + r
    smax = float(np.max(absre)) + tmax

    best = None
    for c in (0.3, 0.45, 0.7, 1.0, 1.5, 2.5, 4.0, 8.0):
        N = max(10, int(math.ceil(c * smax)) + 2)
        logN = math.log(N)
        for p in range(1, _MAX_ORDER + 1):
            if sig + 2 * p + 1 <= 0:
                continue
            # next term T_{p+1}: coefficient c_{p+1}, product over j = 0..2p
            lb = (logc[p] + logprod[2 * p] + (-sig - 2 * p - 1) * logN
                  + math.log(env[2 * p + 1] / (sig + 2 * p + 1)))
            if deriv:
                lb -= math.log(r)
            if lb <= math.log(tol):
                cost = N + 6 * p
                if best is None or cost < best[0]:
                    best = (cost, N, p, math.exp(lb))
                break
        if best is not None and N > 2 * best[1]:
            break
    if best is None:
        raise ToleranceUnachievable(
            f"Euler-Maclaurin cannot certify tol={tol:g} near s={s.flat[0]!r}")
    return best[1], best[2], best[3]


def _envelope(s: np.ndarray, m: int) -> np.ndarray:
    """Upper bounds on max |s + j| over the batch, j = 0..m-1."""
    j = np.arange(m, dtype=float)
    lo, hi = float(np.min(s.real)), float(np.max(s.real))
    tmax = float(np.max(np.abs(s.imag)))
    return np.sqrt(np.maximum((lo + j) ** 2, (hi + j) ** 2) + tmax * tmax)


def _rounding_estimate(s: np.ndarray, N: int) -> np.ndarray:
    """Heuristic floating-point error of the direct sum (random-walk model)."""
    sig = s.real
    logN = math.log(N)
    with np.errstate(divide="ignore", invalid="ignore"):
        s1 = np.where(np.abs(sig - 1) < 1e-8, logN, (np.exp((1 - sig) * logN) - 1) / (1 - sig))
        s2 = np.where(np.abs(2 * sig - 1) < 1e-8, logN, (np.exp((1 - 2 * sig) * logN) - 1) / (1 - 2 * sig))
    s1 = 1 + np.abs(s1)
    s2 = 1 + np.abs(s2)
    return _EPS * (4 * s1 + np.abs(s.imag) * logN * np.sqrt(s2))


def _em_eval(s: np.ndarray, N: int, p: int, deriv: bool = False):
    """Euler-Maclaurin sum for an array of points; returns zeta (and zeta')."""
    s = np.asarray(s, dtype=complex)
    logn = np.log(np.arange(1, N, dtype=float))
    zsum = np.empty(s.shape, dtype=complex)
    dsum = np.empty(s.shape, dtype=complex) if deriv else None
    flat = s.ravel()
    zf = zsum.ravel()
    df = dsum.ravel() if deriv else None
    step = max(1, _BLOCK // max(N, 1))
    for i in range(0, flat.size, step):
        blk = flat[i:i + step]
        e = np.exp(-np.multiply.outer(blk, logn))
        zf[i:i + step] = e.sum(axis=1)
        if deriv:
            df[i:i + step] = -(e @ logn)
    head = _em_tail(s, N, p, deriv)
    if deriv:
        return zsum + head[0], dsum + head[1]
    return zsum + head


def _em_tail(s: np.ndarray, N: int, p: int, deriv: bool = False):
    """Integral, half-term and Bernoulli corrections at cutoff N."""
    c = _em_coefficients()
    logN = math.log(N)
    ns = np.exp(-s * logN)
    sm1 = s - 1.0
    q = c[1] * s / N
    acc = q.copy()
    if deriv:
        dq = np.full(s.shape, c[1] / N, dtype=complex)
        dacc = dq - logN * q
    for k in range(1, p):
        u = s + (2 * k - 1)
        v = s + 2 * k
        ratio = c[k + 1] / c[k] / (N * N)
        if deriv:
            dq = ratio * (dq * u * v + q * (u + v))
        q = ratio * q * u * v
        acc = acc + q
        if deriv:
            dacc = dacc + dq - logN * q
    z = N * ns / sm1 + 0.5 * ns + ns * acc
    if not deriv:
        return z
    dz = N * ns * (-logN / sm1 - 1.0 / (sm1 * sm1)) - 0.5 * logN * ns + ns * dacc
    return z, dz


def zeta_values(s, tol: float = 1e-12, deriv: bool = False):
    """Vectorised zeta on an array of points.

    Returns ``(values, bounds)`` or ``(values, derivs, bounds, dbounds)``
    when ``deriv`` is set.  No point may equal 1.
    """
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    if np.any(s == 1.0):
        raise PoleAtOne("zeta has a pole at s = 1")
    if s.size == 0:
        empty = np.empty(0, dtype=complex)
        return (empty, np.empty(0)) if not deriv else (empty, empty, np.empty(0), np.empty(0))
    N, p, tb = _plan(s, tol)
    if deriv:
        Nd, pd, tbd = _plan(s, tol, deriv=True)
        N, p = max(N, Nd), max(p, pd)
        tb = _plan_bound_at(s, N, p)
        tbd = _plan_bound_at(s, N, p, deriv=True)
        z, dz = _em_eval(s, N, p, deriv=True)
        rnd = _rounding_estimate(s, N) + 4 * _EPS * np.abs(z)
        return z, dz, tb + rnd, tbd + rnd * math.log(N) + 4 * _EPS * np.abs(dz)
    z = _em_eval(s, N, p)
    return z, tb + _rounding_estimate(s, N) + 4 * _EPS * np.abs(z)


def _plan_bound_at(s: np.ndarray, N: int, p: int, deriv: bool = False) -> float:
    r = 0.5 if deriv else 0.0
    sig = float(np.min(s.real)) - r
    env = _envelope(s, 2 * p + 2) + r
    lb = (math.log(abs(_em_coefficients()[p + 1])) + np.sum(np.log(env[:2 * p + 1]))
          + (-sig - 2 * p - 1) * math.log(N) + math.log(env[2 * p + 1] / (sig + 2 * p + 1)))
    if deriv:
        lb -= math.log(r)
    return float(math.exp(lb))


def zeta_grid(t, sigmas, tol: float = 1e-12) -> np.ndarray:
    """zeta(sigma_j + i t_i) on a tensor grid, shape (len(t), len(sigmas)).

    The Dirichlet part factorises as n^-it * n^-sigma, so the bulk of the
    work is one complex-by-real matrix product.
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    sigmas = np.atleast_1d(np.asarray(sigmas, dtype=float))
    pts = sigmas[None, :] + 1j * t[:, None]
    if np.any(pts == 1.0):
        raise PoleAtOne("zeta has a pole at s = 1")
    corners = np.array([sigmas.min() + 1j * np.max(np.abs(t)), sigmas.max() + 1j * np.max(np.abs(t)),
                        sigmas.min() + 0j, sigmas.max() + 0j])
    N, p, _ = _plan(corners, tol)
    logn = np.log(np.arange(1, N, dtype=float))
    real_part = np.exp(-np.multiply.outer(logn, sigmas))  # (N-1, S)
    out = np.empty(pts.shape, dtype=complex)
    step = max(1, _BLOCK // max(N, 1))
    for i in range(0, t.size, step):
        tb = t[i:i + step]
        phase = np.exp(-1j * np.multiply.outer(tb, logn))  # (B, N-1)
        out[i:i + step] = phase @ real_part
    out += _em_tail(pts, N, p)
    return out


def zeta_real(x, tol: float = 1e-13) -> np.ndarray:
    """zeta on real arguments (x != 1), vectorised, real output."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty(x.shape)
    big = x >= 40.0
    if np.any(big):
        xb = x[big]
        # sum_{n>=2} n^-x converges in a handful of terms here
        acc = np.zeros_like(xb)
        for n in range(2, 12):
            acc += np.exp(-xb * math.log(n))
        out[big] = 1.0 + acc
    if np.any(~big):
        out[~big] = zeta_values(x[~big].astype(complex), tol)[0].real
    return out


def log_zeta_minus_one_real(x) -> np.ndarray:
    """ln zeta(x) for large real x, accurate even when zeta(x) - 1 ~ 2^-x."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    acc = np.zeros_like(x)
    for n in range(2, 12):
        acc += np.exp(-x * math.log(n))
    return np.log1p(acc)


def log_zeta_pole_product_real(x) -> np.ndarray:
    """ln(zeta(x) (x - 1)) for real x > 0, including x = 1 where it is 0.

    With u = x - 1 the Euler-Maclaurin form gives
    u zeta(x) = N^-u + u R(x), so the logarithm is
    log1p(expm1(-u ln N) + u R) and keeps full relative accuracy as u -> 0.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x <= 0):
        raise DomainError("log_zeta_pole_product_real requires x > 0")
    out = np.empty(x.shape)
    big = x >= 40.0
    if np.any(big):
        out[big] = np.log(x[big] - 1.0) + log_zeta_minus_one_real(x[big])
    small = ~big
    if np.any(small):
        xs = x[small]
        N, p = 20, 20
        logN = math.log(N)
        n = np.arange(1, N, dtype=float)
        head = np.exp(-np.multiply.outer(xs, np.log(n))).sum(axis=1)
        c = _em_coefficients()
        q = c[1] * xs / N
        acc = q.copy()
        for k in range(1, p):
            q = (c[k + 1] / c[k] / (N * N)) * q * (xs + 2 * k - 1) * (xs + 2 * k)
            acc += q
        rest = head + np.exp(-xs * logN) * (0.5 + acc)
        u = xs - 1.0
        out[small] = np.log1p(np.expm1(-u * logN) + u * rest)
    return out


# --------------------------------------------------------------------------
# Scalar public API


def zeta(s, tol: float = 1e-12) -> EvalResult:
    """Riemann zeta at ``s`` with a certified truncation bound.

    Raises :class:`PoleAtOne` at ``s = 1`` and :class:`ToleranceUnachievable`
    when the requested ``tol`` is below the double-precision rounding floor
    at this height.
    """
    z = _as_complex(s)
    if z == 1:
        raise PoleAtOne("zeta has a pole at s = 1")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if abs(z.imag) > 1e6:
        raise DomainError("|Im s| > 1e6 is outside the supported range")
    arr = np.array([z])
    # half the budget to truncation, the rest to rounding
    N, p, tb = _plan(arr, 0.5 * tol)
    rnd = float(_rounding_estimate(arr, N)[0])
    if rnd > 0.5 * tol:
        raise ToleranceUnachievable(
            f"rounding floor {rnd:.2e} exceeds tol={tol:g} at s={z}")
    val = complex(_em_eval(arr, N, p)[0])
    bound = tb + rnd + 4 * _EPS * abs(val)
    if bound > tol:
        raise ToleranceUnachievable(f"error bound {bound:.2e} exceeds tol={tol:g} at s={z}")
    return EvalResult(val, bound)


def log_abs_zeta(s, tol: float = 1e-12) -> float:
    """ln|zeta(s)|; raises :class:`LogOfZero` when |zeta| is not resolved."""
    r = zeta(s, tol)
    a = abs(r.value)
    if a <= r.abs_error_bound or a == 0.0:
        raise LogOfZero(f"|zeta(s)| = {a:.3e} is indistinguishable from 0 at s={_as_complex(s)}")
    return math.log(a)


def log_deriv_zeta(s, tol: float = 1e-12) -> EvalResult:
    """zeta'(s)/zeta(s) from the differentiated Euler-Maclaurin sum."""
    z = _as_complex(s)
    if z == 1:
        raise PoleAtOne("zeta has a pole at s = 1")
    if z.real <= 0:
        raise DomainError("log_deriv_zeta requires Re s > 0")
    v, dv, b, db = zeta_values(np.array([z]), tol, deriv=True)
    v, dv, b, db = complex(v[0]), complex(dv[0]), float(b[0]), float(db[0])
    if abs(v) <= b or v == 0:
        raise ZeroDenominator(f"zeta(s) vanishes numerically at s={z}")
    ratio = dv / v
    bound = (db + abs(ratio) * b) / (abs(v) - b)
    return EvalResult(ratio, bound)


def log_gamma(s):
    """Principal-branch log Gamma for Re s > 0 (scalar or array).

    Recurrence-shifts the argument until Re >= 10 and then applies the
    Stirling series with 12 Bernoulli terms.
    """
    scalar = np.ndim(s) == 0 and not isinstance(s, np.ndarray)
    if isinstance(s, (ComplexPoint, tuple)):
        s = _as_complex(s)
    z = np.atleast_1d(np.asarray(s, dtype=complex)).copy()
    if not np.all(np.isfinite(z)):
        raise DomainError("log_gamma of a non-finite argument")
    if np.any(z.real <= 0):
        raise DomainError("log_gamma requires Re s > 0")
    shift = np.zeros(z.shape, dtype=complex)
    while True:
        small = z.real < 10.0
        if not np.any(small):
            break
        shift[small] += np.log(z[small])
        z[small] += 1.0
    coef = _stirling_coefficients()
    w = 1.0 / z
    w2 = w * w
    series = np.zeros(z.shape, dtype=complex)
    for c in coef[::-1]:
        series = series * w2 + c
    series *= w
    res = (z - 0.5) * np.log(z) - z + 0.5 * LOG_2PI + series - shift
    return complex(res[0]) if scalar else res


def riemann_siegel_theta(t):
    """theta(t) = Im log Gamma(1/4 + it/2) - (t/2) ln(pi)."""
    scalar = np.ndim(t) == 0
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(tt < 0):
        raise DomainError("riemann_siegel_theta requires t >= 0")
    val = log_gamma(0.25 + 0.5j * tt).imag - 0.5 * tt * LOG_PI
    return float(val[0]) if scalar else val


def hardy_z_values(t, tol: float = 1e-12) -> np.ndarray:
    """Hardy's Z on an array of ordinates (no realness check)."""
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    z, _ = zeta_values(0.5 + 1j * tt, tol)
    return (np.exp(1j * riemann_siegel_theta(tt)) * z).real


def hardy_z(t: float, tol: float = 1e-12) -> float:
    """Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it), checked to be real."""
    if t < 0:
        raise DomainError("hardy_z requires t >= 0")
    tt = np.array([float(t)])
    z, _ = zeta_values(0.5 + 1j * tt, tol)
    prod = complex(np.exp(1j * riemann_siegel_theta(tt))[0] * z[0])
    if abs(prod.imag) >= 1e-8 * (1 + abs(prod.real)):
        raise ToleranceUnachievable(
            f"Z({t}) has imaginary residue {prod.imag:.2e}; evaluation is unreliable")
    return prod.real
