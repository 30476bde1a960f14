"""Critical-line zero ordinates: location, import, caching and count checks."""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from pathlib import Path

import numpy as np

from .argtrack import counting_n, counting_n_values
from .errors import (
    CountMismatch,
    DomainError,
    MissedZero,
    NotMonotone,
    ParseError,
    UnwrapInconsistent,
)
from .zeta import hardy_z_values, riemann_siegel_theta

MAX_HEIGHT = 1e5
# theta(t) is increasing beyond its minimum near t = 6.29; no zeros below 14
SCAN_START = 10.0
BLOCK = 24


class Source(str, Enum):
    computed = "computed"
    imported = "imported"
    hypothetical = "hypothetical"


@dataclass(frozen=True)
class ZeroOrdinate:
    t: float
    multiplicity: int = 1
    source: Source = Source.computed
    sigma: float = 0.5

    def __post_init__(self):
        if not self.t > 0:
            raise DomainError("zero ordinate must be positive")
        if self.multiplicity < 1:
            raise DomainError("multiplicity must be >= 1")
        if not 0.5 <= self.sigma < 1:
            raise DomainError("sigma must lie in [1/2, 1)")
        if self.source != Source.hypothetical and self.sigma != 0.5:
            raise DomainError("computed/imported zeros lie on the critical line")


@dataclass(frozen=True)
class ZeroTable:
    """Sorted critical-line ordinates, complete up to ``height``."""

    ordinates: tuple = ()
    height: float = 0.0

    def __post_init__(self):
        ts = [z.t for z in self.ordinates]
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise NotMonotone("ordinates must be strictly increasing")

    @classmethod
    def from_array(cls, t, height: float, source: Source = Source.computed) -> "ZeroTable":
        return cls(tuple(ZeroOrdinate(float(x), 1, source) for x in t), float(height))

    @cached_property
    def t(self) -> np.ndarray:
        return np.array([z.t for z in self.ordinates], dtype=float)

    def __len__(self):
        return len(self.ordinates)

    def count_upto(self, x: float) -> int:
        return int(np.searchsorted(self.t, x, side="right"))

    def upto(self, x: float) -> np.ndarray:
        return self.t[: self.count_upto(x)]


# --------------------------------------------------------------------------
# Gram points


def gram_points(t_lo: float, t_hi: float) -> np.ndarray:
    """All Gram points g_n (theta(g_n) = n*pi) in [t_lo, t_hi], t_lo >= 7."""
    n0 = math.ceil(riemann_siegel_theta(t_lo) / math.pi)
    n1 = math.floor(riemann_siegel_theta(t_hi) / math.pi)
    if n1 < n0:
        return np.empty(0)
    n = np.arange(n0, n1 + 1, dtype=float)
    # Newton on theta(g) = n*pi, theta'(t) ~ log(t / 2pi) / 2
    g = np.maximum(2 * math.pi * np.exp(1 + np.log(np.maximum(n, 1) / math.e)), t_lo)
    g = np.clip(2 * math.pi * (n + 0.125) / np.maximum(np.log(np.maximum(g, 8.0) / (2 * math.pi)), 0.2), t_lo, t_hi)
    for _ in range(60):
        f = riemann_siegel_theta(g) - n * math.pi
        dg = f / (0.5 * np.log(g / (2 * math.pi)))
        g = np.clip(g - dg, 7.0, None)
        if np.max(np.abs(dg)) < 1e-12 * max(1.0, float(np.max(g))):
            break
    return g[(g >= t_lo) & (g <= t_hi)]


# --------------------------------------------------------------------------
# zero search


def _sign_changes(grid: np.ndarray, z: np.ndarray):
    s = np.sign(z)
    return np.nonzero(s[:-1] * s[1:] < 0)[0]


def refine_brackets(a, b, za, zb, tol: float = 1e-12, max_iter: int = 200) -> np.ndarray:
    """Shrink sign-change brackets of Z to width <= tol, all at once.

    Illinois-modified false position, with a plain bisection step whenever
    a bracket fails to halve; every iterate keeps a sign change inside.
    """
    a, b = np.array(a, dtype=float), np.array(b, dtype=float)
    za, zb = np.array(za, dtype=float), np.array(zb, dtype=float)
    side = np.zeros(a.shape, dtype=int)
    for it in range(max_iter):
        width = b - a
        live = width > tol
        if not np.any(live):
            break
        x = (a * zb - b * za) / (zb - za)
        bad = ~np.isfinite(x) | (x <= a) | (x >= b)
        # every third round, force bisection so slow brackets still halve
        if it % 3 == 2:
            bad |= True
        x = np.where(bad, 0.5 * (a + b), x)
        x = np.where(live, x, a)
        zx = np.zeros_like(x)
        zx[live] = hardy_z_values(x[live])
        left = live & (np.sign(zx) == np.sign(za))
        right = live & ~left
        za_scaled = np.where(right & (side == -1), 0.5 * za, za)
        zb_scaled = np.where(left & (side == 1), 0.5 * zb, zb)
        a, za = np.where(left, x, a), np.where(left, zx, za_scaled)
        b, zb = np.where(right, x, b), np.where(right, zx, zb_scaled)
        side = np.where(left, 1, np.where(right, -1, side))
        exact = live & (zx == 0)
        a, b = np.where(exact, x, a), np.where(exact, x, b)
    return 0.5 * (a + b)


def _scan(lo: float, hi: float, density: int, tol: float) -> list:
    """Sign-change scan of Z on Gram points of [lo, hi] subdivided ``density`` times."""
    g = gram_points(lo, hi)
    knots = np.unique(np.concatenate(([lo], g, [hi])))
    frac = np.arange(density) / density
    grid = (knots[:-1, None] + np.diff(knots)[:, None] * frac[None, :]).ravel()
    grid = np.append(grid, hi)
    z = hardy_z_values(grid)
    i = _sign_changes(grid, z)
    return list(refine_brackets(grid[i], grid[i + 1], z[i], z[i + 1], tol))


def _count(x: float) -> int:
    """round(N(x)), nudging x off a zero ordinate if it happens to sit on one."""
    for k in range(6):
        xx = x + k * 1e-7
        try:
            return int(round(counting_n(xx)))
        except UnwrapInconsistent:
            continue
    raise UnwrapInconsistent(f"cannot evaluate N near {x}")


def find_zeros_up_to(T: float, tol: float = 1e-12) -> ZeroTable:
    """Every critical-line zero ordinate in (0, T].

    Z(t) is scanned for sign changes on Gram points (two samples per Gram
    interval) and each bracket is shrunk by safeguarded false position.  The
    count in every block of consecutive Gram intervals is checked against
    N(x); a block that comes up short is rescanned at 16x and then 256x
    density.
    """
    if not 0 < T <= MAX_HEIGHT:
        raise DomainError(f"T must lie in (0, {MAX_HEIGHT:g}]")
    if T <= SCAN_START:
        return ZeroTable((), float(T))
    g = gram_points(SCAN_START, T)
    knots = np.unique(np.concatenate(([SCAN_START], g[BLOCK::BLOCK], [T])))
    expected = np.rint(counting_n_values(knots[1:])).astype(int)
    expected = np.concatenate(([0], expected))  # N(10) = 0
    found = np.array(sorted(_scan(SCAN_START, T, 2, tol)))
    have = np.searchsorted(found, knots, side="right")
    keep = np.ones(found.shape, dtype=bool)
    extra = []
    for k in np.nonzero(np.diff(have) != np.diff(expected))[0]:
        lo, hi, need = knots[k], knots[k + 1], expected[k + 1] - expected[k]
        block = []
        for density in (16, 256):
            block = _scan(lo, hi, density, tol)
            if len(block) >= need:
                break
        if len(block) != need:
            raise MissedZero(f"found {len(block)} zeros in [{lo}, {hi}] but N says {need}")
        keep &= (found <= lo) | (found > hi)
        extra.extend(block)
    zeros = [found[keep], np.array(extra)]
    t = np.unique(np.concatenate(zeros))
    table = ZeroTable.from_array(t[t <= T], T)
    if not verify_zero_count(table, T):
        raise MissedZero(f"zero table up to {T} fails the N(T) completeness check")
    return table


def verify_zero_count(table: ZeroTable, x: float) -> bool:
    """True iff the number of ordinates <= x agrees with N(x)."""
    try:
        n = counting_n(x)
    except UnwrapInconsistent:
        return False
    return abs(table.count_upto(x) - n) < 1e-3


# --------------------------------------------------------------------------
# file format: optional '#' header/comment lines, one ordinate per line


def _parse(path) -> tuple:
    height = None
    ts = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("height="):
                    try:
                        height = float(body.split("=", 1)[1])
                    except ValueError:
                        raise ParseError(f"bad height header {line!r}", lineno) from None
                continue
            try:
                v = float(line)
            except ValueError:
                raise ParseError(f"not a decimal ordinate: {line!r}", lineno) from None
            if not math.isfinite(v) or v <= 0:
                raise ParseError(f"ordinate must be finite and positive: {line!r}", lineno)
            if ts and v <= ts[-1]:
                raise NotMonotone(f"line {lineno}: {v} does not exceed {ts[-1]}")
            ts.append(v)
    return ts, height


def load_zero_table(path, validate: bool = True) -> ZeroTable:
    """Read an ordinate file (e.g. Odlyzko's zeros1 list).

    The count of entries is checked against N just above the top entry;
    a disagreement raises :class:`CountMismatch`.
    """
    ts, height = _parse(path)
    if not ts:
        return ZeroTable((), float(height or 0.0))
    if height is None:
        height = ts[-1]
    if validate:
        x = ts[-1] + 1e-6
        n = counting_n(x)
        if abs(len(ts) - n) >= 1e-3:
            raise CountMismatch(f"{path}: {len(ts)} ordinates but N({x:.6f}) = {n:.3f}")
        if height > x:
            # header promises completeness further up
            n = _count(height)
            if n != len(ts):
                raise CountMismatch(f"{path}: {len(ts)} ordinates but N({height}) = {n}")
    return ZeroTable.from_array(ts, height, Source.imported)


def save_zero_table(table: ZeroTable, path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w", encoding="ascii", newline="\n") as fh:
        fh.write(f"# height={table.height!r}\n")
        for z in table.ordinates:
            fh.write(f"{z.t!r}\n")
    os.replace(tmp, path)


def cached_zero_table(T: float, cache_dir=None, tol: float = 1e-12) -> ZeroTable:
    """Table complete up to T, read from ``cache_dir`` when one is there."""
    if cache_dir is None:
        return find_zeros_up_to(T, tol)
    cache_dir = Path(cache_dir)
    best = None
    if cache_dir.is_dir():
        for f in sorted(cache_dir.glob("zeros_*.txt")):
            try:
                tab = load_zero_table(f, validate=False)
            except (ParseError, NotMonotone):
                continue
            if tab.height >= T and (best is None or tab.height < best.height):
                best = tab
    if best is not None:
        return best
    table = find_zeros_up_to(T, tol)
    save_zero_table(table, cache_dir / f"zeros_{T:g}.txt")
    return table
