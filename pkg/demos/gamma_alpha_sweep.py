"""Euler's constant from the arg integral on Re s = 1/2 + alpha.

Writes gamma_alpha.csv next to this script.  The error shrinks as the line
moves toward Re s = 1, where the kernel's tail matters less.
"""
from pathlib import Path

from zetaint import EULER_GAMMA
from zetaint.cli import DEFAULT_ALPHAS, _dump_csv, sweep_rows

from _tables import zeros_to

rows = sweep_rows(DEFAULT_ALPHAS, 1000.0, 1e-12, zeros_to(1000))
for r in rows:
    print(f"alpha {r['alpha']:.2f}: gamma(alpha) = {r['gamma_alpha']:.14f}  error {r['abs_error_vs_gamma']:.2e}")
print("gamma =", EULER_GAMMA)
out = Path(__file__).with_name("gamma_alpha.csv")
out.write_text(_dump_csv(rows), newline="\n")
print("wrote", out)
