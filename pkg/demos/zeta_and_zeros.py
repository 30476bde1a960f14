"""A first look: zeta on the critical line, its argument, and its zeros."""
import numpy as np

from zetaint import arg_zeta, counting_n, find_zeros_up_to, hardy_z, zeta

print("zeta(2)      =", zeta(2.0).value.real, " (pi^2/6 =", np.pi**2 / 6, ")")
print("zeta(1/2+i)  =", zeta(0.5 + 1j, 1e-12).value)
print("arg zeta(1/2+i), continued from 2 along 2 -> 2+i -> 1/2+i:", arg_zeta(0.5, 1.0))

# Z(t) is real on the line and changes sign at every simple zero
for t in (14.0, 14.2, 20.0, 21.1):
    print(f"Z({t:5.1f}) = {hardy_z(t):+.6f}")

zs = find_zeros_up_to(100.0)
print(len(zs), "zeros below 100; the first three:", zs.t[:3])

# N(T) from the argument principle agrees with the table
for T in (50.0, 100.0, 500.0):
    print(f"N({T:g}) = {counting_n(T):.9f}")
