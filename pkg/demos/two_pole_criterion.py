"""The c = 3/2, d = 7/2 criterion at growing truncation heights.

The residual is lhs - rhs with lhs integrated to t_max.  It shrinks roughly
like 1/t_max^3, which says it is mostly the dropped tail and not quadrature
error.
"""
import math

from zetaint import criteria as cr

from _tables import zeros_to

table = zeros_to(1000)
print("closed form (pi/20) ln(18 pi^2/245) =", math.pi / 20 * math.log(18 * math.pi**2 / 245))
for T in (250.0, 500.0, 1000.0):
    res = cr.verify(cr.eq3(t_max=T), table)
    print(f"t_max {T:6.0f}: zeros {res.zeros_used:4d}  lhs {res.lhs:.15f}  residual {res.residual:+.3e}"
          f"  quad_error {res.quad_error:.1e}  tail_bound {res.tail_bound:.1e}")
