"""What a zero off the critical line would do.

Zeros are never planted in zeta itself.  Their effect enters through the
closed-form terms of the unconditional identities, so a hypothetical pair
sigma +- it shows up as a definite shift of the left side.
"""
import numpy as np

from zetaint import criteria as cr

from _tables import zeros_to

table = zeros_to(300)
spec = cr.CriterionSpec(cr.Kind.Theorem2, b=0.5, a=1.5, t_max=300.0)
base = cr.verify(spec, table)
print(f"no injected zeros: residual {base.residual:+.3e} (bound {base.bound:.1e})")

for sigma, t in ((0.9, 20.0), (0.75, 100.0), (0.55, 250.0)):
    z = cr.HypotheticalZero(sigma, t)
    r = cr.full_equality(spec, table, [z], base=base)
    print(f"zero at {sigma} + {t}i: shift {r.injected:.3e}, residual {r.residual:+.3e}, "
          f"residual' {r.residual_prime:+.3e}, would pass: {abs(r.residual) <= r.bound}")

# the shift is positive for every zero when a <= sqrt(3) t
sig = np.linspace(0.51, 0.99, 40)
ts = np.linspace(14, 2000, 40)
vals = [cr.zero_contribution(spec, cr.HypotheticalZero(s, t)) for s in sig for t in ts]
print("smallest shift on a 40x40 grid:", min(vals))
