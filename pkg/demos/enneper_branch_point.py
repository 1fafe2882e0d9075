"""The branch point of the inverted Enneper surface.

The end of Enneper's surface has multiplicity 3, so its inversion has a
branch point with theta0 = 3.  The script prints the leading coefficients,
the cancellation pairings, and the blow-up rate of the mean curvature.

Run with ``python3 demos/enneper_branch_point.py``.
"""

import math

from willmore.branch import cancellation_check, extract_expansion, predicted_energy, second_residue
from willmore.io import load_surface
from willmore.numerics import willmore_energy

spec = load_surface("enneper")
m = spec.inverted(12)
e = extract_expansion(m)

print("theta0", e.theta0)
print("A0", [str(a) for a in e.A0])
print("first residue", [str(g) for g in e.gamma0])
for key, row in cancellation_check(e).items():
    print(f"  {key:16s} {'zero' if row['zero'] else row['value']}")

# |H| grows like |w|^-alpha at the branch point.
print("second residue", second_residue(m))
print("template violations", e.template_violations)

print("predicted energy", predicted_energy(spec.ends), "pi")
value, _ = willmore_energy(spec.data, spec.center_floats())
print(f"numeric energy   {value / math.pi:.8f} pi")
