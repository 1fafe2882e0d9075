"""Catenoid versus its inversion: residues swap, energy is 8 pi.

Run with ``python3 demos/residues_and_energy.py``.
"""

import math

from willmore.invariants import noether_current, residues
from willmore.io import load_surface
from willmore.numerics import quad_residue, willmore_energy


def show(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


spec = load_surface("catenoid")
minimal = spec.model(12)
sphere = spec.inverted(12)

# On the minimal catenoid only the fourth residue (the flux) survives.
print("catenoid  gamma0", show(residues(minimal).gamma0), " gamma3", show(residues(minimal).gamma3))

# Inversion moves it into the first slot.
print("inverted  gamma0", show(residues(sphere).gamma0), " gamma3", show(residues(sphere).gamma3))

# The trapezoidal rule on a circle gives the same numbers.
rep = quad_residue(noether_current(sphere, "translation"), r=0.3)
print("quadrature", show(round(float(x), 12) for x in rep.numeric), "max diff", rep.max_diff)

# Two ends of multiplicity one: W = 8 pi.
value, history = willmore_energy(spec.data, spec.center_floats())
print(f"energy {value / math.pi:.8f} pi after {len(history)} annuli")
