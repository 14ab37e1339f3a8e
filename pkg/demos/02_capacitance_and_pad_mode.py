"""
The capacitance matrix of the measured array and its pad mode
=============================================================

Assemble the full capacitance matrix with the measured circuit values,
then look at the small-oscillation modes seen from the top pad. One mode
carries most of the pad's charge weight, and it sits close to the cavity
frequency.
"""

import numpy as np
import scipy.linalg

from jjaxy import units
from jjaxy.capacitance import FullCapacitance, assemble
from jjaxy.lattice import Boundary, LatticeSpec, build_lattice

# reduced units: capacitance in (2e)^2 / E_J0 with E_J0 = h * 30.3 GHz
ej0 = units.H * 30.3e9
cj = units.capacitance_to_reduced(units.junction_capacitance(units.H * 13.8e9), ej0)
cg = units.capacitance_to_reduced(1.38e-18, ej0)
cs = units.capacitance_to_reduced(48.5e-15, ej0)
print(f"C_J = {cj:.5f}, C_g = {cg:.3e}, C_S = {cs:.4f}")

L = 20
lat = build_lattice(LatticeSpec(L, L, Boundary.OPEN_WITH_PADS))
cap = assemble(FullCapacitance(cj, cg, cs), lat)
C = cap.matrix.toarray()

# the fast structured solve agrees with a dense solve
q = np.random.default_rng(1).normal(size=lat.n_nodes)
print("solve error:", np.abs(cap.solve(q) - np.linalg.solve(C, q)).max())

# harmonic stiffness of the unfrustrated array around phi = const
K = np.zeros_like(C)
for i, j in zip(lat.bonds.i, lat.bonds.j):
    K[i, i] += 1
    K[j, j] += 1
    K[i, j] -= 1
    K[j, i] -= 1

# K v = lam C v; the pad charge weight of mode n is (C v_n)_probe^2
lam, v = scipy.linalg.eigh(K, C)
weight = (C @ v)[lat.probe_node] ** 2
top = np.argsort(weight)[::-1][:3]
omega_c = 10.056 / 30.3
print(f"cavity frequency omega_c = {omega_c:.4f} E_J0/hbar")
for n in top:
    print(f"mode freq {np.sqrt(max(lam[n], 0)):.4f}, pad weight {weight[n]:.3f} of C_00 = {C[-1, -1]:.3f}")
