"""
Lattices, gauge phases and the two chiral ground states
=======================================================

Build a fully frustrated array, check that every plaquette carries half a
flux quantum, and compare the energies of the two staggered ground states.
"""

import numpy as np

from jjaxy.lattice import Boundary, LatticeSpec, build_lattice, ground_state_ansatz
from jjaxy.observables import chirality

# an 8x8 torus with f = 1/2 in the Landau gauge
lat = build_lattice(LatticeSpec(8, 8, Boundary.PERIODIC, frustration=0.5))
print(f"{lat.n_nodes} islands, {lat.n_bonds} junctions")

# flux per plaquette, in units of the flux quantum, modulo one
flux = np.mod(lat.plaquette_phase_sums() / (2 * np.pi), 1.0)
print("flux per plaquette:", np.unique(np.round(flux, 12)))

# the two ground states differ only by the sense of circulation
for sign in (+1, -1):
    phi = ground_state_ansatz(lat, sign)
    cm = chirality(phi, lat)
    print(f"sign {sign:+d}: E/bond = {lat.potential_energy(phi) / lat.n_bonds:.15f}, m_s = {cm.m_s:+.3f}")
    print(np.array2string(cm.kappa[:4, :4], precision=2))

# a gauge transformation moves phases and bond offsets together and leaves U unchanged
rng = np.random.default_rng(0)
phi = rng.uniform(-np.pi, np.pi, lat.n_nodes)
lam = rng.uniform(-np.pi, np.pi, lat.n_nodes)
b = lat.bonds
u_before = lat.potential_energy(phi)
u_after = -np.cos((phi + lam)[b.i] - (phi + lam)[b.j] - (b.phase + lam[b.i] - lam[b.j])).sum()
print(f"gauge change of U: {u_after - u_before:.2e}")

# with pads, the top and bottom rows are merged into two electrodes
padded = build_lattice(LatticeSpec(6, 6, Boundary.OPEN_WITH_PADS))
print(f"padded 6x6: {padded.n_nodes} nodes, probe (top pad) = node {padded.probe_node}")
