"""
Susceptibility of a single damped junction
==========================================

A single junction to ground at low temperature is a damped harmonic
oscillator. Its pad-charge susceptibility from the Langevin trajectory is
compared with the closed form, using both the Welch spectral estimator and
the direct time-domain estimator.
"""

import numpy as np

from jjaxy.capacitance import CapacitanceMatrix
from jjaxy.dynamics import PhaseState, SimParams, run_trajectory
from jjaxy.lattice import Circuit
from jjaxy.observables import damped_oscillator_chi, susceptibility

net = Circuit.from_edges(1, [(0, -1, 0.0)])
cap = CapacitanceMatrix(np.array([[0.5]]))
params = SimParams(temperature=0.001, gamma=0.3, dt=0.01, n_burn=20_000, n_sample=10_000_000,
                   record_stride=10, seed=4)
rec = run_trajectory(PhaseState.zeros(1), params, net, cap)

w = np.linspace(1.0, 1.8, 9)
exact = damped_oscillator_chi(w, 0.5, 1.0, 0.3)
spec = susceptibility(rec, omega=w, segment=2**13)
direct = susceptibility(rec, omega=w, segment=2**13, method="direct")

print(" omega   exact   spectral        direct")
for k in range(len(w)):
    print(f"{w[k]:6.3f} {exact[k].imag:7.4f} {spec.chi[k].imag:7.4f}+-{spec.sigma_im[k]:.4f}"
          f" {direct.chi[k].imag:7.4f}+-{direct.sigma_im[k]:.4f}")

z = np.abs(spec.chi.imag - exact.imag) / spec.sigma_im
print(f"largest deviation of the spectral estimate: {z.max():.1f} standard errors")
