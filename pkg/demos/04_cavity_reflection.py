"""
Cavity reflection and the linewidth fit
=======================================

Turn a complex frequency shift into a reflection trace, add 1% noise and
recover the total linewidth with the least-squares fit.
"""

import numpy as np

from jjaxy.cavity import CavityParams, fit_s11, s11

cav = CavityParams.from_hz(10.056e9, 31.8e6, 0.7e6, 350e6)
print(f"bare on-resonance S11 = {s11(np.array([cav.omega_c]), 0.0, cav).s11[0].real:.6f}")

# a susceptibility with Im chi/2e = 0.05 broadens the line by g * 0.05
chi = 0.02 + 0.05j
tr = s11(cav.omega_c + np.linspace(-3, 3, 301) * 2 * np.pi * 50e6, chi, cav)
print(f"kappa_tot / 2pi = {tr.kappa_tot / 2 / np.pi / 1e6:.3f} MHz")

rng = np.random.default_rng(2)
noisy = tr.s11 + 0.01 * (rng.normal(size=tr.s11.size) + 1j * rng.normal(size=tr.s11.size))
fit = fit_s11(tr.omega, noisy, cav)
print(f"fit:  kappa_tot / 2pi = {fit.kappa_tot / 2 / np.pi / 1e6:.3f} MHz, Im chi/2e = {fit.im_chi_over_2e:.4f}")
print("flags:", fit.flags or "none")
