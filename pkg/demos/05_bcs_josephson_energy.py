"""
Temperature dependence of the Josephson energy
==============================================

The BCS gap and the Ambegaokar-Baratoff relation turn the lab temperature
into the reduced temperature k_B T / E_J(T) used by the simulations.
"""

from jjaxy.material import SuperconductorParams, bcs_gap, ej_of_t, lab_temperature, reduced_temperature

al = SuperconductorParams.from_frequency(t_c=1.375, e_j0_hz=30.3e9)
d0 = bcs_gap(0.0, al.t_c)
for frac in (0.2, 0.5, 0.8, 0.9, 0.95):
    t = frac * al.t_c
    print(f"T/T_c = {frac:4.2f}: Delta/Delta_0 = {bcs_gap(t, al.t_c) / d0:.4f}, "
          f"E_J/E_J0 = {ej_of_t(t, al) / al.e_j0:.4f}, k_B T/E_J = {reduced_temperature(t, al):.4f}")

# where does a reduced temperature of 0.91 sit in the lab?
t = lab_temperature(0.91, al)
print(f"k_B T/E_J = 0.91 at T = {t:.4f} K, where E_J/E_C = {ej_of_t(t, al) / al.e_j0 * 30.3 / 13.8:.3f}")
