"""Robustness against phonons and electron tunneling.

Runs the tunneling-dressed 8-state model with the phonon dissipator at 1 K
and then sweeps temperature and tunneling rate. On the effective models the
singlet stays exactly dark, so the steady-state concurrence survives; the
perturbations show up in the transient and in the dressed-state structure.

Run:  python3 demos/03_phonons_and_tunneling.py
"""

import warnings

from qdm import run_scenario, scenario_presets, sweep_temperature
from qdm.hamiltonians import dressed_basis

presets = scenario_presets()
fig4a = presets["fig4a"]

info = dressed_basis(fig4a.coupling.delta, fig4a.coupling.t_e)
print("tunneling-dressed exciton sector (delta = -20 meV, t_e = 2 meV):")
print(f"  mixing angle theta = {info.theta:.4f} rad")
print(f"  dressed energies   = {info.e1 / 1000:.3f} meV, {info.e2 / 1000:.3f} meV")
print()

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    result = run_scenario(fig4a)
print(f"steady concurrence with phonons + tunneling at 1 K: {result.steady_concurrence:.6f}")
print(f"characteristic time: {result.t0_ns:.2f} ns")
print()

print("steady concurrence over (temperature, tunneling rate):")
sweep = sweep_temperature(
    presets["fig4b"], [0.0, 1.0, 2.0, 4.0], [0.0, 1000.0, 2000.0, 3000.0], jobs=4
)
print("  T [K]    t_e = 0      1 meV      2 meV      3 meV")
temps = sorted({row[0] for row in sweep.rows})
for t in temps:
    cells = [row[2] for row in sweep.rows if row[0] == t]
    print(f"  {t:5.1f}  " + "  ".join(f"{c:9.6f}" for c in cells))
print()
print("the dark state is exact on the effective models, so the steady value")
print("stays at unity; temperature and tunneling act on the transient instead")
