"""Temperature profiles, boundary checks and the heat-equation residual."""

# %%
import numpy as np

from fracstefan import CaseId, moving_boundary, pde_residual, solve_case, synthesize_data, temperature, verify_conditions
from fracstefan.field import similarity

full = synthesize_data(k=1.5, rho=0.8, c=2.0, l=1.2, alpha=0.5)
report = solve_case(CaseId.RHOK, full.for_case(CaseId.RHOK))

# %% profiles at a few times; the front moves like t**(alpha/2)
for t in (0.5, 1.0, 4.0):
    s = moving_boundary(t, full.sigma, full.alpha)
    xs = np.linspace(0, s, 6)
    row = " ".join(f"{temperature(float(x), t, report):6.3f}" for x in xs)
    print(f"t={t:4}: s={s:.4f}  T = {row}")

# %% boundary, flux and Stefan conditions hold to rounding
checks = verify_conditions(report, [0.5, 1, 2, 10])
print("front", checks.max_front, "flux", checks.max_flux, "stefan", checks.max_stefan)

# %% L1 discretization of the Caputo derivative converges at about 2 - alpha
x = 0.25 * similarity(report).scale(1.0)
prev = None
for n in (128, 256, 512, 1024, 2048):
    r = pde_residual(report, x, 1.0, n)
    order = "" if prev is None else f"  order {np.log2(prev / r):.2f}"
    print(f"n={n:5d}  residual {r:.3e}{order}")
    prev = r
