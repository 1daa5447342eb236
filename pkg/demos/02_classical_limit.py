"""Watch the fractional solutions approach the classical one as alpha -> 1."""

# %% classical data generated from the same coefficients
from fracstefan import CaseId, convergence_probe, fixed_family, solve_classical, synthesize_classical_data

data = synthesize_classical_data(k=1.5, rho=0.8, c=2.0, l=1.2)
ref = solve_classical(CaseId.LK, data.for_case(CaseId.LK))
print(f"xi* = {ref.xi_star:.8f}, so the fractional xi should tend to {2 * ref.xi_star:.8f}")

# %% the deviation shrinks about tenfold per decade of 1 - alpha
alphas = [0.9, 0.95, 0.99, 0.995, 0.999]
for case in CaseId:
    table = convergence_probe(case, fixed_family(data), alphas, tolerance=1e-2)
    devs = "  ".join(f"{r.xi_relative_deviation:.2e}" for r in table.rows)
    print(f"case {int(case)}: {devs}   passed={table.passed}")

# %% the profiles themselves
import numpy as np

from fracstefan import erf, wright

xs = np.linspace(0, 4, 81)
for alpha in (0.9, 0.99, 0.999):
    gap = max(abs(1 - wright(-x, -alpha / 2, 1.0) - erf(x / 2)) for x in xs)
    print(f"alpha={alpha}: max |f - erf(x/2)| = {gap:.2e}")
