"""Recover each pair of thermal coefficients from one consistent dataset."""

# %% build data from known coefficients
from fracstefan import CaseId, solve_case, synthesize_data

truth = dict(k=1.5, rho=0.8, c=2.0, l=1.2)
full = synthesize_data(**truth, alpha=0.5)
print(f"sigma = {full.sigma:.6f}, q_0 = {full.q_0:.6f}")

# %% hide two coefficients at a time and solve
for case in CaseId:
    report = solve_case(case, full.for_case(case))
    got = ", ".join(f"{n}={getattr(report.coefficients, n):.10f}" for n in case.unknowns)
    print(f"case {int(case)}: xi={report.xi:.6f}  {got}  residuals {report.residual_eq1:.1e} {report.residual_eq2:.1e}")

# %% the condition of case 1 is strict
from fracstefan import InadmissibleError, ProblemData

edge = ProblemData(alpha=0.5, T_m=0.0, T_0=1.0, q_0=1.0, sigma=1.0, k=1.0, rho=1.0)
try:
    solve_case(CaseId.LC, edge)
except InadmissibleError as err:
    print("rejected:", err)
