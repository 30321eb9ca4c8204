"""A walk through the pair groupoid on two objects.

Its algebra is the 2x2 matrix units f11, f12, f21, f22 with f_ij f_jk = f_ik
and every arrow grouplike. We check the axioms, split the idempotent that
carries the base algebra, multiply two modules and find the antipode.
"""

from weakhopf import zoo
from weakhopf.emcat import base_monoid, module_tensor, regular_module, unit_constraints
from weakhopf.hopf import solve_antipode, structure_maps
from weakhopf.lincore import identity
from weakhopf.wbm import check_weak_bimonoid, sqcap


def show(label, f):
    print(f"{label} ({f.cod}x{f.dom}):")
    for row in f.dense():
        print("   ", " ".join(f"{str(v):>4}" for v in row))


entry = zoo.get("pair2")
B = entry.B
print("basis:", ", ".join(entry.basis))

report = check_weak_bimonoid(B)
print(f"\n{len(report)} axioms checked, all hold: {report.ok}")

# The idempotent on B whose image is the base algebra. For a groupoid it
# sends each arrow to the identity at its target.
show("\nsqcap", sqcap(B))
sm = structure_maps(B)
print("sqcap agrees with the direct composite t:", sm.t == sqcap(B))

R = base_monoid(B)
print(f"\nbase algebra has dimension {R.R_dim} (one per object)")
show("inclusion of the base", R.I)
print("separable Frobenius laws:", R.laws.ok)

ideal = entry.modules()["ideal0"]
reg = regular_module(B)
T = module_tensor(ideal, reg, B)
print(f"\nideal0 has dimension {ideal.carrier}, the regular module {reg.carrier}")
print(f"their plain tensor product has dimension {ideal.carrier * reg.carrier},"
      f" the truncated one {T.product.carrier}")

u = unit_constraints(reg, B)
print("right unit constraint on the regular module is invertible:",
      u.rho @ u.rho_inv == identity(reg.carrier) and u.rho_inv @ u.rho == identity(u.rho.dom))

res = solve_antipode(B)
show("\nantipode", res.nu)
print("it swaps f12 and f21, sending each arrow to its inverse;"
      f" invertible: {res.invertible}, unique: {res.unique}")
