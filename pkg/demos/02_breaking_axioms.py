"""What the checkers say when the data is wrong.

Each law gets a one-entry perturbation of k x k that breaks it. The axiom
report names the failing diagram and shows where its two sides differ, and
the same failure shows up again in the conditions on the monad - (x) B.
"""

from weakhopf import zoo
from weakhopf.wbm import TAU_COUNTERPART, check_tau_axioms, check_weak_bimonoid

B = zoo.get("diagonal2").B

print(f"{'targeted law':36} {'also fails':>10}  first difference")
for target in zoo.MUTATION_TARGETS:
    bad = zoo.mutate(B, target)
    rep = check_weak_bimonoid(bad)
    hit = next(c for c in rep.checks if c.name == target)
    lhs, rhs = hit.witness
    diff = next((i, j) for i in range(lhs.cod) for j in range(lhs.dom) if lhs[i, j] != rhs[i, j])
    others = len(rep.failures()) - 1
    print(f"{target:36} {others:>10}  entry {diff}: {lhs[diff]} vs {rhs[diff]}")

print("\nThe monad-level conditions fail in step with the axioms:")
bad = zoo.mutate(B, "comultiplication_multiplicative")
tau_rep = check_tau_axioms(bad, (1, 2))
for b_name, t_name in TAU_COUNTERPART.items():
    b_ok = check_weak_bimonoid(bad).holds(b_name)
    t_ok = tau_rep.holds(t_name)
    print(f"  {b_name:36} {'ok  ' if b_ok else 'FAIL'}   {t_name:26} {'ok' if t_ok else 'FAIL'}")

print("\nA two-element table that is not associative:")
rep = check_weak_bimonoid(zoo.nonassociative_algebra())
print("  failing:", ", ".join(c.name for c in rep.failures()))
