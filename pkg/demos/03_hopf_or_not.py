"""Which corpus members are weak Hopf, and how you can tell.

For each algebra: the antipode (if the linear system has a solution), the
rank of the canonical map against the size of its domain, and the three
verdicts that must agree: right weak Hopf, left weak Hopf through the
opposite algebra, and invertibility of the antipode.
"""

from weakhopf import zoo
from weakhopf.hopf import canonical_map, hopf_verdicts, idempotent_F, solve_antipode
from weakhopf.lincore import rank

print(f"{'algebra':18} {'dim':>3} {'antipode':>9} {'rank can':>9} {'rank F':>7}  right left inv")
for name in zoo.CORPUS_NAMES:
    B = zoo.get(name).B
    res = solve_antipode(B)
    v = hopf_verdicts(B)
    can = canonical_map(B, 1, 1)
    print(f"{name:18} {B.dim:>3} {'yes' if res.exists else 'none':>9} "
          f"{rank(can):>5}/{can.dom:<3} {rank(idempotent_F(B, 1, 1)):>7}  "
          f"{str(v.right_weak_hopf):5} {str(v.left_weak_hopf):5} {v.invertible_antipode}")

print("\nA groupoid's canonical map is not invertible, yet it is weak Hopf:")
print("the canonical map is invertible once restricted to the image of F.")
print("\nThe exterior algebra on one generator needs the super braid:")
ext = zoo.exterior_algebra()
print("  antipode:", solve_antipode(ext).nu.dense())
print("  verdicts:", hopf_verdicts(ext))
