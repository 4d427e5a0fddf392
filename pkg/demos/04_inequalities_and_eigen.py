"""
Inequalities and eigen-structure
================================

Floating-point sweeps over a grid of real (x, y), with exact
evaluation before conversion to float.
"""

from bivfib.identities import DEFAULT_SWEEP, check_numeric, schur_difference
from bivfib.poly import ONE

# squared-entry sum minus squared-eigenvalue sum vanishes at y = 1
d = schur_difference("SCHUR_F", 3)
print("difference:", d)
print("at y = 1:", d.substitute({"y": ONE}))

for name in ("SCHUR_F", "SCHUR_L", "EIGVEC_A", "EIGVAL_BAN"):
    r = check_numeric(name)
    print(r.summary(), "-", r.note or f"{r.checked} checks")

# the quadratic-form bound is a survey: literal-order violations are
# recorded, only the symmetric y = 1 slice can fail
r = check_numeric("QFORM_BOUNDS")
print(r.summary())
f = r.findings[0]
print("example finding:", f["point"], "n =", f["n"], "z =", f["z"],
      "value", round(f["value"], 4), "bounds", round(f["lower"], 4), round(f["upper"], 4))
print("y = 1 slice:", check_numeric("QFORM_BOUNDS", DEFAULT_SWEEP.with_y(1)).summary())
