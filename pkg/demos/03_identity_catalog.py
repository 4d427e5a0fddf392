"""
Checking the identity catalog
=============================

Every symbolic identity is checked by exact equality. A failing check
is a report, not an exception.
"""

from bivfib.engine import SeqParams
from bivfib.identities import CATALOG, check_symbolic, hard_failures, run_suite
from bivfib.poly import X

for ident, entry in list(CATALOG.items())[:6]:
    print(f"{ident.value:<18} {entry.statement}")

# a single check, with both sides rendered
r = check_symbolic("SIMPSON_F", 5)
print(r.summary(), "|", r.lhs, "=", r.rhs)

# parametrized identities take initial conditions
r = check_symbolic("SIMPSON_H", 3, params=SeqParams.of(1, X))
print(r.summary(), "|", r.rhs)

# power-of-Lucas expansion has a second index m
print(check_symbolic("LUCAS_POWER", 3, m=4).summary())

reports = run_suite(["DOUBLE_STEP", "SUM_F", "BINOM_L"], 20)
print(len(reports), "checks,", len(hard_failures(reports)), "failures")
