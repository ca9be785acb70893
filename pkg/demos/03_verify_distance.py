"""
Certifying distance and dual containment
========================================

A parameter record is only a claim.  Here we build the classical code behind
one record, check Hermitian dual containment three independent ways, and prove
its minimum distance by checking every set of ``n - k`` parity-check columns.
"""

import math

from constaqmds import family_for, mds_check, three_way
from constaqmds.hermitian import contains_dual, gram_check
from constaqmds.defsets import dual_containing

###############################################################################
# The [[24, 12, 7]]_7 code comes from the even family with r = 2.

code, params = family_for(7, 2, 7)
print(params.label, "from a classical", f"[{code.n},{code.k}]", "code over GF(49)")
print("generator degree:", code.g.degree)

###############################################################################
# Defining sets, divisibility of generators, and an explicit dual basis all agree.

print("defining sets:", dual_containing(code.Z))
print("divisibility :", contains_dual(code))
print("dual basis   :", gram_check(code))
print("three-way    :", three_way(code))

###############################################################################
# C(24, 6) = 134,596 column subsets: small enough to check them all.

res = mds_check(code)
print(res.result, "after", res.subsets_checked, "subsets (C(24,6) =", math.comb(24, 6), ")")

###############################################################################
# Larger instances fall back to a seeded sample, reported as such.

big, big_params = family_for(29, 3, 19)
res = mds_check(big, budget=5000, seed=1)
print(big_params.label, "->", res.result, res.tag)
