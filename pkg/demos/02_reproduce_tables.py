"""
Reproducing the parameter tables
================================

The two families give quantum MDS codes ``[[n, n - 2d + 2, d]]_q``.  Here we
list the rows in the newly covered distance range for q = 23 (even r),
q = 17 and q = 29 (odd r), and the four q = 19 codes of length 90.
"""

from constaqmds import enumerate_codes
from constaqmds.cli import format_rows

###############################################################################
# Even family, q = 23: only rows with d > (q + 1)/2 and r != 2 are new.

print(format_rows(enumerate_codes(23, "even", new_only=True), "text"))

###############################################################################
# Odd family, q = 17 and q = 29.

print(format_rows(enumerate_codes(17, "odd", new_only=True), "text"))
print(format_rows(enumerate_codes(29, "odd", new_only=True), "text"))

###############################################################################
# q = 19 with r = 4: lambda = 5, n = 90 and d runs up to 14.

print(format_rows(enumerate_codes(19, r=4, new_only=True), "text"))

###############################################################################
# Every record meets the quantum Singleton bound with equality.

recs = enumerate_codes(23)
print(len(recs), "records for q = 23, all MDS:", all(p.k == p.n - 2 * p.d + 2 for p in recs))
