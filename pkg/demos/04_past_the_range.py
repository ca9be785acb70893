"""
One step past the admissible range
==================================

The families guarantee dual containment only up to a maximal number of roots.
What happens with one root more?  Nothing is promised; we just look.
"""

from constaqmds.defsets import CodeShape, divisors, past_range_probe
from constaqmds.quantum import even_divisors, odd_divisors

print(f"{'q':>3} {'r':>3} {'family':>6}  dual-containing at max+1")
for q in (7, 11, 13, 17, 19, 23, 29):
    for r in divisors(q + 1):
        if r in even_divisors(q):
            family = "even"
        elif r in odd_divisors(q):
            family = "odd"
        else:
            continue
        print(f"{q:>3} {r:>3} {family:>6}  {past_range_probe(CodeShape(q, r), family)}")
