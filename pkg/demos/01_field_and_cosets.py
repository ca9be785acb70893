"""
The alphabet GF(q^2) and the root exponents
===========================================

Every code in this package lives over GF(q^2).  Because the code length
``n = lambda (q - 1)`` satisfies ``r n = q^2 - 1``, the roots of ``x^n - eta``
are plain powers of a primitive element ``omega`` -- no extension field needed.
"""

import numpy as np

from constaqmds import field_for_q
from constaqmds.defsets import CodeShape, cyclotomic_coset, neg_q_set, omega_set, DefiningSet
from constaqmds.field import conj_q, pow_

###############################################################################
# Build GF(25) and look at its primitive element.  The modulus is the first
# monic primitive polynomial in lexicographic order of its coefficients.

F = field_for_q(5)
w = F.omega
print("modulus (little-endian):", F.modulus)
print("omega has order", F.n_units, "; omega^12 =", pow_(w, 12), "(that is -1)")

###############################################################################
# Conjugation ``a -> a^q`` is the Frobenius map; it fixes GF(5) and squares
# to the identity on GF(25).

print("conj(omega) = omega^5:", conj_q(w) == pow_(w, 5))
print("conj(conj(omega)) = omega:", conj_q(conj_q(w)) == w)

###############################################################################
# For q = 5, r = 2 the admissible exponents form Omega = {1 + 2i}.  Every
# cyclotomic coset under multiplication by q^2 is a singleton, so any subset
# of Omega is a valid defining set.

shape = CodeShape(5, 2)
omega = omega_set(shape)
print("Omega:", omega)
print("all cosets singletons:", all(cyclotomic_coset(z, shape.rn, 25) == (z,) for z in range(shape.rn)))

###############################################################################
# Hermitian dual containment only asks that Z and -qZ be disjoint.

Z = DefiningSet.custom(shape, (1, 3, 5, 7))
print("Z =", Z.elements, " -qZ =", neg_q_set(Z))
print("disjoint:", not set(Z.elements) & set(neg_q_set(Z)))

###############################################################################
# The vectorized kernels work on whole index arrays at once.

a = F.random_v(np.random.default_rng(0), 8)
print("a * conj(a) lies in GF(5):", np.all(F.mul_v(a, F.conj_v(a)) < F.p))
