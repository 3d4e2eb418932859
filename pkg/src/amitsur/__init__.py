"""Necessary conditions for finite metacyclic groups to embed in division rings.

Subpackages: ``arith`` (number theory), ``groups`` (the groups G(m, n, r)),
``classify`` (rule engine and order scans), ``groupring`` (the telescoping
identity in Z[G]), ``cyclotomic`` (exact Q(zeta_k)), ``algebra`` (cyclic
algebras and embeddings), ``cli``.
"""

__version__ = "0.1.0"
