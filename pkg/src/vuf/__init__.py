"""Exact combinatorics and finite-field certificates for flag varieties with
nonreduced stabilizers: root systems, Weyl group and Demazure monoid,
thickened parabolic data, Chow transfer bookkeeping, fiber analyzers for the
projections of relative-position varieties, and a small exact polynomial
engine (Groebner bases, Jacobian loci, brute-force point counts) for the
explicit finite-field witnesses.
"""

__version__ = "0.1.0"
