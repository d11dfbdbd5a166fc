"""refq: exact invariant theory for finite matrix groups.

Given a finite group of matrices over a cyclotomic field acting on affine
space, refq finds the pseudoreflections, the subgroup they generate and its
commutator subgroup, hyperplane orbits with their semi-invariants and
characters, fundamental invariants, Molien series, relations among
invariants, and assembles everything into a four-stage quotient
factorization report.
"""

__version__ = "0.1.0"

from .cyclotomic import Cyclotomic, root_of_unity_order

__all__ = ["Cyclotomic", "root_of_unity_order"]
