"""Exact computation with cocommutative Hopf braces.

The library is organized bottom-up:

* ``linalg``: exact matrices and subspaces over the rationals or a prime field
* ``hopf``: coalgebras and Hopf algebras as structure constants
* ``brace``: Hopf braces, their actions and Yang-Baxter operators
* ``subobjects``: morphisms, kernels, ideals, quotients and split points
* ``structure``: torsion decompositions, commutators, post-Lie data
* ``skew``: set-level skew braces and their linearizations
* ``serialize`` / ``cli``: the file format and the command line front end
"""

from .linalg import QQ, GF, Field, Mat, Subspace

__all__ = ["QQ", "GF", "Field", "Mat", "Subspace"]

__version__ = "0.1.0"
