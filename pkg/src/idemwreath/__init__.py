"""Idempotent generation in the monoid of transformations preserving a uniform partition.

Modules:

* :mod:`~idemwreath.transformation` -- maps of {1..n} acting on the right
* :mod:`~idemwreath.wreath` -- elements of T(X,P) in wreath coordinates
* :mod:`~idemwreath.digraph` -- strong connectivity, complete digraphs, census oracles
* :mod:`~idemwreath.counting` -- exact closed forms and recurrences
* :mod:`~idemwreath.genset` -- minimal idempotent generating sets
* :mod:`~idemwreath.closure` -- brute-force generated submonoids
"""

from .transformation import Transformation
from .wreath import PartitionMap
from .genset import MinGenSetSpec
from .closure import ClosureResult, generate, generates_S

__all__ = ["Transformation", "PartitionMap", "MinGenSetSpec", "ClosureResult",
           "generate", "generates_S"]
__version__ = "0.1.0"
