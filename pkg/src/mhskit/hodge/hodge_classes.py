"""
Hodge Classes Module

The lattice Hdg_0(V)_Z = (W_0)_Z n F^0 of integral Hodge classes.
"""

import logging

from mhskit.hodge.structure import MixedHodgeStructure
from mhskit.linalg.lattice import IntegerLattice, integer_kernel
from mhskit.linalg.matrix import Matrix

logger = logging.getLogger(__name__)


def hodge_classes(mhs: MixedHodgeStructure) -> IntegerLattice:
    """
    Integral vectors in W_0 whose complexification lies in F^0.

    An integral v lies in F^0 iff a . v = 0 for every a in the annihilator of
    F^0; for v real this splits into the real and imaginary parts of a.
    Assumes a torsion-free lattice Z^rank.
    """
    n = mhs.rank
    conditions = [mhs.weight[0].annihilator().basis]
    hodge_conditions = mhs.hodge[0].annihilator().basis
    conditions.append(hodge_conditions.real_part())
    conditions.append(hodge_conditions.imag_part())
    stacked = Matrix.vstack(conditions) if any(c.rows for c in conditions) else Matrix.zeros(0, n)
    lattice = integer_kernel(stacked)
    logger.debug("Hdg_0 lattice of rank %d", lattice.rank)
    return lattice
