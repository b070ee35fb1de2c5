"""Zeros of weakly holomorphic modular functions q^-k A(q) + O(q) on SL2(Z).

The function is built as a polynomial P_k(A; y) in j from Faber polynomials,
the coefficient condition on A is certified with interval arithmetic, and the
k zeros are isolated exactly in (0, 1728) and placed on the arc |tau| = 1.
"""

from .condition import HypothesisReport, check_hypothesis, threshold
from .extremal import ExtremalFunction, construct, residual_on_arc, verify_principal_part
from .faber import faber, faber_by_genfun, faber_by_reduction, faber_crosscheck
from .modforms import ArcPoint, j_expansion, j_on_arc, sigma
from .partitions import CoeffStream, explicit_stream, kane_bound, partition_numbers, witten_stream
from .qseries import LaurentQSeries, add, invert, mul, product_expansion
from .ratpoly import RatPoly
from .roots import RootCertificate, certify, invert_j_on_arc, isolate_roots, refine_root, sturm_count

__all__ = [name for name in dir() if not name.startswith("_")]
