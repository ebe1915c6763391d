"""Exact twisted Mahler discrete residues, summability and certificates."""

from .constants import AlgConst, Cyc, Point
from .cyclemap import CycVec, cyclic_component, d_apply, kernel_vector, residual_average, section
from .errors import (
    BadTwist,
    InternalVerificationFailure,
    MahlerError,
    NonRationalResidue,
    NotInSupport,
    NotTorsion,
    ParseError,
    UnsupportedAlgebraicPoint,
    UnsupportedDenominator,
    UnsupportedError,
    UnsupportedRadicalIndex,
    WrongKind,
)
from .mahlercoeff import v_partition, v_taylor, vcoeff
from .parse import parse_expr
from .ratfun import PFD, Poly, RatFun, delta_lambda, partial_derivation, pf_decompose, reconstruct, sigma
from .residues import (
    Reduction,
    ResVec,
    certificate,
    dres_infinity,
    dres_nontorsion,
    dres_torsion,
    is_summable,
    reduce,
)
from .telescope import (
    DependenceVerdict,
    ResidueMatrix,
    decide_dependence,
    logderiv_residues,
    nishioka_identity_check,
    rational_kernel,
)
from .trees import INF, INFINITY, Bouquet, Tree, bouquet_of, disp, supp, tree_of

__all__ = [name for name in dir() if not name.startswith("_")]
