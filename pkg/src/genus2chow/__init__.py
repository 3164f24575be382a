"""Exact verification of the integral Chow ring computations for the moduli
of stable genus-two curves: graded integer polynomial arithmetic, strong
Groebner bases over ZZ, Smith-normal-form graded pieces, projective-bundle
and classifying-space pushforward calculus, and the end-to-end check pipeline.
"""

from .ring import (
    GradingError,
    InhomogeneousError,
    IntPolynomial,
    NotSymmetricError,
    Ring,
    RingMismatchError,
    VariableSpec,
    chern_series_quotient,
    elementary_symmetric,
    symmetrize_to_elementary,
)
from .parse import ParseError, parse_polynomial, render_polynomial
from .groebner import (
    Ideal,
    RingSpec,
    StrongGroebnerBasis,
    ideal_contains,
    ideal_equal,
    normal_form,
    strong_groebner,
)
from .graded import (
    GradedPieceGroup,
    InfiniteKernelError,
    KernelPiece,
    enumerate_kernel_elements,
    graded_piece,
    membership_matches_normal_form,
    multiplication_kernel,
)
from .bundles import (
    BundleClasses,
    SClassCombo,
    SrjTable,
    diagonal_class,
    mult_pushforward,
    push_multiplication_power,
    segre_pushforward,
    srj_table,
    subbundle_class,
    to_combo,
    veronese_pushforward,
)
from .classifying import (
    BgDerivation,
    DerivationError,
    RepSpec,
    bg_presentation,
    bg_ringspec,
    bt_pullback,
    bt_pushforward,
    rep_euler_class,
    wn_chern,
    wn_chern_from_tensor_identity,
)
from .pipeline import (
    CheckFailure,
    LemmaCheck,
    Pipeline,
    StrataRings,
    UnknownCheckError,
    VerificationReport,
    pushforward_boundary_to_total,
    verify_all,
)

__version__ = "0.1.0"
