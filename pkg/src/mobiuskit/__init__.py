"""mobiuskit: exact Mobius inversion for finite and patch-finite categories.

Fine, coarse and patch incidence algebras over generic rigs, Euler
characteristic, metric-space magnitude, functoriality machinery (ULF,
pushforward/pullback, Beck-Chevalley), the Mobius-category classifier,
and subtraction-free transitive-matrix tools.
"""

from .category import (
    Arrow,
    DirectedGraph,
    FinCategory,
    Functor,
    codiscrete_completion,
    coproduct,
    endomorphism_report,
    enumerate_subcategories,
    is_skeletal,
    monoid_to_category,
    patch,
    poset_to_category,
    preorder_reflection,
    product,
    underlying_graph,
    validate_category,
)
from .enriched import (
    GradedGraphCategory,
    MetricSpace,
    enriched_coarse_mobius,
    enriched_coarse_zeta,
    graded_mobius,
    graded_zeta,
    magnitude,
    similarity_matrix,
    tensor_mobius,
)
from .errors import (
    BudgetExceeded,
    DegreeMismatch,
    DivisionByZero,
    MalformedInput,
    MobiusKitError,
    NotAPoset,
    NotAnInverse,
    NotInvertible,
    NotNerveFinite,
    RigMismatch,
    UnknownObject,
    UnsupportedRig,
)
from .incidence import (
    CoarseElement,
    FineElement,
    PatchElement,
    coarse_delta,
    coarse_mobius,
    coarse_multiply,
    coarse_zeta,
    euler_characteristic,
    fine_convolve,
    fine_delta,
    fine_invert,
    fine_mobius,
    fine_mobius_hall,
    fine_zeta,
    nerve_euler_characteristic,
    patch_mobius,
    patch_multiply,
    patch_zeta,
    sigma_to_coarse,
    sigma_to_patch,
    verify_inverse,
)
from .infinite import PatchOracleCategory, builtin, classical_mobius, oracle_zeta, patchwise_mobius
from .functoriality import (
    Adjunction,
    Span,
    beck_chevalley_check,
    category_pullback,
    compose_spans,
    fibre_sizes,
    is_bijective_on_objects,
    is_mobius_category,
    is_ulf,
    mobius_by_subcategories,
    pullback_transform,
    pushforward,
    rota_check,
    ulf_via_pullback_squares,
    validate_adjunction,
)
from .matrixrig import (
    RigMatrix,
    adj_minus,
    adj_plus,
    det_minus,
    det_plus,
    inverse_zero_check,
    invert,
    is_transitive,
    lemma_identity_check,
)
from .rigs import BOOL, INT, NAT, RAT, REAL, Rig, TruncatedSeries, get_rig, polynomial_rig, series_mul

__version__ = "0.1.0"
