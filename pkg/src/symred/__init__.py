"""Exact pointwise linear algebra for symplectic reduction along submanifolds.

Everything is computed over the rationals: Chevalley-basis Lie algebras,
the Lie-Poisson structure on g*, stabilizer subalgebroid fibers and their
classification (pre-Poisson, stable, Poisson transversal), tangent fibers
of stabilizer subgroupoids of the cotangent groupoid T*G = G x g*, linear
models of reduced spaces with their symplectic forms, the two-term-complex
Lagrangian criterion, and a batch runner for named check suites.
"""

from .errors import (
    BaseNotInSubgroupoid,
    ConfigError,
    DimensionMismatch,
    EtaNotInAnnihilator,
    KindNotInvariant,
    LiftNotValid,
    NoMatrixRep,
    NotACandidate,
    NotASubalgebra,
    NotComposable,
    NotOnModel,
    NotStable,
    SolveFailure,
    SplittingInvalid,
    SymredError,
    UnsupportedType,
)
from .lie import (
    GroupElement,
    LieAlgebra,
    RootSystem,
    Sl2Triple,
    build_chevalley,
    direct_power,
    is_ad_semisimple,
    minimal_polynomial,
    principal_sl2,
)
from .poisson import (
    AffineSubspace,
    AlgebroidFiber,
    CasimirLevelSet,
    CoadjointOrbit,
    DecompositionClass,
    DiagonalSlodowy,
    Explicit,
    PoissonPointModel,
    PolyhedralFace,
    Singleton,
    SlodowySlice,
    SubmanifoldModel,
    WeylChamberFace,
    algebroid_fiber,
    coisotropic_check,
    constant_model,
    kks_model,
    moment_transversality_check,
    poisson_transversal_check,
    pre_poisson_sample_check,
    stable_check,
    stabilizer_subalgebra,
    symplectic_model,
    trivial_model,
)
from .groupoid import (
    CotangentPoint,
    CotangentTangent,
    GroupoidTangentFiber,
    coadjoint_orbit_fiber,
    fiber_by_intersection,
    identity_section_lagrangian_check,
    lie_functor_check,
    mw_fiber,
    normality_infinitesimal_check,
    omega_eval,
    omega_rank,
    source_target_differentials,
)
from .reduction import (
    ReducedSpaceModel,
    SplittingData,
    decomposition_form_check,
    dimension_formula_check,
    invariant_reduction_groupoid_check,
    kernel_identity_check,
    orbit_product_symplecto_check,
    orbit_tangent_in_universal,
    theta_bracket,
    universality_identity_check,
)
from .shifted import (
    LagrangianVerdict,
    TwoTermComplexMap,
    build_complex,
    criterion_for_candidate,
    lagrangian_criterion,
)
from .scenarios import REGISTRY, ScenarioReport, run_scenario

__version__ = "0.1.0"
