"""Exact computations with weak bimonoids and the monad they induce."""

from .lincore import (
    NO_SOLUTION,
    AlgebraError,
    DimensionMismatch,
    LinMap,
    NoSolution,
    NotIdempotent,
    NotInvertible,
    NotSquare,
    Solution,
    SplitIdempotent,
    compose,
    identity,
    inverse,
    is_invertible,
    rank,
    solve_linear,
    split_idempotent,
    swap,
    tensor,
    zero,
)
from .wbm import (
    AxiomCheck,
    AxiomReport,
    BraidingError,
    IdempotencyFailed,
    InducedMonad,
    NotAMorphism,
    WeakBimonoid,
    base_iso,
    check_morphism,
    check_tau_axioms,
    check_weak_bimonoid,
    sqcap,
    tau,
    tau0,
    validate_monoid_comonoid,
)
from .emcat import (
    BaseMonoid,
    BimoduleLawFailed,
    CoherenceFailed,
    ConstraintNotInvertible,
    FrobeniusCheckFailed,
    ModuleLawFailed,
    ModuleTensor,
    RightModule,
    associator,
    base_monoid,
    coherence_check,
    module_tensor,
    r_bimodule_actions,
    regular_module,
    unit_constraints,
)
from .hopf import (
    AntipodeResult,
    StructureMaps,
    WhmVerificationFailed,
    canonical_map,
    check_left_hopf,
    chi_witness,
    convolve,
    fusion,
    hopf_verdicts,
    idempotent_E_T,
    idempotent_F,
    left_canonical_map,
    opposite,
    solve_antipode,
    structure_maps,
    verify_whm,
)

__version__ = "0.1.0"
