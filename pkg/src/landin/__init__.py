"""Trace languages, vector firing sequences and their partial-algebra
semantics, with instance checkers for the correspondence results."""

from . import category as _category  # noqa: F401  (registers morphism checks)
from .algebra import (
    Congruence,
    PartialAlgebra,
    algebraic_closure,
    check_congruence,
    check_homomorphism,
    check_subdirect,
    direct_product,
    eval_term,
    is_finitely_generated,
    language_signature,
    quotient,
    unique_hom_from_fg,
)
from .category import Derivor, DerivedHom, Simulation, VectorSimulation
from .correspondence import (
    CheckReport,
    DecomposedAlgebra,
    algebra_to_language,
    decompose_vector_language,
    decomposed_to_vector_language,
    language_to_algebra,
    parallel_to_vfs_map,
    run_check,
    vector_language_to_algebra,
)
from .errors import LandinError
from .terms import App, Var, parse_term
from .traces import PrefixLanguage, compose_parallel, is_prefix_closed, prefix_close, project
from .vectors import (
    VectorLanguage,
    VectorString,
    commutation_class,
    component,
    independent,
    monoid_equal,
    normal_form,
    vconcat,
    vfs,
    vops,
)

__version__ = "0.1.0"
