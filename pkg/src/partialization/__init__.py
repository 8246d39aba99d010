"""Partialization of finite concrete categories and the semigroups it produces."""
from .category import (
    Category,
    CategoryError,
    ComplementSquare,
    ComplementUnsupported,
    CompositionError,
    FinMap,
    NotMonoError,
    PullbackSquare,
    Subobject,
    make_map,
)
from .chains import (
    ChainCategory,
    ChainMorphism,
    chain_compose,
    flatten,
    inverse_pairs,
    is_idempotent_chain,
    iterate_P,
    nat_f,
    nat_t,
    quasi_compose,
    quasi_iterate_P,
    retraction_a,
    select_stages,
    unflatten,
)
from .engine import PCategory, PMorphism, QMorphism, canonicalize_p, lift_P, p_compose, q_filter
from .sets import (
    FinInjCategory,
    FinSetCategory,
    FinSurjOpCategory,
    finset_instance,
    fininj_instance,
    finsurjop_instance,
    inclusion,
)
