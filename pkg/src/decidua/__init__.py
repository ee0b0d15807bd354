"""Decisions and three-valued logic in the category of finite partial maps."""
from .coproducts import (
    EMPTY,
    UNIT,
    assoc_left,
    assoc_right,
    bang,
    codiagonal,
    copair,
    inj1,
    inj2,
    proj1_dagger,
    proj2_dagger,
    sum_map,
    sum_obj,
    twist,
    zero_map,
)
from .decisions import Decision, DecisionError, check_decision_laws, decide, decision_inverse, transform
from .logic import (
    BOOL,
    bot,
    conj,
    conj_leq,
    dec_to_pred,
    disj,
    disj_leq,
    entails,
    neg,
    pred_to_dec,
    top,
)
from .pfn import (
    FinObj,
    ObjectMismatchError,
    PfnError,
    PMap,
    ShapeError,
    compose,
    identity,
    is_total,
    natural_leq,
    partial_inverse,
    restriction,
)

__all__ = [
    "assoc_left",
    "assoc_right",
    "bang",
    "BOOL",
    "bot",
    "check_decision_laws",
    "codiagonal",
    "compose",
    "conj",
    "conj_leq",
    "copair",
    "dec_to_pred",
    "decide",
    "Decision",
    "decision_inverse",
    "DecisionError",
    "disj",
    "disj_leq",
    "EMPTY",
    "entails",
    "FinObj",
    "identity",
    "inj1",
    "inj2",
    "is_total",
    "natural_leq",
    "neg",
    "ObjectMismatchError",
    "partial_inverse",
    "PfnError",
    "PMap",
    "pred_to_dec",
    "proj1_dagger",
    "proj2_dagger",
    "restriction",
    "ShapeError",
    "sum_map",
    "sum_obj",
    "top",
    "transform",
    "twist",
    "UNIT",
    "zero_map",
]

__version__ = "0.1.0"
