"""A structured flowchart language with condition and decision semantics."""
from importlib import resources

from .ast import (
    DEFAULT_STATE_CAP,
    FlowchartError,
    Program,
    Pred,
    State,
    StateCapExceededError,
    StateSpace,
)
from .parser import BoundOverflowError, FlowchartSyntaxError, UndeclaredVariableError, parse
from .semantics import (
    denote,
    denote_pred,
    disagreements,
    eval_pred,
    run_operational,
    while_fixpoint,
)

__all__ = [
    "BoundOverflowError",
    "corpus",
    "DEFAULT_STATE_CAP",
    "denote",
    "denote_pred",
    "disagreements",
    "eval_pred",
    "FlowchartError",
    "FlowchartSyntaxError",
    "parse",
    "Pred",
    "Program",
    "run_operational",
    "State",
    "StateCapExceededError",
    "StateSpace",
    "UndeclaredVariableError",
    "while_fixpoint",
]


def corpus() -> dict[str, str]:
    """The bundled example programs, keyed by file stem."""
    root = resources.files(__package__) / "corpus"
    return {
        entry.name[:-3]: entry.read_text(encoding="utf-8")
        for entry in sorted(root.iterdir(), key=lambda e: e.name)
        if entry.name.endswith(".fc")
    }
