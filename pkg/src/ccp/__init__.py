"""Process algebra toolkit for concurrent traces.

Trace elements are nonempty sets of simultaneous events; processes carry
set-valued prefixes and compose in lockstep.  The package bundles the trace
algebra, bounded trace semantics, a satisfaction checker, a module DSL, an
executable law suite, and an interactive session service.
"""

from .errors import (
    CcpError,
    CompositionError,
    DomainError,
    InterfaceError,
    NotATraceError,
    ResourceLimitError,
    ShapeError,
    ValidationError,
)
from .process import (
    Menu,
    Mu,
    Par,
    Prefix,
    Process,
    Run,
    Stop,
    StepOffer,
    Var,
    after,
    alphabet,
    concur,
    interact,
    step,
    substitute,
    validate,
)
from .semantics import TraceSet, cc_sets, equiv_upto, intersect_sets, trace_member, traces_upto
from .traces import (
    EMPTY,
    TICK,
    Alphabet,
    EventSet,
    Trace,
    TraceElement,
    catenate,
    cc,
    eset,
    flatten,
    format_event_set,
    format_trace,
    head,
    infix_in,
    length,
    map_symbols,
    power,
    prefix_leq,
    restrict,
    reverse,
    select,
    seq_compose,
    star_member,
    subscript,
    tail,
    trace,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "CcpError", "CompositionError", "DomainError", "EMPTY",
    "EventSet", "InterfaceError", "Menu", "Mu", "NotATraceError", "Par",
    "Prefix", "Process", "ResourceLimitError", "Run", "ShapeError", "Stop",
    "StepOffer", "TICK", "Trace", "TraceElement", "TraceSet",
    "ValidationError", "Var", "after", "alphabet", "catenate", "cc",
    "cc_sets", "concur", "equiv_upto", "eset", "flatten", "format_event_set",
    "format_trace", "head", "infix_in", "intersect_sets", "interact",
    "length", "map_symbols", "power", "prefix_leq", "restrict", "reverse",
    "select", "seq_compose", "star_member", "step", "subscript",
    "substitute", "tail", "trace", "trace_member", "traces_upto", "validate",
]
