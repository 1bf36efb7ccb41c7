from .ast import (
    Action,
    And,
    Bottom,
    Eq,
    Exists,
    Forall,
    Formula,
    Less,
    Not,
    Or,
    ProcPred,
    Signature,
    Sim,
    Succ,
    Top,
    conjunction,
    disjunction,
    free_variables,
    implies,
    swap_variables,
    variables,
)
from .counting import (
    build_balanced_count_formula,
    build_exactly_one_formula,
    build_split_counting_formula,
    split_action_names,
)
from .fragments import FragmentProfile, classify_fragment
from .parser import (
    FormulaSyntaxError,
    UnboundVariableError,
    UnknownActionError,
    UnknownPredicateError,
    parse_formula,
    parse_formula_file,
    parse_signature,
)
from .printer import render_formula
