from .machine import (
    DecrementAtZeroError,
    InvalidRunError,
    MachineConfig,
    MachineError,
    MinskyMachine,
    Run,
    Transition,
    WrongSourceError,
    ZeroTestFailedError,
    format_run,
    required_processes,
    run,
)
from .io import MachineSyntaxError, format_machine, parse_machine
from .search import bounded_halting_search
from .compiler import (
    MachineCompiler,
    OrderCompiler,
    ReductionFormulas,
    compile_to_fo2_ord,
    reduction_signature,
)
from .strategy import (
    NonHaltingRunError,
    RunStrategy,
    encode_plan,
    pools_for_run,
    reduction_pools,
    strategy_from_run,
)
from .library import COUNTDOWN_RUN, countdown_machine, looping_machine
