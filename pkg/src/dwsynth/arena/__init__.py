from .base import EnvironmentPolicy, SystemStrategy
from .policies import (
    BlockerPolicy,
    CompliantPolicy,
    ManualPolicy,
    RandomPolicy,
    ScriptedPolicy,
    UnknownPolicyError,
    compliant_env_policy,
    make_policy,
    oke_after_ko_policy,
    policy_suite,
    premature_oke_policy,
)
from .scheduler import Play, ScheduleConfig, default_max_rounds, simulate
from .verification import PlayRecord, VerificationReport, verify_play
from .mutations import CheatCase, SubstitutedStrategy, cheat_cases, system_cheat_cases
from .io import format_trace, parse_trace
