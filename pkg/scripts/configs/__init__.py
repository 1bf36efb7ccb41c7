from .games import GamesConfig
from .oracle import OracleConfig
from .reduction import ReductionConfig
