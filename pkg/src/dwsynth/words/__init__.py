from .checks import check_compatibility, check_fairness_window, pending_moves
from .evaluator import evaluate, evaluate_grounded
from .io import WordFile, WordSyntaxError, format_word, parse_pools, parse_word_file
from .structure import WordStructure, to_structure
from .word import DataWord, Letter, Move, OwnershipError, ProcessPools, check_ownership
