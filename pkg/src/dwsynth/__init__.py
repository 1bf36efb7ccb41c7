from .games import GameSpec, compute_minind, decide_grid, parse_game, solve
from .logic import Signature, classify_fragment, parse_formula, render_formula
from .minsky import MinskyMachine, compile_to_fo2_ord, parse_machine
from .words import DataWord, ProcessPools, WordStructure, evaluate, parse_word_file
