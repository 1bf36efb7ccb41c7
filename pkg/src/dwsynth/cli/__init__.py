from .main import COMMANDS, Reporter, build_parser, main
