from dataclasses import dataclass

from simple_parsing.helpers import JsonSerializable


@dataclass
class OracleConfig(JsonSerializable):
    n_pairs: int = 1000
    max_depth: int = 6
    max_word_length: int = 6
    n_machines: int = 10
