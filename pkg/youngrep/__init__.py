"""
youngrep - Biểu diễn tự nhiên Young của nhóm đối xứng S_n
"""

from .characters import CharacterRow, character, character_table, inner_product
from .oracle import TabloidVector, act, express_in_standard_basis, oracle_matrix, polytabloid
from .perm import (
    GeneratorWord, Permutation, adjacent_word, compose, conjugacy_classes,
    cycle_type, parse_cycles, sign,
)
from .shapes import Cell, Partition, conjugate, dimension, hook_length, partitions_of
from .specht import (
    GarnirPair, PolytabloidExpansion, garnir_transversal, generator_matrix,
    rep_matrix, straighten,
)
from .tableaux import (
    BasisOrder, Tableau, Tabloid, apply_perm, column_sort, first_row_descent,
    is_standard, standard_tableaux,
)
