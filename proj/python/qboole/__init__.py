"""Boolean functions as quantum gate matrices.

Synthesis of permutation matrices from reversible boolean functions,
oracle construction, recovery and minimization of expressions from
matrices, skew-hermitian generators with exp(K) = U, Hamilton operators
H = iK, and Pauli word expansions.
"""

from ._qboole import (
    Expr,
    HamiltonianResult,
    PermutationSpec,
    ReversibleMap,
    TruthTable,
    cycles,
    decode,
    eigenphases,
    encode,
    equivalent,
    from_dense,
    hadamard_conjugate,
    hamiltonian,
    map_from_matrix,
    map_from_truth_table,
    matrix_exp,
    matrix_from_map,
    minimized_expr,
    oracle_matrix,
    pauli_decompose,
    pauli_reconstruct,
    pauli_word_matrix,
    sigma,
    skew_log,
    spin_form,
    to_dense,
    truth_table,
    truth_table_from_map,
)

__all__ = [
    "Expr",
    "HamiltonianResult",
    "PermutationSpec",
    "ReversibleMap",
    "TruthTable",
    "cycles",
    "decode",
    "eigenphases",
    "encode",
    "equivalent",
    "from_dense",
    "hadamard_conjugate",
    "hamiltonian",
    "map_from_matrix",
    "map_from_truth_table",
    "matrix_exp",
    "matrix_from_map",
    "minimized_expr",
    "oracle_matrix",
    "pauli_decompose",
    "pauli_reconstruct",
    "pauli_word_matrix",
    "sigma",
    "skew_log",
    "spin_form",
    "to_dense",
    "truth_table",
    "truth_table_from_map",
]

__version__ = "0.1.0"
