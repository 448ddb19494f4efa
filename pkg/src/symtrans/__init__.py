"""Optimal probabilistic transforms between symmetric sets of pure states."""

from .coherent2qubit import (
    analytic_spectrum,
    beamsplit_plan,
    leak_gram,
    leak_states,
    mixing_matrix,
    odd_n_probability,
    optimal_probability,
    probability_vector,
)
from .info import EntropyReport, entropy_bound, report
from .linalg import (
    CirculantGram,
    circular_convolution,
    dcm,
    dft_forward,
    eigenvalues_of_circulant,
    hadamard,
    is_gram_of_states,
    synthesize_states_from_spectrum,
)
from .solver import (
    GeneralWitness,
    TransformSolution,
    diagnose,
    feasible_at,
    optimize_uniform,
    symmetrize_gram,
    uds_probability,
    uniformize,
    verify_general,
)
from .states import (
    CoherentEnsemble,
    QubitEnsemble,
    coherent_gram_row,
    gram_of,
    is_symmetric_set,
    qubit_gram_row,
    tensor_power_gram,
)

__version__ = "0.1.0"
