"""Space-inhomogeneous two-state quantum walks on the line and on cycles.

Thin wrapper over the compiled extension: coin families, split-step
evolution, transfer-matrix eigenstates, stationary-measure checks, and the
classical random-walk comparison.
"""

from qwline._core import (
    PI,
    Coin,
    CoinSequence,
    CPhiParams,
    DichotomyRow,
    EvolutionOperator,
    HoppingSequence,
    Measure,
    Side,
    SpinorField,
    StationarityWitness,
    Topology,
    TransferMatrix,
    build_coin,
    build_cycle_eigenstate,
    build_eigenstate,
    cphi_coin_at,
    cphi_transfer_minus,
    cphi_transfer_plus,
    cycle_product,
    dense_cycle_operator,
    detect_period,
    dichotomy_table,
    eigen_residual,
    gamma_measure,
    interior_sites,
    iterate,
    parse_angle_text,
    run_config_text,
    rw_step,
    scale,
    spectral_distance,
    spectrum,
    split_coin,
    step,
    transfer_minus,
    transfer_minus_at,
    transfer_plus,
    transfer_plus_at,
    uniform_stationarity_witness,
    uniformity_defect,
)

__all__ = [
    "PI",
    "Coin",
    "CoinSequence",
    "CPhiParams",
    "DichotomyRow",
    "EvolutionOperator",
    "HoppingSequence",
    "Measure",
    "Side",
    "SpinorField",
    "StationarityWitness",
    "Topology",
    "TransferMatrix",
    "build_coin",
    "build_cycle_eigenstate",
    "build_eigenstate",
    "cphi_coin_at",
    "cphi_transfer_minus",
    "cphi_transfer_plus",
    "cycle_product",
    "dense_cycle_operator",
    "detect_period",
    "dichotomy_table",
    "eigen_residual",
    "gamma_measure",
    "interior_sites",
    "iterate",
    "parse_angle_text",
    "run_config_text",
    "rw_step",
    "scale",
    "spectral_distance",
    "spectrum",
    "split_coin",
    "step",
    "transfer_minus",
    "transfer_minus_at",
    "transfer_plus",
    "transfer_plus_at",
    "uniform_stationarity_witness",
    "uniformity_defect",
]

__version__ = "0.1.0"
