"""Azimuthal eigenmodes of strongly non-degenerate parametric down-conversion.

Thin Python layer over the C++ core: build the azimuthal coupling matrix,
decompose it into eigenmodes, and evaluate gains, intensity profiles, and
effective mode numbers at arbitrary parametric gain.
"""

from ._core import (
    ExperimentConfig,
    GainModel,
    KScanRow,
    ModeDecomposition,
    __version__,
    bogolyubov_gains,
    coupling_matrix,
    decompose,
    effective_mode_number,
    gain_of_frequency,
    infeld_quadrature,
    intensity_profile,
    kernel_singular_values,
    load_config,
    mode_profile,
    scaled_infeld,
    scaled_infeld_row,
    scan_k,
    scattering_kernels,
    tau_of_frequency,
    truncation_order,
)

__all__ = [
    "ExperimentConfig",
    "GainModel",
    "KScanRow",
    "ModeDecomposition",
    "__version__",
    "bogolyubov_gains",
    "coupling_matrix",
    "decompose",
    "effective_mode_number",
    "gain_of_frequency",
    "infeld_quadrature",
    "intensity_profile",
    "kernel_singular_values",
    "load_config",
    "mode_profile",
    "scaled_infeld",
    "scaled_infeld_row",
    "scan_k",
    "scattering_kernels",
    "tau_of_frequency",
    "truncation_order",
]
