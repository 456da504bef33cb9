from .radicals import GUARD_BAND, RadicalScalar, RadicalSum, compare_exact, squarefree_split
from .sgb_graph import (
    ComponentSummary, SgbGraph, build_sgb, decompose_components, isolated_subgroups,
    signature_equal,
)
from .star import (
    ALL_KINDS, MatrixKind, SpectrumMultiset, exact_spectrum, is_integral, spectra_equal,
    spectrum_symmetric, star_spectrum, union_spectrum,
)
from .matrices import (
    DENSE_LIMIT, DenseSymMatrix, build_matrix, cn_matrix, common_neighborhood_graph,
    component_matrix, matrix_of_kind, star_adjacency,
)
from .jacobi import MAX_SWEEPS, OFFDIAG_TOL, numeric_eigenvalues
from .numeric import DEFAULT_TOL, match_spectra, numeric_spectrum
from .energies import (
    ClassificationFlags, Energy, EnergyReport, RemarkCheck, adjacency_energy, classify,
    cn_energy, complete_graph_reference, energy_report, exact_spectra, laplacian_style_energy,
    remark_conclusions, summary_energy_report,
)
