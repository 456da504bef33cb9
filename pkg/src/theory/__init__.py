from .families import (
    Family, FamilyId, component_count_of, edge_count_of, energies_of, group_of,
    predicted_classification, spectrum_of, structure_of, vertex_count_of,
)
from .printed import (
    displayed_spectrum, multiplicity_mismatches, multiplicity_total, printed_discrepancies,
    printed_structure,
)
from .verify import DEFAULT_MAX_ORDER, VerificationReport, verify_family
