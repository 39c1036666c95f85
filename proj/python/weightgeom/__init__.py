"""Weight combinatorics of minuscule incidence geometries.

Systems are named like "E6"; weights are tuples in the fundamental-weight
basis; simple roots are numbered from 1 in Bourbaki order.
"""

from ._weightgeom import (
    ComputationRefused,
    ConsistencyError,
    InvalidArgument,
    NotACharacter,
    bilinear_type,
    branch,
    cartan_matrix,
    character,
    decompose_tensor,
    delta_space,
    dimension_diagram,
    dual,
    e6_brace_dimensions,
    e6_psi_types,
    hasse_edges,
    invariant_count,
    positive_roots,
    run,
    triality_table,
    verify,
    weyl_dimension,
    weyl_orbit,
)

__version__ = "0.1.0"
