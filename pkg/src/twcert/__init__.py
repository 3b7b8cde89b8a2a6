"""Exact certificates for total weight choosability of nice graphs.

Certifies that every graph without isolated-edge components admits an
edge-exponent vector, capped at 4, under which some monomial of the graph's
weighting polynomial survives; by polynomial non-vanishing over list products
this guarantees proper total weightings for all list assignments with
singleton vertex lists and edge lists one longer than the exponent.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .algebra import (
    IntMatrix,
    SparsePoly,
    build_a,
    build_b,
    build_c,
    difference_product,
    inner_plain,
    inner_plain_quadrature,
    inner_weighted,
    permanent,
    permanent_row_expansion,
    replicate_cols,
    replicate_rows,
    row_form_product,
    sum_power_product,
    weighting_coefficient,
    weighting_matrix,
    weighting_polynomial,
)
from .certify import (
    build_family_factors,
    certify_b4,
    certify_b5,
    check_anchor_identity,
    verify_family_lift,
)
from .covering import (
    Assignment,
    CoveringFamily,
    GoodSubset,
    build_family_b4,
    build_family_b5,
    find_good_assignment,
    find_good_subset,
    validate_assignment,
    validate_family,
    validate_good_subset,
)
from .errors import (
    ConstructionError,
    FalsificationError,
    InputFormatError,
    NotNiceError,
    PreconditionError,
    TwcertError,
)
from .graphs import (
    Edge,
    EdgeVector,
    Graph,
    JPartition,
    SubgraphFamily,
    characteristic_vector,
    incident_edges,
    is_nice,
    parse_graph,
    partition_by,
)
from .sufficiency import (
    Certificate,
    certificate_from_json,
    certificate_to_json,
    enumerate_bounded,
    find_witness_capped,
    is_sufficient,
    recheck_certificate,
)
from .weighting import (
    ListAssignment,
    TotalWeighting,
    check_proper,
    parse_lists,
    shift_to_zero_vertex_lists,
    solve,
)
