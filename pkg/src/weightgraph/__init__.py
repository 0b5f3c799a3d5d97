"""Weight graphs of nilpotent Lie algebras.

Build the weight graph of an algebra from rational structure constants,
test graphs against the necessary conditions for being a weight graph, and
enumerate small graphs to count the surviving candidates.
"""

__version__ = "0.1.0"

from .canon import canonical_form, canonical_label
from .criteria import (
    CriteriaReport,
    check_weight_graph,
    f,
    f_difference,
    min_edges,
    naive_min_edges,
)
from .enumeration import candidate_report, enumerate_graphs, filter_pipeline
from .errors import CapacityError, DomainError, InputError, RepeatedWeights
from .graph import (
    INFINITY,
    SimpleGraph,
    complement,
    diameter,
    distance,
    is_isomorphic,
    isolated_vertices,
    power,
    universal_vertices,
)
from .lie import (
    StructureConstants,
    TorusDescription,
    center,
    check_condition1,
    diagonal_torus,
    lower_central_series,
    validate,
    weight_system_of,
)
from .weights import (
    WeightSystem,
    index_compatible_order,
    max_weight_sums,
    raw_graph,
    sum_triples,
    weight_graph,
)
