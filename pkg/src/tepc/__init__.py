"""Total edge product cordial labelings of corona graphs, with an exhaustive checker."""

from tepc.constructions import (
    CaseTag,
    CoronaLabeling,
    Family,
    PredictedTally,
    Source,
    Variant,
    case_of,
    label_corona,
    label_corona_path_cycle,
    label_corona_path_path,
    label_fan,
    label_wheel,
    predicted_tally,
)
from tepc.errors import (
    BindingMismatch,
    InvalidParameter,
    NotLabelable,
    TepcError,
    UnsupportedSize,
    WitnessFound,
)
from tepc.graphs import (
    CoronaLayout,
    Graph,
    build_cycle,
    build_fan,
    build_path,
    build_paw,
    build_wheel,
    corona,
    corona_path_cycle,
    corona_path_path,
    degree_sequence,
    isomorphic_small,
)
from tepc.labeling import EdgeLabeling, Tally, VertexLabeling, induced_vertex_labels, is_tepc, tally
from tepc.search import SearchReport, certify_not_tepc, count_tepc, find_tepc

__version__ = "0.1.0"
