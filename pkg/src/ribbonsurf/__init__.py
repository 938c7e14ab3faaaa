"""Ribbon graphs, the surfaces they fill, and the groups those surfaces carry.

The package models an embedded graph as a rotation system on darts, reads
off faces and genus, reduces any filling map to the canonical one-vertex
one-face polygon, extracts fundamental-group presentations, decides the word
problem for surface groups, and grows bounded Cayley complexes.
"""

from .errors import (
    DisconnectedError,
    DocumentSyntaxError,
    DuplicateDartError,
    DuplicateLabelError,
    EmptyMapError,
    EndpointMismatchError,
    InternalInvariantViolation,
    LoopNotContractibleError,
    MalformedWordError,
    MapError,
    MissingDartError,
    PreconditionError,
    RibbonError,
    UnknownLabelError,
    UnsupportedPresentationError,
)
from .maps import (
    DartRef,
    RibbonMap,
    ValidationReport,
    degree,
    from_rotation_lists,
    parse_dart_token,
    refine,
    relabeled,
    validate_rotation_lists,
)
from .surfaces import (
    Face,
    SurfaceReport,
    euler_characteristic,
    face_successor,
    genus,
    petal,
    standard_pair_labels,
    surface_report,
    trace_faces,
)
from .classify import (
    Cancel,
    ClassificationResult,
    ContractEdge,
    CutGlue,
    DeleteEdge,
    MoveTrace,
    PolygonWord,
    classify,
    contract_edge,
    delete_edge,
    delete_face_merging_edge,
    insert_edge,
    is_canonical_word,
    normalize,
    polygon_word,
    random_filling_map,
    reduce_to_one_vertex_one_face,
    replay,
    split_vertex,
    word_to_map,
)
from .iso import DartBijection, are_isomorphic, canonical_encoding
from .groups import (
    DiscretePath,
    Presentation,
    cyclic_reduce,
    free_presentation,
    free_reduce,
    homotopic,
    homotopic_words,
    invert_word,
    is_trivial_word,
    path_endpoints,
    pi1_presentation,
    solver_kind,
    spanning_tree,
    surface_group,
    zxz_presentation,
)
from .cayley import CayleyBall, cayley_ball
from .io import (
    GraphDocument,
    format_word,
    map_to_dot,
    parse_document,
    parse_graph,
    parse_word,
    serialize_document,
    serialize_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
