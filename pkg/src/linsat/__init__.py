"""Linear k-uniform hypergraphs: Berge cycles and paths, linear Berge-C_t
saturation, explicit saturated constructions, closed-form bounds, and
isomorph-free exhaustive search for small saturation and extremal numbers."""

from .berge import (
    BergeCycleWitness,
    BergePathWitness,
    find_berge_cycle,
    find_berge_path,
    is_berge_path_connected,
)
from .bounds import (
    BoundValue,
    applicable_bounds,
    component_lower_c4,
    disconnected_c4_lower,
    sat_c3_exact,
    sat_c4_upper,
    sat_lower,
)
from .constructions import c3_star, c4_family, t_prime, t_prime_gadget, t_star
from .errors import (
    BadLength,
    BadResidue,
    BudgetExceeded,
    HypergraphError,
    LabelClash,
    MissingAnchor,
    NotLinear,
    NotUniform,
    OutOfDomain,
    ParseError,
    TooSmall,
    UnknownVertex,
)
from .hypercore import (
    LinearHypergraph,
    build,
    candidate_edges,
    components,
    disjoint_union,
    identify,
    k_identify,
    shadow_graph,
)
from .saturation import SaturationReport, Verdict, component_census, is_free, is_saturated
from .textio import format_text, parse_text, read_hypergraph, write_hypergraph

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
