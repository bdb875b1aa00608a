"""Finite commutative rings, the amalgamated duplication R ⋈ I, and the
classic and extended zero-divisor graphs of both."""

from zdlab.amalgam import AmalgamRing, TPartition, build_amalgamation, t_partition
from zdlab.idealalg import (
    IdealSet,
    annihilator,
    annihilator_of_set,
    coincidence_criterion,
    ideal_generate,
    ideal_radical,
    nilradical,
    zero_divisor_set,
)
from zdlab.ringkernel import (
    DEFAULT_SIZE_CAP,
    MonomialQuotient,
    ProductRing,
    SizeCapError,
    ZMod,
    is_integral_domain,
    is_reduced,
    is_z2xz2,
    pow_trajectory,
)
from zdlab.ringspec import (
    parse_ideal_spec,
    parse_ring_spec,
    ring_from_spec,
    validate_finiteness,
)
from zdlab.zdgraph import (
    ZDGraph,
    classic_graph,
    diameter,
    distance,
    extended_adjacent,
    extended_graph,
    girth,
    graphs_equal,
    has_condition_a,
    is_complete,
    is_complete_bipartite,
)

__version__ = "0.1.0"
