"""Signed-graph balance solving over Z2, the exact-rational circle model
with its universal edge labelling, and a complete certificate-producing
solver for the network satisfaction problem of the four-atom relation
algebra 56_65."""

from .circle import (
    PENTAGON,
    THIRD,
    C3Embeddability,
    CircleKind,
    adjacent,
    angle,
    circ_dist,
    embeds_in_c3,
    epsilon_bound,
    find_c3_embedding,
    format_angle,
    induced_model,
    parse_angle,
)
from .chromatic import (
    ChiWitness,
    CircularClique,
    chi_c_less_than_3,
    circular_chromatic_number,
    circular_clique,
    find_homomorphism,
)
from .graphs import (
    Graph,
    InducedCycle,
    canonical_cycle,
    complement,
    complete_graph,
    contains_induced,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_induced_cycles,
    induced_subgraph,
    make_graph,
    path_graph,
    petersen_graph,
    wheel_graph,
)
from .relalg import (
    Certificate,
    Network,
    RelationAlgebra,
    compose_elements,
    make_algebra,
    make_network,
    network_to_signed,
    nsp_solve,
    path_consistency,
    ra_56_65,
    verify_certificate,
)
from .sigma import (
    CirclePoint,
    extend_3,
    p_anchor,
    parity_class,
    perturb,
    sigma_edge,
    sigma_model,
    universal_embed,
)
from .signed import (
    ANTI_EVEN,
    EVEN_SIGNABLE,
    ODD_SIGNABLE,
    BalanceRule,
    SignedGraph,
    cycle_sum,
    explicit_rule,
    find_balancing,
    is_balancing,
    make_signed,
    switch,
    switching_witness,
    tree_extend,
)
from .truemper import (
    ThreePathWitness,
    WheelWitness,
    find_3pcs,
    find_wheels,
    truemper_balanceable,
)

__version__ = "0.1.0"
