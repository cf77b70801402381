"""Exact combinatorics of matroid blow-up varieties.

Build a point configuration (or embed a graph), close its lattice of flats
under intersection, and compute characteristic polynomials, divisor
pairings on the blow-up V^n, top intersection numbers d(m, n) and the
Segre numbers s_0(m, n).
"""

from .arrangement import (
    ArrangementPoset,
    ConfigurationError,
    PointConfiguration,
    PreconditionError,
    arrangement_of_graph,
    build_arrangement,
    build_flat_lattice,
    close_under_intersection,
    embed_graph,
    meet_join,
)
from .degree import (
    BlowupTower,
    DegreeMismatchError,
    DivisorMonomial,
    SelfIntersectionOnlyWarning,
    degree_d,
    monomial_degree,
    self_intersection,
)
from .divisors import (
    CurveFunctional,
    DivisorClass,
    beta_divisor,
    build_S,
    build_Sbar,
    canonical_class,
    change_basis,
    deletion_pushforward,
    gamma,
    h_class,
    line_class,
    modular_restriction,
    pair,
)
from .fields import QQ, Field, GFElement
from .graphs import Graph, GraphError, all_graphs
from .matroid import (
    ResourceLimitError,
    beta_invariant,
    characteristic_polynomial,
    chromatic_polynomial,
    contract,
    delete,
    fano_configuration,
    four_point_line,
    has_minor,
    is_isthmus,
    is_modular,
    is_nice,
    moebius,
    signed_beta,
)
from .polynomial import IntPolynomial
from .segre import (
    SegreVector,
    fulton_degree_identity_check,
    residual_divisor,
    segre_class,
    segre_congruence_check,
)

__version__ = "0.1.0"
