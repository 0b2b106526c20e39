"""Graph embeddings in finite affine and projective planes.

Explicit constructions for cycles (pancyclicity of AG(2,q) and PG(2,q)),
wheels, and gears; primitive-pair certificates over GF(q); a brute-force
embedding oracle for small planes; and a verifier every construction must
pass before it is emitted.
"""

from .gf import (
    ConjectureViolation,
    DegenerateAlpha,
    FieldElement,
    FieldSpec,
    HypothesisJCertificate,
    consecutive_primitive_pair,
    element_order,
    first_primitive,
    gamma_map,
    gamma_prime_map,
    hypothesis_j_search,
    is_primitive,
    make_field,
    prime_power,
    prime_powers_in,
    primitive_iter,
)
from .plane import (
    AffinePoint,
    CoordPlane,
    GenericPlane,
    GenericView,
    PlaneReport,
    ag_from_field,
    check_plane_axioms,
    load_plane,
    pg_from_field,
    save_plane,
)
from .graphs import (
    Embedding,
    Graph,
    ImpossibleDegree,
    VerifyReport,
    cycle_graph,
    edge_list_graph,
    gear_graph,
    make_embedding,
    read_embedding,
    verify_embedding,
    wheel_graph,
    write_embedding,
)
from .oracle import DEFAULT_BUDGET, OracleResult, exists_embedding, pancyclicity_table
from .cycles import (
    BasePath,
    CycleChain,
    NoCertificate,
    SlopeLabeling,
    ag_cycle,
    base_path,
    cycle_q2,
    cyclic_plane,
    labeling_for,
    long_cycle,
    path_closed_form,
    pg_cycle,
    singer_cycle,
    singer_difference_set,
)
from .wheelgear import (
    ConstructionFailed,
    GearPlan,
    WheelPlan,
    arc_points,
    gear,
    gear_from_wheel,
    gear_max,
    gear_paths,
    gear_plan,
    wheel,
    wheel_plan,
)

__version__ = "0.1.0"
