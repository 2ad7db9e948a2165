"""Two-valued states, classification and probabilities on pastings of contexts."""

from .catalog import catalog, wright_state
from .core import Logic, build_logic, intertwine_atoms, intertwine_list
from .forep import (
    OrthoRep,
    born_probabilities,
    cycle_umbrella_rep,
    max_quantum_value,
    two_context_rep,
    validate_faithfulness,
    validate_orthogonality,
)
from .io import LogicDocument, export_dot, parse_dsl, parse_json, serialize_dsl, serialize_json
from .probability import (
    ProbabilityAssignment,
    classical_mixture,
    in_classical_hull,
    linear_functional_max_classical,
    possibilistic_support,
    validate_generalized_state,
)
from .states import (
    Classification,
    GadgetKind,
    Level,
    PartitionLogic,
    StateSet,
    TwoValuedState,
    check_implication,
    classify,
    enumerate_states,
    gadget_relation,
    is_admissible,
    partition_logic,
)

__version__ = "0.1.0"
