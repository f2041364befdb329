"""Synthesis and verification of weighted marked graphs (WMGs) whose
reachability graph is a single circle."""

from .cyclic import (
    Diagnostic,
    SynthResult,
    Verdict,
    build_adjacent_places,
    canonical_system,
    check_by_projection,
    check_cyclic_wmg,
    synthesize_cyclic_wmg,
)
from .petri import (
    Lts,
    PetriNet,
    Place,
    System,
    binary_circuit_live,
    circuit_live_sufficient,
    classify,
    enabled,
    enabled_places,
    fire,
    is_live_exhaustive,
    purify_cf,
    reachability_graph,
    scale_place,
)
from .verify import RgVerdict, cf_solve_small, circular_rg, load_fixture
from .weak import weak_synthesize, witness_word
from .words import (
    CircularLts,
    TVector,
    Word,
    adjacent_pairs,
    factor_primitive,
    induced_circular_lts,
    is_prime,
    parikh,
    parse_word,
    project,
)

__version__ = "0.1.0"
