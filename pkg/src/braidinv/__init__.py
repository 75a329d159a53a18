"""Exact conjugacy-class invariants of closed braids.

Core objects: braid words and their moves, the Fiedler polynomial, the
Temperley-Lieb diagram algebra with its solid-torus closure trace, and the
finite-type invariants obtained from the a = e^t expansion of that trace.
"""

from .algebra import (
    BiLaurent,
    LaurentPoly,
    RationalPoly,
    TruncatedSeries,
    exp_substitute,
    laurent_mul,
    symmetric_pair,
)
from .braid import (
    BraidLetter,
    BraidWord,
    ExchangePair,
    MoveError,
    ParseError,
    Permutation,
    exchange_pair,
    is_knot,
    parse_braid,
    permutation_of,
    run_script,
    triviality_filters,
    writhe,
)
from .fiedler import (
    NotAKnotError,
    ascending_index,
    exchange_analysis,
    exchange_fiedler_difference,
    fiedler_poly,
    order1_alternating_sum,
    skein_difference,
    winding_m,
)
from .permcalc import (
    CycleDecomposition,
    IntersectionOrder,
    cycles,
    exchange_lengths,
    format_cycles,
    intersection_order,
    is_full_cycle_product,
    parse_cycles,
    product_is_full_cycle,
)
from .qinv import (
    conjecture_scan,
    exchange_delta,
    q1_difference_fast,
    q_difference,
    q_invariant,
    singular_phi,
    vanishing_order_check,
)
from .tl import (
    TLElement,
    TLState,
    all_states,
    closure_components,
    loop_value,
    phi,
    phi_power,
    power_coefficient,
    tl_generator,
    tl_mul,
    trace_f,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
