"""Two-colourings of the three-letter cube and their interval lines.

The package turns one combinatorial construction into working code:
five seed patterns and nine bracket words that force a monochromatic
combinatorial line with a contiguous active set once a colouring is
homogeneous enough, plus the searches, SAT encodings and Ramsey bound
towers that probe where such lines become unavoidable.
"""

from .bounds import BoundExpr, hj_value, plus_one, ramsey_upper, tower
from .cnf import (
    CnfInstance,
    EncoderBugError,
    SolveOutcome,
    decode_model,
    encode,
    parse_dimacs,
    run_solver,
    solve_builtin,
    write_dimacs,
)
from .cube import (
    Coloring,
    IntervalLine,
    Line,
    Symmetry,
    Word,
    all_symmetries,
    apply_symmetry,
    coloring_from_text,
    coloring_to_text,
    enumerate_interval_lines,
    enumerate_m_interval_lines,
    interval_line,
    is_monochromatic,
    line_points,
    load_coloring,
    rank,
    save_coloring,
    unrank,
)
from .gadgets import (
    SEED_LENGTHS,
    SEED_PATTERNS,
    GadgetLine,
    GadgetWords,
    HomogeneityError,
    HomogeneousChain,
    LineCertificate,
    Quadruple,
    bracket_word,
    case_lemma_check,
    extract_line,
    find_homogeneous_chain,
    find_interval_line,
    first_singleton_index,
    gadget_lines,
    gadget_words,
    induced_coloring,
    nsets,
    parse_certificate,
    pattern_coloring,
    ramsey_refine,
    render_certificate,
)
from .patterns import BreakpointSet, Pattern, breakpoints, contract, realize
from .search import (
    SearchReport,
    exhaustive_search,
    local_search,
    render_search_report,
    violation_count,
)

__version__ = "0.1.0"
