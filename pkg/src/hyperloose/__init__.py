"""Loose cycles in uniform hypergraphs: detection, encoding, decomposition and counting."""

from .certificates import (
    Canonical,
    GraphCycle,
    LooseCycle,
    Monochromatic,
    RainbowBiclique,
    RainbowCycle,
    Verdict,
    validate_certificate,
)
from .codec import Encoding, decode, encode, encode_phi, split_psi
from .core import (
    BipartiteColoring,
    EdgeColoredGraph,
    Hypergraph,
    MultiColoredGraph,
    Rainbow,
    check_rainbow,
    codegree,
    extend,
    neighborhood,
    shadow,
)
from .counting import CountReport, count_colored_bicliques, count_forb, growth_table
from .decompose import (
    Decomposition,
    PartiteBlock,
    compute_c1,
    compute_c2prime,
    decompose_greedy,
    find_max_balanced_partite,
    verify_decomposition,
)
from .detect import (
    SearchBudget,
    find_cycle_2_mod_h,
    find_loose_cycle_exact,
    find_loose_cycle_via_codegree,
    find_strongly_rainbow_even_cycle,
)
from .errors import (
    BudgetExhausted,
    HyperlooseError,
    InternalContradiction,
    OutOfBudget,
    PreconditionViolated,
)
from .ramsey import canonical_search, color_count_bound_check, extract_canonical_or_mono, find_rainbow_biclique

__version__ = "0.1.0"
