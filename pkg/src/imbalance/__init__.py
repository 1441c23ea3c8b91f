"""Maximal binary prefix codes under the imbalance order.

Path-length sequences name lex monotone maximal prefix codes; ``meet``
computes greatest lower bounds by repeated balancing, and ``explorer``
enumerates whole imbalance lattices of small size.
"""

from .balancing import (
    BalancingCertificate,
    InvariantError,
    LatticeError,
    MeetTrace,
    balancing_step,
    glb_bruteforce,
    join,
    lub_bruteforce,
    meet,
)
from .explorer import (
    PosetGraph,
    build_poset,
    check_lattice,
    check_modularity,
    count_sequences,
    enumerate_sequences,
    export_dot,
)
from .order import (
    BlockDecomposition,
    OrderRelation,
    compare,
    dominating_blocks,
    interval_decomposition,
    kraft_profile,
    le_indices,
    le_majorization,
)
from .words import (
    Code,
    CodeError,
    Dyadic,
    PathLengthSequence,
    Word,
    canonical_code,
    is_maximal,
    kraft_sum,
    lex_compare,
    parse_sequence,
    prefix_compare,
    sequence_of,
)

__version__ = "0.1.0"
