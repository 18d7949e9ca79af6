"""H(2)-unknotting numbers of 2-bridge links and their composites.

Exact decision for S(p, q) via Berge's lens-space surgery list, the
correction-term matching obstruction for lens spaces, composite-link tests
and suffix upper bounds.  Everything is computed in exact integer and
rational arithmetic.
"""

__version__ = "0.1.0"

from .berge import BergeWitness, find_berge_witnesses, u2_is_one_2bridge, verify_witness
from .composite import (
    CompositeVerdict,
    U2Classification,
    composite_u2_one,
    tangle_upper_bound,
    u2_classify,
    u2_upper_bound,
)
from .core import (
    ContinuedFraction,
    TwoBridgeLink,
    cf_eval,
    cf_expand,
    determinant,
    equivalent,
    mod_inverse,
    normalize,
    units_of,
)
from .dinv import CorrectionTable, d_lens, d_lens_raw, f_term, to_c1_labeling
from .errors import (
    DegenerateFraction,
    DomainError,
    EvenOrder,
    InvalidParameter,
    MismatchedOrder,
    NonCoprime,
    NonUnit,
    OutOfRange,
    SymmetryFailure,
    TrivialSummand,
)
from .obstruction import (
    MatchingReport,
    TransferAssumption,
    dominance_compare,
    i_sequence,
    matching_exists,
    transfer_obstruction,
)
