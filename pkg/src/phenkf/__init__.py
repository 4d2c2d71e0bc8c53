"""Exact resistance distances and Kirchhoff indices of phenylene chains."""

from .chain_model import (
    ChainCode,
    LabeledChain,
    TerminalChain,
    build_chain,
    build_ladder,
    build_terminal_chain,
    canonical_code,
    helicene,
    is_all_kink,
    linear,
)
from .exact_arith import Rational, format_rational, parse_rational
from .extremal_search import (
    enumerate_codes,
    find_extrema,
    kf_of_code,
    kink_flip,
    verify_conjecture,
    verify_theorem1,
)
from .resistance_engine import (
    ResistanceNetwork,
    effective_resistance,
    kirchhoff_index,
    resistance_matrix,
    resistance_sum,
)
from .st_isomer import STPair, lemma4_delta, make_st_pair, verify_lemma4

__version__ = "0.1.0"
