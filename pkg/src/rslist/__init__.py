"""Reed-Solomon and folded Reed-Solomon codes with interpolation-based list decoders."""
from .channel import ChannelSpec, apply_channel, hamming
from .errors import CodingError
from .field import GF
from .frs import (
    FRSSpec,
    capacity_params,
    dilute,
    frs_decode_capacity,
    frs_decode_overlapping,
    frs_encode,
    is_non_overlapping,
)
from .oracle import brute_force_frs_list, brute_force_list, exhaustive_min_distance
from .outcome import DecodeOutcome
from .poly import BiPoly, UniPoly, y_roots
from .rs import RSSpec, rate, rs_encode, rs_min_distance, singleton_gap
from .rs_decode import (
    choose_plan,
    decode_list_basic,
    decode_list_gs,
    decode_list_weighted,
    decode_unique_bw,
    interpolate,
)

__version__ = "0.1.0"
