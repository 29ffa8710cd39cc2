"""Reed-Solomon toolkit for recovering generator-matrix-encoded data from
the output of an interpolation-based list decoder."""

from .code import (
    RsCodeSpec,
    build_code,
    build_gbar_matrix,
    build_generator_matrix,
    build_grs_generator,
    encode_evaluation,
    encode_generator,
    narrow_sense_transform,
)
from .decoding import (
    DecoderConfig,
    ListDecodeOutput,
    decode_brute_force,
    decode_guruswami_sudan,
    decoding_radius,
    list_decode,
)
from .field import Field, count_multiplications
from .gfft import GfftPlan, cyclic_shift, gfft_forward, gfft_inverse
from .recovery import (
    RecoveryTransform,
    compute_spectrum_diagonal,
    precompute,
    recover_by_scaling,
    recover_message,
)

__all__ = [
    "DecoderConfig", "Field", "GfftPlan", "ListDecodeOutput", "RecoveryTransform",
    "RsCodeSpec", "build_code", "build_gbar_matrix", "build_generator_matrix",
    "build_grs_generator", "compute_spectrum_diagonal", "count_multiplications",
    "cyclic_shift", "decode_brute_force", "decode_guruswami_sudan", "decoding_radius",
    "encode_evaluation", "encode_generator", "gfft_forward", "gfft_inverse",
    "list_decode", "narrow_sense_transform", "precompute", "recover_by_scaling",
    "recover_message",
]
