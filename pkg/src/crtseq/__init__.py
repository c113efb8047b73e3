"""CRT-based spectral analysis of LFSR combiner generators over GF(2^m).

Finite-field DFT of periodic binary sequences, residue composition of
shifts and spectral components across constituent registers, and
initial-state recovery -- everything exact, everything desk-scale.
"""

from .attack import (
    RecoveryReport,
    shift_from_spectra,
    spectral_recover,
    time_domain_recover,
)
from .combiner import (
    AnfFunction,
    GeneratorSpec,
    combiner_sequence,
    product_sequence,
    reference_sequence,
)
from .crt import (
    ResidueSystem,
    compose_shift,
    crt_solve,
    decompose_degree,
    map_degree,
    map_support,
    predict_spectrum,
    repetition_counts,
)
from .galois import (
    BinaryPoly,
    FieldCtx,
    FieldElt,
    dlog,
    element_min_poly,
    element_order,
    find_irreducible,
    find_primitive,
    is_irreducible,
    make_field,
    order_n_element,
    poly_gcd,
)
from .sequences import (
    LfsrConfig,
    PeriodicSequence,
    cyclic_shift,
    lfsr_generate,
    locate_window,
    min_poly_bm,
    state_at_shift,
    trace_sequence,
)
from .spectra import (
    Spectrum,
    cyclotomic_cosets,
    dft,
    dft_context,
    dft_point,
    idft,
    shift_spectrum,
    support,
    trace_reconstruct,
)

__version__ = "0.1.0"
