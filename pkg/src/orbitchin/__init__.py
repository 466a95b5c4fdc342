"""Exact numerical invariants of Higgs bundle moduli on hyperbolic stacky curves."""
from .errors import (CurveMismatchError, DomainError, FalsificationAlarm, InvalidClassError,
                     OrbitchinError)
from .curve import (CoverData, CurveSignature, PicClass, QDivisor, canonical_degree,
                    canonical_divisor, divisor_add, divisor_degree, divisor_scale, is_hyperbolic,
                    norm_component, norm_pushforward, pic_class, pic_divisor, pullback_divisor,
                    pushforward_divisor)
from .bundles import (BundleClass, ModifiedHilbert, ParabolicData, Polarization, age,
                      balanced_class, beta, canonical_class, default_polarization, direct_sum,
                      dual, euler_char, from_pushforward, generic_weight_exists, line_class,
                      modified_hilbert, modified_slope, parabolic_data, power,
                      pushforward_class, tensor, tensor_line, total_age, trivial_class)
from .spectral import (CoeffTable, Outcome, SpectralVerdict, classify_spectral,
                       coarse_spectral_cover_degrees, coeff_table, h0_K_power,
                       hitchin_base_dims, integrality_condition, pushforward_K_power,
                       spectral_genus, spectral_stacky_signature)
from .local_model import LocalType, LocalVerdict, classify_local, conjugate_partition, generic_orders
from .hitchin import (DimensionReport, SyzOutcome, SyzVerdict, dimension_report, gamma0_order,
                      integrable_check, moduli_dim_gl, moduli_dim_sl, syz_check)

__version__ = "0.1.0"
