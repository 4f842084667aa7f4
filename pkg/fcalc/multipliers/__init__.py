from .certify import DEFAULT_MULTIPLIER_LADDER, mikhlin_certify, sample_directions
from .evaluate import (
    eval_m_exp,
    eval_m_mu,
    eval_varphi,
    m_mu_at_t,
    partial_m_mu,
    partial_varphi,
    validate_multi_index,
    varphi_at_t,
    varphi_order,
)
from .expansion import chain_coefficient, set_partitions
from .models import (
    MULTIPLIER_KINDS,
    AlphaEntry,
    MultiplierReport,
    MultiplierSpec,
    RegimeReport,
    custom_spec,
    exp_m_spec,
    m_mu_spec,
    varphi_spec,
)

__all__ = [
    "AlphaEntry",
    "DEFAULT_MULTIPLIER_LADDER",
    "MULTIPLIER_KINDS",
    "MultiplierReport",
    "MultiplierSpec",
    "RegimeReport",
    "chain_coefficient",
    "custom_spec",
    "eval_m_exp",
    "eval_m_mu",
    "eval_varphi",
    "exp_m_spec",
    "m_mu_at_t",
    "m_mu_spec",
    "mikhlin_certify",
    "partial_m_mu",
    "partial_varphi",
    "sample_directions",
    "set_partitions",
    "validate_multi_index",
    "varphi_at_t",
    "varphi_order",
    "varphi_spec",
]
