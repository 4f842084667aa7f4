from .embeddings import AuditRow, EmbeddingAudit, embedding_audit, embedding_ratios, random_band_limited_field
from .kernel import convolve_with_kernel, folded_multiplier, kernel_K, kernel_refinement_ratio, require_kernel_hypothesis
from .norms import h_norm, sobolev_norm
from .operators import Calculus, apply_A, apply_Ts, apply_varphi_operator, make_calculus

__all__ = [
    "AuditRow",
    "Calculus",
    "EmbeddingAudit",
    "apply_A",
    "apply_Ts",
    "apply_varphi_operator",
    "convolve_with_kernel",
    "embedding_audit",
    "embedding_ratios",
    "folded_multiplier",
    "h_norm",
    "kernel_K",
    "kernel_refinement_ratio",
    "make_calculus",
    "random_band_limited_field",
    "require_kernel_hypothesis",
    "sobolev_norm",
]
