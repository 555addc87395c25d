"""Orthogonal bases of harmonics and monogenics built along chains of splits."""

from ..projections import Mode, SpaceSplit, tau_H, tau_M
from .base import FAMILY_ORDER, WeightBaseElement, base_har_basis, base_mon_basis, weight_base
from .oracle import closed_form_dim, kernel_dim_oracle, linear_rank, monomials
from .recursion import (
    BasisElement,
    BranchLabel,
    LevelLabel,
    branch_basis,
    chain_splits,
    default_chain,
    parse_chain,
)
from .scasimir import (
    Signature,
    eigen_signature,
    eigenvalue,
    expected_signature,
    plane_scasimir,
    scasimir_u,
    scasimir_v,
    shifted_gamma,
)
from .verify import (
    CheckResult,
    NormalizedElement,
    VerificationReport,
    count_check,
    label_degree,
    normalize_basis,
    verify_basis,
)

__all__ = [
    'Mode', 'SpaceSplit', 'tau_H', 'tau_M',
    'FAMILY_ORDER', 'WeightBaseElement', 'base_har_basis', 'base_mon_basis', 'weight_base',
    'closed_form_dim', 'kernel_dim_oracle', 'linear_rank', 'monomials',
    'BasisElement', 'BranchLabel', 'LevelLabel', 'branch_basis', 'chain_splits', 'default_chain', 'parse_chain',
    'Signature', 'eigen_signature', 'eigenvalue', 'expected_signature', 'plane_scasimir',
    'scasimir_u', 'scasimir_v', 'shifted_gamma',
    'CheckResult', 'count_check', 'NormalizedElement', 'VerificationReport', 'label_degree', 'normalize_basis', 'verify_basis',
]
