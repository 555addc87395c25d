from .polynomial import CliffordPolynomial, IndexRange, MultiIndex, poly_mul
from .operators import (
    D,
    DIRAC,
    EULER,
    GAMMA,
    IDENTITY,
    L,
    LAPLACE,
    LEFT,
    M,
    RSQ,
    VECTOR,
    X,
    PolyOperator,
    angular_L,
    anticommutator,
    casimir_L,
    casimir_h,
    commutator,
    dirac,
    euler,
    euler_apply,
    euler_function,
    gamma,
    laplace,
    moment_M,
    multiply_variable,
    partial_derivative,
    rsq_mul,
    vector_mul,
)
from .fischer import (
    GramMatrix,
    fischer_gram,
    fischer_inner,
    fischer_norm2,
    multi_factorial,
    sphere_factor,
    sphere_inner_monogenic,
)

__all__ = [
    'CliffordPolynomial', 'IndexRange', 'MultiIndex', 'poly_mul',
    'PolyOperator', 'D', 'X', 'DIRAC', 'EULER', 'GAMMA', 'IDENTITY', 'L', 'LAPLACE', 'LEFT', 'M', 'RSQ',
    'VECTOR', 'angular_L', 'anticommutator', 'casimir_L', 'casimir_h', 'commutator', 'dirac', 'euler',
    'euler_apply', 'euler_function', 'gamma', 'laplace', 'moment_M', 'multiply_variable',
    'partial_derivative', 'rsq_mul', 'vector_mul',
    'GramMatrix', 'fischer_gram', 'fischer_inner', 'fischer_norm2', 'multi_factorial', 'sphere_factor',
    'sphere_inner_monogenic',
]
