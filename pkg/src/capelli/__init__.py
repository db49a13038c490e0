"""Exact-arithmetic construction and verification of the higher Capelli
identities: symmetric group matrix elements, Jucys-Murphy elements, Weyl
algebra operators, enveloping algebra elements, and algebra-valued tensors.
"""

from .enveloping import (
    Centrality,
    EnvelopingAlgebra,
    UglElement,
    generator_order,
    hc_eigenvalue,
    is_central,
    ugl_multiply,
    ugl_to_weyl,
)
from .identities import (
    VerificationReport,
    build_D,
    build_E,
    build_X,
    lhs_theorem,
    quantum_immanant,
    rhs_theorem,
    sweep,
    verify_corollary,
    verify_proof_steps,
    verify_theorem,
)
from .permutations import (
    GroupAlgebraElement,
    Permutation,
    all_permutations,
    compose,
    embed,
    ga_multiply,
    jm_element,
)
from .tableaux import (
    Partition,
    RepMatrix,
    StandardTableau,
    all_partitions,
    character_element,
    content,
    dimension,
    enumerate_standard_tableaux,
    psi,
    seminormal_matrix,
)
from .tensors import (
    AlgMatrix,
    RationalAlgebra,
    TensorElement,
    full_trace,
    perm_tensor,
    right_mul_group_algebra,
    tensor_matmul,
    tensor_product,
)
from .weyl import WeylAlgebra, WeylElement, WeylMonomial, weyl_apply, weyl_multiply

__all__ = [
    "AlgMatrix",
    "Centrality",
    "EnvelopingAlgebra",
    "GroupAlgebraElement",
    "Partition",
    "Permutation",
    "RationalAlgebra",
    "RepMatrix",
    "StandardTableau",
    "TensorElement",
    "UglElement",
    "VerificationReport",
    "WeylAlgebra",
    "WeylElement",
    "WeylMonomial",
    "all_partitions",
    "all_permutations",
    "build_D",
    "build_E",
    "build_X",
    "character_element",
    "compose",
    "content",
    "dimension",
    "embed",
    "enumerate_standard_tableaux",
    "full_trace",
    "ga_multiply",
    "generator_order",
    "hc_eigenvalue",
    "is_central",
    "jm_element",
    "lhs_theorem",
    "perm_tensor",
    "psi",
    "quantum_immanant",
    "rhs_theorem",
    "right_mul_group_algebra",
    "seminormal_matrix",
    "sweep",
    "tensor_matmul",
    "tensor_product",
    "ugl_multiply",
    "ugl_to_weyl",
    "verify_corollary",
    "verify_proof_steps",
    "verify_theorem",
    "weyl_apply",
    "weyl_multiply",
]
