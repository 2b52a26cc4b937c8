from .tensor import IntersectionTensor, WdrWitness, intersection_tensor, \
    intersection_tensor_from_matrices
from .products import TypeSet, relation_product, relation_power, closed_subset, \
    check_product_associativity
from .flags import SchemeReport, scheme_flags, is_commutative, is_regular, \
    check_regular_values
from .psets import pset
from .identities import IdentityReport, check_scheme_identities

__all__ = ['IntersectionTensor', 'WdrWitness', 'intersection_tensor',
           'intersection_tensor_from_matrices', 'TypeSet', 'relation_product',
           'relation_power', 'closed_subset', 'check_product_associativity',
           'SchemeReport', 'scheme_flags', 'is_commutative', 'is_regular',
           'check_regular_values', 'pset',
           'IdentityReport', 'check_scheme_identities']
