from .certificate import Certificate, canonical_certificate
from .isomorphism import are_isomorphic
from .invariants import vertex_invariants, MAX_ORDER

__all__ = ['Certificate', 'canonical_certificate', 'are_isomorphic',
           'vertex_invariants', 'MAX_ORDER']
