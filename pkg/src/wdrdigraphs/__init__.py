from .digraphs import Digraph, TwoWayType, RelationPartition, build_digraph, two_way_partition
from .schemes import IntersectionTensor, SchemeReport, intersection_tensor, scheme_flags
from .arcs import purity_report, config_report, conditional_lemma_suite
from .cayley import CayleySpec, cayley_cyclic, cayley_product, classification_catalog
from .iso import Certificate, canonical_certificate, are_isomorphic
from .classify import AnalysisReport, analyze, search_circulants, search_all_digraphs, \
    corpus_verify
from .config import Settings, load_settings


__all__ = ['Digraph', 'TwoWayType', 'RelationPartition', 'build_digraph',
           'two_way_partition', 'IntersectionTensor', 'SchemeReport',
           'intersection_tensor', 'scheme_flags', 'purity_report', 'config_report',
           'conditional_lemma_suite', 'CayleySpec', 'cayley_cyclic', 'cayley_product',
           'classification_catalog', 'Certificate', 'canonical_certificate',
           'are_isomorphic', 'AnalysisReport', 'analyze', 'search_circulants',
           'search_all_digraphs', 'corpus_verify', 'Settings', 'load_settings']
