from .digraph import Digraph, Arc, build_digraph
from .distances import is_strongly_connected, distance_matrix, reach_mask, \
    rows_strongly_connected, UNREACHABLE
from .two_way_type import TwoWayType, IDENTITY, arc_type
from .partition import RelationPartition, two_way_partition, NON_CONSTANT

__all__ = ['Digraph', 'Arc', 'build_digraph', 'is_strongly_connected',
           'distance_matrix', 'reach_mask', 'rows_strongly_connected',
           'UNREACHABLE', 'TwoWayType', 'IDENTITY', 'arc_type',
           'RelationPartition', 'two_way_partition', 'NON_CONSTANT']
