from .report import AnalysisReport
from .pipeline import analyze, diameter_two_branch
from .search import Survivor, ClassificationResult, search_circulants, search_all_digraphs, \
    MAX_ALL_DIGRAPHS_ORDER
from .corpus import CorpusFailure, CorpusVerdict, corpus_verify
from ..cayley import SearchRangeError

__all__ = ['AnalysisReport', 'analyze', 'diameter_two_branch', 'Survivor',
           'ClassificationResult', 'search_circulants', 'search_all_digraphs',
           'MAX_ALL_DIGRAPHS_ORDER', 'CorpusFailure', 'CorpusVerdict', 'corpus_verify',
           'SearchRangeError']
