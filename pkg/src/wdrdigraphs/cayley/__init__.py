from .cayley_spec import CayleySpec, cayley_cyclic, cayley_product
from .catalog import CatalogEntry, classification_catalog
from .enumeration import enumerate_circulants, count_circulants, SearchRangeError, \
    MAX_CIRCULANT_ORDER

__all__ = ['CayleySpec', 'cayley_cyclic', 'cayley_product', 'CatalogEntry',
           'classification_catalog', 'enumerate_circulants', 'count_circulants',
           'SearchRangeError', 'MAX_CIRCULANT_ORDER']
