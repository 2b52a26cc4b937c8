from .circuits import Circuit, circuits_through_arc
from .purity import PurityEntry, PurityReport, arc_is_pure, purity_report
from .configurations import ConfigEntry, ConfigReport, config_report, \
    CharacterizationVerdict, verify_mixed_arc_characterization
from .delta import delta_component, is_complete_bipartite, check_delta_structure
from .lemmas import conditional_lemma_suite, CHECK_NAMES
from .verdicts import LemmaVerdict

__all__ = ['Circuit', 'circuits_through_arc', 'PurityEntry', 'PurityReport',
           'arc_is_pure', 'purity_report', 'ConfigEntry', 'ConfigReport',
           'config_report', 'CharacterizationVerdict',
           'verify_mixed_arc_characterization', 'delta_component',
           'is_complete_bipartite', 'check_delta_structure',
           'conditional_lemma_suite', 'CHECK_NAMES', 'LemmaVerdict']
