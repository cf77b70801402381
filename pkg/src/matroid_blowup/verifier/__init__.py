"""Independent oracles, the corpus, and the identity/congruence suites."""

from .congruences import congruence_scan, default_towers
from .corpus import CorpusConfig, CorpusEntry, build_corpus, graph_entry
from .identities import IDENTITIES, run_identity_suite
from .mutations import MUTATIONS, run_mutation
from .oracles import chromatic_by_deletion_contraction, chromatic_by_enumeration
from .report import IdentityReport, IdentityResult

__all__ = [
    "CorpusConfig", "CorpusEntry", "IDENTITIES", "IdentityReport", "IdentityResult",
    "MUTATIONS", "build_corpus", "chromatic_by_deletion_contraction",
    "chromatic_by_enumeration", "congruence_scan", "default_towers", "graph_entry",
    "run_identity_suite", "run_mutation",
]
