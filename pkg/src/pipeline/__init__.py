"""
Batch verification of reduction results over a corpus
"""

from src.pipeline.runner import check_canonicality, check_triple, run_corpus_verification

__all__ = ["run_corpus_verification", "check_triple", "check_canonicality"]
