"""Net frequency of strings over an augmented suffix array."""

from .crl import CrlIndex, build_crl, list_distinct
from .errors import IndexFormatError, NetFreqError, OutOfBounds, OutOfRange, SentinelCollision
from .nf_all import (
    Candidate,
    IntervalFrame,
    NetReport,
    NfMultiset,
    all_nf_extract_direct,
    all_nf_extract_traverse,
    all_nf_traverse,
    candidate,
)
from .nf_query import is_net_occurrence, single_nf_asa, single_nf_crl, single_nf_hsa
from .stats import CorpusStats, compute_stats, irreducible_lcp_sum
from .suffix_index import SaInterval, SuffixIndex, build_index, ell, frequency, load_index, sa_interval, save_index
from .text import Occurrence, Span, Text, load_text, substring

__all__ = [
    "Candidate",
    "CorpusStats",
    "CrlIndex",
    "IndexFormatError",
    "IntervalFrame",
    "NetFreqError",
    "NetReport",
    "NfMultiset",
    "Occurrence",
    "OutOfBounds",
    "OutOfRange",
    "SaInterval",
    "SentinelCollision",
    "Span",
    "SuffixIndex",
    "Text",
    "all_nf_extract_direct",
    "all_nf_extract_traverse",
    "all_nf_traverse",
    "build_crl",
    "build_index",
    "candidate",
    "compute_stats",
    "ell",
    "frequency",
    "irreducible_lcp_sum",
    "is_net_occurrence",
    "list_distinct",
    "load_index",
    "load_text",
    "sa_interval",
    "save_index",
    "single_nf_asa",
    "single_nf_crl",
    "single_nf_hsa",
    "substring",
]
