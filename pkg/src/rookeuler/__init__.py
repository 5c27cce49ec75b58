"""Rook-Eulerian polynomials of Ferrers boards and related real-rootedness questions."""

from ._kernels import BACKEND
from .boards import FerrersBoard, rook_eulerian_brute, rook_eulerian_recursive, rook_eulerian_refined
from .exactpoly import (IntPolynomial, interlaces, is_interlacing_sequence, is_log_concave,
                        is_real_rooted, is_ultra_log_concave, is_unimodal)
from .invseq import SVector, s_eulerian, search_s_match
from .multiset import Content, SkewBoard, multiset_refined, multiset_rook_eulerian
from .perms import OrderKind, Permutation, StatKind, interval_stat_polynomial, lower_interval
from .posets import FinitePoset, permutation_poset, w_polynomial, weak_interval_stat_polynomial

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FerrersBoard", "rook_eulerian_brute", "rook_eulerian_recursive",
    "rook_eulerian_refined", "IntPolynomial", "interlaces", "is_interlacing_sequence",
    "is_log_concave", "is_real_rooted", "is_ultra_log_concave", "is_unimodal", "SVector",
    "s_eulerian", "search_s_match", "Content", "SkewBoard", "multiset_refined",
    "multiset_rook_eulerian", "OrderKind", "Permutation", "StatKind",
    "interval_stat_polynomial", "lower_interval", "FinitePoset", "permutation_poset",
    "w_polynomial", "weak_interval_stat_polynomial",
]
