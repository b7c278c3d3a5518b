"""Pairwise relation profiles and the implications that must hold between them."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .canon import TfWitness, cdc_certificate, certificate, tf_isomorphism
from .errors import ConsistencyError, DimensionError
from .graph import Graph
from .spectral import comain, same_principal_main_vectors
from .walks import (
    main_eigenspace_equal,
    related_walk_matrices,
    same_walk_matrices_all_k,
    same_walk_matrix,
    walk_matrix_k,
)

# Stable labels used in reports.
CDC_IMPLIES_SAME_W = "THM_3_2"
SAME_W_IMPLIES_SAME_SPACE = "COR_3_6"
SAME_VECTORS_IMPLY_SAME_SPACE = "DEF_MAIN"
COMAIN_AND_VECTORS_IMPLY_ALL_K = "THM_5_5"
VECTORS_WITHOUT_COMAIN_EXCLUDE_SAME_W = "PROP_5_3"
RELATED_IFF_SAME_SPACE = "THM_5_6"


@dataclass(frozen=True)
class RelationProfile:
    comain: bool
    same_walk_matrix: bool
    same_all_k_walk_matrices: bool
    same_main_eigenspace: bool
    same_principal_main_vectors: bool
    related_walk_matrices: bool
    cdc_isomorphic: bool
    same_two_walk_matrix: bool  # W(2); W(p) is only j when p = 1

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)


@dataclass(frozen=True)
class PairComparison:
    profile: RelationProfile
    witness: TfWitness | None
    q: list[list[Fraction]] | None  # W_G Q = W_H, on the labelling actually compared
    compared_g: Graph  # g, relabelled by the TF witness when one exists


def compare(g: Graph, h: Graph) -> PairComparison:
    """Evaluate every relation for the pair.

    When the CDCs are isomorphic, the labelling-sensitive relations are
    evaluated on g relabelled by the witness row permutation: A_H^k j equals
    A_G^k j permuted by Q for every k, so that relabelling realises the
    common walk matrix.
    """
    if g.n != h.n:
        raise DimensionError(f"orders differ: {g.n} vs {h.n} (pad with isolated vertices)")
    cdc_iso = cdc_certificate(g) == cdc_certificate(h)
    witness = tf_isomorphism(g, h) if cdc_iso else None
    if cdc_iso and witness is None:
        raise ConsistencyError("isomorphic CDCs but no TF-isomorphism found")
    gg = g.permute(witness.q) if witness else g
    q = related_walk_matrices(gg, h)
    profile = RelationProfile(
        comain=comain(g, h),
        same_walk_matrix=same_walk_matrix(gg, h),
        same_all_k_walk_matrices=same_walk_matrices_all_k(gg, h),
        same_main_eigenspace=main_eigenspace_equal(gg, h),
        same_principal_main_vectors=same_principal_main_vectors(gg, h),
        related_walk_matrices=q is not None,
        cdc_isomorphic=cdc_iso,
        same_two_walk_matrix=walk_matrix_k(gg, 2) == walk_matrix_k(h, 2),
    )
    return PairComparison(profile, witness, q, gg)


def relation_profile(g: Graph, h: Graph) -> RelationProfile:
    return compare(g, h).profile


def implication_violations(pr: RelationProfile) -> list[str]:
    found = []
    if pr.cdc_isomorphic and not pr.same_walk_matrix:
        found.append(CDC_IMPLIES_SAME_W)
    if pr.same_walk_matrix and not pr.same_main_eigenspace:
        found.append(SAME_W_IMPLIES_SAME_SPACE)
    if pr.same_principal_main_vectors and not pr.same_main_eigenspace:
        found.append(SAME_VECTORS_IMPLY_SAME_SPACE)
    if pr.comain and pr.same_principal_main_vectors and not pr.same_all_k_walk_matrices:
        found.append(COMAIN_AND_VECTORS_IMPLY_ALL_K)
    if pr.same_principal_main_vectors and not pr.comain and pr.same_two_walk_matrix:
        found.append(VECTORS_WITHOUT_COMAIN_EXCLUDE_SAME_W)
    if pr.related_walk_matrices != pr.same_main_eigenspace:
        found.append(RELATED_IFF_SAME_SPACE)
    return found


def same_cdc_pairs(corpus: Sequence[Graph], cdc_certs: Sequence[bytes] | None = None) -> list[tuple[int, int]]:
    """Index pairs (i < j) of non-isomorphic graphs whose CDCs are isomorphic."""
    if cdc_certs is None:
        cdc_certs = [cdc_certificate(g) for g in corpus]
    groups: dict[bytes, list[int]] = defaultdict(list)
    for i, cert in enumerate(cdc_certs):
        groups[cert].append(i)
    pairs = []
    for members in groups.values():
        for i, j in combinations(members, 2):
            if certificate(corpus[i]) != certificate(corpus[j]):
                pairs.append((i, j))
    return sorted(pairs)


def check_question_cdc_implies_comain(corpus: Sequence[Graph]) -> list[tuple[int, int]]:
    """Pairs with isomorphic CDCs that are not comain (0-based indices)."""
    return [(i, j) for i, j in same_cdc_pairs(corpus) if not comain(corpus[i], corpus[j])]
