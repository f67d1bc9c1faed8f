"""k-extendability and the connectivity bounds it implies."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .graph import Graph, is_bipartite, is_connected, vertex_connectivity
from .matching import Matching, enum_k_matchings, has_perfect_matching
from .report import TheoremReport, reproduction_data


def max_extendability_k(g: Graph) -> int:
    """Largest k for which k-extendability is defined, (n - 2) / 2."""
    return (g.n - 2) // 2


@lru_cache(maxsize=4096)
def is_k_extendable(g: Graph, k: int) -> tuple[bool, Optional[Matching]]:
    """Whether every k-matching extends to a perfect matching.

    Returns ``(answer, witness)``; the witness is the lexicographically
    first k-matching that does not extend. Graphs without any k-matching
    answer False with no witness. k = 0 asks for a perfect matching.
    """
    if g.n % 2:
        raise ValueError(f"k-extendability needs an even order, got n={g.n}")
    if not 0 <= k <= max_extendability_k(g):
        raise ValueError(f"k={k} outside 0..{max_extendability_k(g)} for n={g.n}")
    found = False
    for km in enum_k_matchings(g, k):
        found = True
        covered = 0
        for u, v in km.edges:
            covered |= 1 << u | 1 << v
        if not has_perfect_matching(g, covered):
            return False, km
    return found, None


@dataclass(frozen=True)
class ExtendabilityProfile:
    max_k: int
    failing_k: Optional[int]
    witness: Optional[Matching]

    def to_dict(self) -> dict:
        return {
            "max_k": self.max_k,
            "failing_k": self.failing_k,
            "witness_edges": [list(e) for e in self.witness.edges] if self.witness else [],
        }


def extendability_profile(g: Graph) -> ExtendabilityProfile:
    """Scan k upward and stop at the first failure.

    ``max_k`` is -1 without a perfect matching; ``failing_k`` is None when
    the graph is k-extendable for every admissible k.
    """
    if g.n % 2:
        raise ValueError(f"k-extendability needs an even order, got n={g.n}")
    for k in range(max_extendability_k(g) + 1):
        ok, witness = is_k_extendable(g, k)
        if not ok:
            return ExtendabilityProfile(k - 1, k, witness)
    return ExtendabilityProfile(max_extendability_k(g), None, None)


def check_theorem_1_1(g: Graph, k: int) -> TheoremReport:
    """k-extendable connected graphs are (k+1)-connected."""
    repro = reproduction_data(g, k=k)
    if not is_connected(g) or g.n % 2 or not 0 <= k <= max_extendability_k(g):
        return TheoremReport("thm11", hypothesis_met=False, conclusion_holds=None, reproduction=repro,
                             diagnostics={"k": k, "skipped": "disconnected, odd order or k out of range"})
    ok, witness = is_k_extendable(g, k)
    kappa, cert = vertex_connectivity(g)
    diag = {"k": k, "kappa": kappa, "cut": list(cert.cut)}
    if witness is not None:
        diag["non_extending"] = [list(e) for e in witness.edges]
    return TheoremReport("thm11", hypothesis_met=ok, conclusion_holds=kappa >= k + 1,
                         diagnostics=diag, reproduction=repro)


def check_theorem_1_2(g: Graph, k: int) -> TheoremReport:
    """k-extendable with k >= n/4: bipartite or 2k-connected."""
    repro = reproduction_data(g, k=k)
    if not is_connected(g) or g.n % 2 or not 0 <= k <= max_extendability_k(g):
        return TheoremReport("thm12", hypothesis_met=False, conclusion_holds=None, reproduction=repro,
                             diagnostics={"k": k, "skipped": "disconnected, odd order or k out of range"})
    if 4 * k < g.n:
        return TheoremReport("thm12", hypothesis_met=False, conclusion_holds=None, reproduction=repro,
                             diagnostics={"k": k, "skipped": "k < n/4"})
    ok, _ = is_k_extendable(g, k)
    kappa, _ = vertex_connectivity(g)
    bip = is_bipartite(g)
    return TheoremReport("thm12", hypothesis_met=ok, conclusion_holds=bip or kappa >= 2 * k,
                         diagnostics={"k": k, "kappa": kappa, "bipartite": bip}, reproduction=repro)
