"""Exhaustive and randomized verification of the algebraic claims about multiset mappings."""

from .claims import CATALOG, Claim, claim_ids, get_claim
from .engine import AuditBounds, AuditReport, ClaimResult, Instance, replay, run_all, run_claim
from .instances import enumerate_maps, enumerate_multisets, enumerate_spaces

__all__ = [
    "CATALOG",
    "Claim",
    "claim_ids",
    "get_claim",
    "AuditBounds",
    "AuditReport",
    "ClaimResult",
    "Instance",
    "replay",
    "run_all",
    "run_claim",
    "enumerate_maps",
    "enumerate_multisets",
    "enumerate_spaces",
]
