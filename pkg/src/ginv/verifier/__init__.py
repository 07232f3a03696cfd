"""Executable claim registry, relation schema and reports."""
from ginv.verifier.claims import (AllElements, Claim, ClaimResult, Counterexample, Pass,
                                  Sample, Skipped, run_claim)
from ginv.verifier.context import EvalContext
from ginv.verifier.registry import CLAIM_IDS, get_claim, registry

__all__ = ["AllElements", "Claim", "ClaimResult", "Counterexample", "EvalContext", "Pass",
           "Sample", "Skipped", "run_claim", "CLAIM_IDS", "get_claim", "registry"]
