"""Exhaustive and seeded sweeps that machine-check the bounds, with reports."""
from .audits import AUDITS
from .enumeration import enumerate_class
from .export import render_report, summary_frame, write_report, write_witnesses
from .sweeps import replay_violation, run_claim, search_conjecture, verify_baseline, verify_theorem
from .tally import SweepTally

__all__ = [
    "AUDITS",
    "enumerate_class",
    "render_report",
    "summary_frame",
    "write_report",
    "write_witnesses",
    "replay_violation",
    "run_claim",
    "search_conjecture",
    "verify_baseline",
    "verify_theorem",
    "SweepTally",
]
