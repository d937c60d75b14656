"""Sweep reports: verdict, witnesses, sample counts.

A pass never claims more than the sweep saw; summaries always state the
instance count, and a failing report carries replayable witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    suite: str
    verdict: str  # "pass" | "fail"
    witnesses: list[dict] = field(default_factory=list)
    sample: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.verdict not in ("pass", "fail"):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == "fail" and not self.witnesses:
            raise ValueError("a failing report needs at least one witness")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def instances(self) -> int:
        return sum(self.sample.values())

    def summary(self) -> str:
        breakdown = ", ".join(f"{v} {k}" for k, v in sorted(self.sample.items()))
        if self.passed:
            head = f"{self.suite}: pass - no counterexample in {self.instances} instances"
        else:
            head = f"{self.suite}: fail - {len(self.witnesses)} witness(es)"
        return f"{head} ({breakdown})" if breakdown else head

    def to_doc(self) -> dict:
        return {
            "format": "semiab-report",
            "version": 1,
            "suite": self.suite,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "sampleSize": dict(self.sample),
            "notes": list(self.notes),
        }


def merge_reports(suite: str, parts: list[Report]) -> Report:
    """Combine per-configuration reports into one suite report."""
    witnesses = [w for p in parts for w in p.witnesses]
    sample: dict[str, int] = {}
    notes: list[str] = []
    for p in parts:
        for k, v in p.sample.items():
            sample[k] = sample.get(k, 0) + v
        for n in p.notes:
            if n not in notes:
                notes.append(n)
    verdict = "pass" if all(p.passed for p in parts) else "fail"
    return Report(suite, verdict, witnesses, sample, notes)
