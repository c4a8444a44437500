"""Step-counted simulation of experimental tests.

A test either terminates successfully after a fixed number of steps or runs
forever.  Observing a test for a finite budget can verify it, never refute
it; refutation needs a separate terminating test for the negation
(:class:`DecidableTest`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyList, InvalidTest


@dataclass(frozen=True)
class TestProcess:
    __test__ = False

    terminates_at: int | None  # None: diverges
    description: str = ""

    def __post_init__(self):
        t = self.terminates_at
        if t is not None and (isinstance(t, bool) or not isinstance(t, int) or t < 1):
            raise InvalidTest(f"termination step must be a positive integer, got {t!r}")

    @classmethod
    def terminates(cls, steps: int, description: str = "") -> TestProcess:
        return cls(steps, description)

    @classmethod
    def diverges(cls, description: str = "") -> TestProcess:
        return cls(None, description)

    @property
    def diverging(self) -> bool:
        return self.terminates_at is None


@dataclass(frozen=True)
class Outcome:
    verified: bool
    steps: int | None  # steps used when verified
    budget: int

    @property
    def pending(self) -> bool:
        return not self.verified


def run(test: TestProcess, budget: int) -> Outcome:
    if budget < 0:
        raise ValueError("budget must be non-negative")
    t = test.terminates_at
    if t is not None and t <= budget:
        return Outcome(True, t, budget)
    return Outcome(False, None, budget)


def conj_test(tests: Sequence[TestProcess]) -> TestProcess:
    """Run every test one after the other; diverges if any of them does.

    An empty list gives the trivially passing one-step test.
    """
    if not tests:
        return TestProcess(1, "empty conjunction (tautology)")
    if any(t.diverging for t in tests):
        return TestProcess(None, "conjunction with a diverging component")
    return TestProcess(sum(t.terminates_at for t in tests), f"conjunction of {len(tests)} tests")


@dataclass(frozen=True)
class DovetailTrace:
    round: int | None  # terminating round, None if no component terminates
    winner: int | None  # 1-based index of the first test to succeed in that round
    total_steps: int | None


def dovetail_round(tests: Sequence[TestProcess]) -> int | None:
    """First round in which some test ``i`` (1-based) runs long enough to finish."""
    rounds = [max(i, t.terminates_at) for i, t in enumerate(tests, 1) if not t.diverging]
    return min(rounds) if rounds else None


def dovetail_schedule(tests: Sequence[TestProcess]) -> DovetailTrace:
    """Round ``n`` restarts tests ``1..n`` and runs each for ``n`` steps.

    Every round is charged in full, so the total is ``sum(k * min(k, len))``
    over rounds ``1..n``.
    """
    if not tests:
        raise EmptyList("dovetailing needs at least one test")
    n = dovetail_round(tests)
    if n is None:
        return DovetailTrace(None, None, None)
    length = len(tests)
    winner = next(i for i, t in enumerate(tests[:n], 1)
                  if not t.diverging and t.terminates_at <= n)
    total = sum(k * min(k, length) for k in range(1, n + 1))
    return DovetailTrace(n, winner, total)


def dovetail_disj(tests: Sequence[TestProcess]) -> TestProcess:
    trace = dovetail_schedule(tests)
    if trace.round is None:
        return TestProcess(None, f"dovetailed disjunction of {len(tests)} diverging tests")
    return TestProcess(trace.total_steps,
                       f"dovetailed disjunction, test {trace.winner} succeeds in round {trace.round}")


@dataclass(frozen=True)
class DecidableTest:
    __test__ = False

    verify: TestProcess
    refute: TestProcess

    def __post_init__(self):
        if not self.verify.diverging and not self.refute.diverging:
            raise InvalidTest("a statement cannot be shown both true and false")

    def decide(self, budget: int) -> bool | None:
        """True or False once one side terminates within ``budget``, else None."""
        if run(self.verify, budget).verified:
            return True
        if run(self.refute, budget).verified:
            return False
        return None


def swan_search(stream: Sequence[str] | None) -> TestProcess:
    """Look at one swan per step and succeed on the first black one.

    ``None`` stands for an unbounded stream of white swans.
    """
    if stream is None:
        return TestProcess(None, "unbounded stream of white swans")
    for i, colour in enumerate(stream):
        if colour == "black":
            return TestProcess(i + 1, f"black swan at index {i}")
    return TestProcess(None, "no black swan in the observed stream")


def exhaustive_swan_search(stream: Sequence[str]) -> DecidableTest:
    """A finite stream known to be complete: absence of a black swan can be confirmed."""
    found = swan_search(stream)
    if not found.diverging:
        return DecidableTest(found, TestProcess(None))
    return DecidableTest(TestProcess(None), TestProcess(len(stream) + 1, "stream exhausted"))


def negation_gap_demo() -> dict:
    """Black-swan scenarios showing that failing to verify is not refuting."""
    with_black = ["white"] * 7 + ["black"] + ["white"] * 2
    found = run(swan_search(with_black), 10**6)
    endless = swan_search(None)
    budgets = (10, 10**3, 10**6)
    exhausted = exhaustive_swan_search([])
    return {
        "black_swan_at_7": {"verified": found.verified, "steps": found.steps},
        "all_white_unbounded": {str(b): run(endless, b).pending for b in budgets},
        "empty_stream_exhausted": {"decision": exhausted.decide(10)},
        "refutable_without_exhaustion": False,
    }


def simulate(tests: Sequence[TestProcess], goal: str, budget: int) -> dict:
    if goal == "conj":
        combined = conj_test(tests)
        trace = None
    elif goal == "dovetail":
        combined = dovetail_disj(tests)
        trace = dovetail_schedule(tests)
    else:
        raise ValueError(f"unknown goal {goal!r}")
    outcome = run(combined, budget)
    result = {
        "goal": goal,
        "budget": budget,
        "outcome": "Verified" if outcome.verified else "Pending",
        "steps": outcome.steps,
        "terminates": not combined.diverging,
        "required_steps": combined.terminates_at,
    }
    if trace is not None:
        result["round"] = trace.round
        result["winner"] = trace.winner
    return result
