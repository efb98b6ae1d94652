"""Probable-prime generation built on the strong Lucas test.

Two generators share a config and an outcome type:

  * ``strong_luc_generate`` draws uniform odd k-bit candidates, screens
    them (Jacobi filter, small-prime divisibility, twin-prime-product
    square check), and keeps the first one surviving t test rounds.
  * ``prime_inc_luc`` draws one odd k-bit start and walks upward in steps
    of 2 through a bounded window, screening by a remainder table that is
    updated incrementally instead of dividing afresh; running out of
    window is a ``Fail`` result, not an error.

Both record a per-candidate transcript (value plus rejection stage) and
are deterministic given (config, seed).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field

from .kernel import gcd, is_perfect_square, jacobi, sieve_primes
from .lucas import ParamSearchError, sample_params, select_d, strong_lucas_round

# Uniform generation keeps drawing until something survives; this cap turns
# a pathological config into a diagnosable error instead of a hang.
MAX_UNIFORM_DRAWS = 10 ** 6


@dataclass(frozen=True)
class GenConfig:
    """Shared knobs for both generators.

    ``d`` fixes the discriminant; None means the uniform generator uses 5
    and the incremental one picks a fresh discriminant per candidate by
    the alternating-sign sweep.  ``screen`` is how many leading odd primes
    the divisibility screen uses.  ``window`` (incremental only) is the
    number of candidates before giving up; None picks 10 * ceil(k * ln 2).
    ``jacobi_filter`` / ``square_screen`` opt the incremental walk into
    the uniform generator's extra screens.
    """

    bits: int
    rounds: int = 1
    d: int | None = None
    screen: int = 8
    window: int | None = None
    seed: int | None = None
    jacobi_filter: bool = False
    square_screen: bool = False

    def __post_init__(self) -> None:
        if self.bits < 5:
            raise ValueError("need bits >= 5")
        if self.rounds < 1:
            raise ValueError("need rounds >= 1")
        if self.screen < 2:
            raise ValueError("need screen >= 2")
        if self.window is not None and self.window < 1:
            raise ValueError("need window >= 1")
        if self.d is not None:
            if self.d % 4 not in (0, 1):
                raise ValueError("discriminant must be 0 or 1 mod 4")
            if self.d > 0 and is_perfect_square(self.d):
                raise ValueError("discriminant must not be a square")


@dataclass
class GenOutcome:
    """What a generator run produced.

    ``result`` is the probable prime, or None for the incremental
    generator's Fail.  ``transcript`` has one entry per candidate:
    {"n": hex, "stage": where it stopped, "rounds": rounds it survived}.
    """

    result: int | None
    candidates_tested: int
    rounds_run: int
    transcript: list[dict] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.result is not None

    def to_jsonl(self) -> str:
        return "".join(json.dumps(entry) + "\n" for entry in self.transcript)


class RemainderTable:
    """Divisibility screen with O(#primes) step updates and no division.

    Holds start mod p for each screen prime; advancing the candidate by a
    step adds the step to every residue.  A candidate is divisible by a
    screen prime exactly when its residue is 0.
    """

    def __init__(self, start: int, primes: list[int]):
        self.primes = tuple(primes)
        self.residues = [start % p for p in self.primes]

    def advance(self, step: int = 2) -> None:
        self.residues = [(r + step) % p
                         for r, p in zip(self.residues, self.primes)]

    def smallest_zero(self) -> int | None:
        for r, p in zip(self.residues, self.primes):
            if r == 0:
                return p
        return None

    def passes(self) -> bool:
        return self.smallest_zero() is None


def _screen_primes(count: int) -> list[int]:
    primes = [p for p in sieve_primes(1000) if p > 2]
    if count > len(primes):
        raise ValueError("screen depth beyond the sieved prime list")
    return primes[:count]


def _draw_odd(bits: int, rng: random.Random) -> int:
    # top and bottom bit forced: odd, exactly `bits` bits
    return (1 << (bits - 1)) | (rng.getrandbits(bits - 2) << 1) | 1


def _run_rounds(n: int, d: int, rounds: int, rng: random.Random) -> tuple[int, str]:
    """(rounds survived, reason); survives all -> reason 'accepted'."""
    for i in range(rounds):
        try:
            params = sample_params(n, d, rng)
        except ParamSearchError:
            # no unit Q in 128 draws: n is riddled with factors
            return i, "param-search"
        res = strong_lucas_round(n, params)
        if not res:
            return i, res.reason
    return rounds, "accepted"


def strong_luc_generate(cfg: GenConfig,
                        rng: random.Random | None = None) -> GenOutcome:
    """Uniform-choice generation: draw, screen, test t rounds, repeat.

    The screens, in order: the Jacobi symbol of the discriminant must be
    -1; the candidate must not share a factor with the discriminant, nor
    be divisible by any of the first ``screen`` odd primes, nor have
    n + 1 a perfect square (which would allow a twin-prime product
    through).  Each test round draws fresh parameters.
    """
    if rng is None:
        rng = random.Random(cfg.seed)
    d = 5 if cfg.d is None else cfg.d
    screen = _screen_primes(cfg.screen)
    transcript: list[dict] = []
    rounds_run = 0
    for tested in range(1, MAX_UNIFORM_DRAWS + 1):
        n = _draw_odd(cfg.bits, rng)
        entry = {"n": hex(n), "stage": "", "rounds": 0}
        transcript.append(entry)
        if jacobi(d, n) != -1:
            entry["stage"] = "jacobi-filter"
            continue
        if gcd(d, n) > 1:
            entry["stage"] = "shares-factor"
            continue
        div = next((p for p in screen if n % p == 0 and n != p), None)
        if div is not None:
            entry["stage"] = "small-factor"
            continue
        if is_perfect_square(n + 1):
            entry["stage"] = "square"
            continue
        survived, reason = _run_rounds(n, d, cfg.rounds, rng)
        rounds_run += survived if reason == "accepted" else survived + 1
        entry["rounds"] = survived
        if reason != "accepted":
            entry["stage"] = f"round-{survived + 1}:{reason}"
            continue
        entry["stage"] = "accepted"
        return GenOutcome(result=n, candidates_tested=tested,
                          rounds_run=rounds_run, transcript=transcript)
    raise RuntimeError(f"no survivor in {MAX_UNIFORM_DRAWS} draws; "
                       f"check the configuration")


def prime_inc_luc(cfg: GenConfig,
                  rng: random.Random | None = None) -> GenOutcome:
    """Incremental search: one random start, +2 steps, bounded window.

    Per candidate: the remainder table flags small-prime divisibility
    without dividing (oddness is an invariant of the walk, asserted, not
    divided for); survivors get t strong Lucas rounds, with the
    discriminant fixed by config or chosen per candidate.  Returns a Fail
    outcome (result None) when the window is exhausted.
    """
    if rng is None:
        rng = random.Random(cfg.seed)
    window = cfg.window
    if window is None:
        window = 10 * math.ceil(cfg.bits * math.log(2))
    screen = _screen_primes(cfg.screen)
    n0 = _draw_odd(cfg.bits, rng)
    table = RemainderTable(n0, screen)
    transcript: list[dict] = []
    rounds_run = 0
    n = n0
    for tested in range(1, window + 1):
        entry = {"n": hex(n), "stage": "", "rounds": 0}
        transcript.append(entry)
        assert n % 2 == 1  # the walk preserves oddness; 2 never divides n
        stage = _screen_candidate(n, cfg, table, screen)
        if stage is None:
            if cfg.d is not None:
                d = cfg.d
            else:
                try:
                    d = select_d(n, "A")
                except ParamSearchError:
                    d = None
                    stage = "d-search"
            if d is not None:
                survived, reason = _run_rounds(n, d, cfg.rounds, rng)
                rounds_run += survived if reason == "accepted" else survived + 1
                entry["rounds"] = survived
                stage = (None if reason == "accepted"
                         else f"round-{survived + 1}:{reason}")
        if stage is None:
            entry["stage"] = "accepted"
            return GenOutcome(result=n, candidates_tested=tested,
                              rounds_run=rounds_run, transcript=transcript)
        entry["stage"] = stage
        n += 2
        table.advance(2)
    return GenOutcome(result=None, candidates_tested=window,
                      rounds_run=rounds_run, transcript=transcript)


def _screen_candidate(n: int, cfg: GenConfig, table: RemainderTable,
                      screen: list[int]) -> str | None:
    if not table.passes():
        # a screen prime divides n -- unless n IS that prime
        p = table.smallest_zero()
        if n != p:
            return "small-factor"
    if cfg.d is not None and gcd(cfg.d, n) > 1:
        return "shares-factor"
    if cfg.jacobi_filter:
        d = cfg.d if cfg.d is not None else 5
        if jacobi(d, n) != -1:
            return "jacobi-filter"
    if cfg.square_screen and is_perfect_square(n + 1):
        return "square"
    return None
