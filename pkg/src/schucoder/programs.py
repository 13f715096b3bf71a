"""High-level reversible register programs and their interpreter.

Four built-in programs operate on integer registers (no gates):

* RANK_SPLIT        (x, 0, 0)  -> (x, rank(x), weight(x)):   two-register ranker.
* UNRANK_SPLIT      (0, y, 0)  -> (unrank(y), 0, 0):          two-register unranker.
* RANK_IN_PLACE     (x, S=0)   -> (rank(x), S=0):             single-register ranker.
* UNRANK_IN_PLACE   (y, S=0)   -> (unrank(y), S=0):           single-register unranker.

Each program is an unravelled straight-line list of guarded statements; every
statement's effect commutes with its own guard, so running the reversed list
with inverted effects undoes the program step by step.  The interpreter is
the executable reference that the gate compiler is verified against.

Registers: X is a signed (n+1)-bit accumulator (two's-complement semantics,
"X >= 0" is a one-bit sign test), Y is a second accumulator used only by the
split programs, and S is a weight counter of ceil(log2 n)+1 bits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional

from .combinatorics import binom


class ProgramId(enum.Enum):
    RANK_SPLIT = "rank-split"
    UNRANK_SPLIT = "unrank-split"
    RANK_IN_PLACE = "rank-in-place"
    UNRANK_IN_PLACE = "unrank-in-place"


@dataclass
class RegisterFile:
    """Integer-valued register state for one program run."""

    n: int
    X: int = 0
    Y: Optional[int] = None  # present only for the split programs
    S: int = 0

    def copy(self) -> "RegisterFile":
        return replace(self)


def low_bits(value: int, j: int) -> int:
    """The j least-significant bits of ``value`` as an unsigned integer.

    Works for negative values via two's-complement semantics; j = 0 gives 0
    (an empty field), in which case comparison guards reduce to constants
    and no comparison machinery is needed.
    """
    return value & ((1 << j) - 1)


# --------------------------------------------------------------------------
# Guards and effects
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Guard:
    """A condition on the register file.

    kinds:
      bit        register ``reg`` has bit ``pos`` set
      s_eq       S == const
      s_le       S <= const
      s_ge       S >= const
      nonneg     register ``reg`` >= 0 (sign-bit test)
      ge         register ``reg`` >= const (signed, full width)
      trunc_ge   low ``width`` bits of ``reg`` >= const (unsigned)
    """

    kind: str
    reg: str = ""
    pos: int = 0
    width: int = 0
    const: int = 0

    def holds(self, r: RegisterFile) -> bool:
        if self.kind == "bit":
            return bool((_get(r, self.reg) >> self.pos) & 1)
        if self.kind == "s_eq":
            return r.S == self.const
        if self.kind == "s_le":
            return r.S <= self.const
        if self.kind == "s_ge":
            return r.S >= self.const
        if self.kind == "nonneg":
            return _get(r, self.reg) >= 0
        if self.kind == "ge":
            return _get(r, self.reg) >= self.const
        if self.kind == "trunc_ge":
            return low_bits(_get(r, self.reg), self.width) >= self.const
        raise ValueError(f"unknown guard kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "bit":
            return f"{self.reg}[{self.pos}]"
        if self.kind == "s_eq":
            return f"S={self.const}"
        if self.kind == "s_le":
            return f"S<={self.const}"
        if self.kind == "s_ge":
            return f"S>={self.const}"
        if self.kind == "nonneg":
            return f"{self.reg}>=0"
        if self.kind == "ge":
            return f"{self.reg}>={self.const}"
        return f"low{self.width}({self.reg})>={self.const}"


def _get(r: RegisterFile, reg: str) -> int:
    if reg == "X":
        return r.X
    if reg == "Y":
        if r.Y is None:
            raise ValueError("program statement references absent register Y")
        return r.Y
    if reg == "S":
        return r.S
    raise ValueError(f"unknown register {reg!r}")


def _set(r: RegisterFile, reg: str, value: int) -> None:
    if reg == "X":
        r.X = value
    elif reg == "Y":
        r.Y = value
    elif reg == "S":
        r.S = value
    else:
        raise ValueError(f"unknown register {reg!r}")


@dataclass(frozen=True)
class Stmt:
    """One guarded reversible statement: if all guards hold, apply the effect.

    effects:
      add   reg += amount  (amount may be negative)
      flip  reg ^= 1 << pos
    """

    guards: tuple[Guard, ...]
    effect: str
    reg: str
    amount: int = 0
    pos: int = 0

    def run(self, r: RegisterFile) -> None:
        if all(g.holds(r) for g in self.guards):
            if self.effect == "add":
                _set(r, self.reg, _get(r, self.reg) + self.amount)
            elif self.effect == "flip":
                _set(r, self.reg, _get(r, self.reg) ^ (1 << self.pos))
            else:
                raise ValueError(f"unknown effect {self.effect!r}")

    def inverted(self) -> "Stmt":
        if self.effect == "add":
            return replace(self, amount=-self.amount)
        return self  # flips are self-inverse

    def __str__(self) -> str:
        action = (
            f"{self.reg}+={self.amount}" if self.effect == "add" else f"{self.reg}^=bit{self.pos}"
        )
        if self.guards:
            return f"if {' and '.join(map(str, self.guards))}: {action}"
        return action


def invert_statements(stmts: Iterable[Stmt]) -> list[Stmt]:
    """The statement list that undoes ``stmts``: reversed, each inverted."""
    return [s.inverted() for s in reversed(list(stmts))]


# --------------------------------------------------------------------------
# Program builders (loops unravelled for a fixed n)
# --------------------------------------------------------------------------

def build_rank_split(n: int) -> list[Stmt]:
    """Two-register ranker: reads X, accumulates rank(X) into Y, weight into S."""
    stmts: list[Stmt] = []
    bit = lambda j: Guard("bit", reg="X", pos=j)
    s_eq = lambda m: Guard("s_eq", const=m)
    stmts.append(Stmt((bit(0),), "add", "S", 1))
    for j in range(1, n):
        stmts.append(Stmt((bit(j),), "add", "S", 1))
        for m in range(0, j + 2):  # the m = j+1 pass adds C(j, j+1) = 0
            stmts.append(Stmt((bit(j), s_eq(m)), "add", "Y", binom(j, m)))
    for i in range(n):
        stmts.append(Stmt((Guard("s_ge", const=i + 1),), "add", "Y", binom(n, i)))
    return stmts


def weight_clearing_suffix(n: int) -> list[Stmt]:
    """Counts S back to zero off the input bits: one guarded decrement per bit."""
    return [Stmt((Guard("bit", reg="X", pos=j),), "add", "S", -1) for j in range(n)]


def _unrank_prefix(n: int, reg: str) -> list[Stmt]:
    """The two scan loops shared by both unrankers, acting on ``reg``.

    First loop: subtract every block size, counting in S how many partial
    sums leave ``reg`` non-negative — this recovers the weight.  Second
    loop: add back the block sizes at or above the weight, leaving the
    in-block index.  (The second loop's guard is S <= m; see the ledger for
    the correction of the printed direction.)
    """
    stmts: list[Stmt] = []
    for m in range(n + 1):
        stmts.append(Stmt((), "add", reg, -binom(n, m)))
        stmts.append(Stmt((Guard("nonneg", reg=reg),), "add", "S", 1))
    for m in range(n + 1):
        stmts.append(Stmt((Guard("s_le", const=m),), "add", reg, binom(n, m)))
    return stmts


def _unrank_stage(n: int, p: int, value_reg: str, bits_reg: str, shared: bool) -> list[Stmt]:
    """One bit-recovery stage of the unranker (bit w = n-1-p).

    For the split program (``shared`` false) the threshold test is the
    literal signed comparison on the full residue register; for the
    in-place program it reads only the low w bits of the shared register,
    and at w = 0 the guard constant-folds to (0 >= k): dropped for k = 1,
    reduced to the bare S test for k = 0.
    """
    stmts: list[Stmt] = []
    w = n - 1 - p
    for i in range(0, n - p + 1):
        k = binom(w, i)
        flip_guards: Optional[tuple[Guard, ...]]
        if not shared:
            flip_guards = (Guard("s_eq", const=i), Guard("ge", reg=value_reg, const=k))
        elif w > 0:
            flip_guards = (Guard("s_eq", const=i), Guard("trunc_ge", reg=value_reg, width=w, const=k))
        else:
            flip_guards = (Guard("s_eq", const=i),) if k == 0 else None
        if flip_guards is not None:
            stmts.append(Stmt(flip_guards, "flip", bits_reg, pos=w))
        stmts.append(Stmt((Guard("s_eq", const=i), Guard("bit", reg=bits_reg, pos=w)), "add", value_reg, -k))
    stmts.append(Stmt((Guard("bit", reg=bits_reg, pos=w),), "add", "S", -1))
    return stmts


def build_unrank_split(n: int) -> list[Stmt]:
    """Two-register unranker: consumes Y = rank code, builds the string in X."""
    stmts = _unrank_prefix(n, "Y")
    for p in range(n):
        stmts.extend(_unrank_stage(n, p, value_reg="Y", bits_reg="X", shared=False))
    return stmts


def build_unrank_in_place(n: int) -> list[Stmt]:
    """Single-register unranker: X starts as the code, ends as the string.

    Identical to the split program except the residue and the recovered
    bits share X, with threshold tests restricted to the low w bits.
    """
    stmts = _unrank_prefix(n, "X")
    for p in range(n):
        stmts.extend(_unrank_stage(n, p, value_reg="X", bits_reg="X", shared=True))
    return stmts


def build_rank_in_place(n: int) -> list[Stmt]:
    """Single-register ranker, written directly in forward form.

    Stages run from bit 0 upward (p descending), each stage first counting
    the bit into S, then adding the bit's contribution and clearing the bit;
    two repair loops then convert the in-block index to the full code.
    This list equals invert_statements(build_unrank_in_place(n)) exactly,
    which the tests assert.
    """
    stmts: list[Stmt] = []
    for p in range(n - 1, -1, -1):
        w = n - 1 - p
        stmts.append(Stmt((Guard("bit", reg="X", pos=w),), "add", "S", 1))
        for i in range(n - p, -1, -1):
            k = binom(w, i)
            stmts.append(Stmt((Guard("s_eq", const=i), Guard("bit", reg="X", pos=w)), "add", "X", k))
            if w == 0:
                if k == 0:
                    stmts.append(Stmt((Guard("s_eq", const=i),), "flip", "X", pos=w))
            else:
                stmts.append(
                    Stmt(
                        (Guard("s_eq", const=i), Guard("trunc_ge", reg="X", width=w, const=k)),
                        "flip",
                        "X",
                        pos=w,
                    )
                )
    for m in range(n, -1, -1):
        stmts.append(Stmt((Guard("s_le", const=m),), "add", "X", -binom(n, m)))
    for m in range(n, -1, -1):
        stmts.append(Stmt((Guard("nonneg", reg="X"),), "add", "S", -1))
        stmts.append(Stmt((), "add", "X", binom(n, m)))
    return stmts


def build_program(program: ProgramId, n: int) -> list[Stmt]:
    builder = {
        ProgramId.RANK_SPLIT: build_rank_split,
        ProgramId.UNRANK_SPLIT: build_unrank_split,
        ProgramId.RANK_IN_PLACE: build_rank_in_place,
        ProgramId.UNRANK_IN_PLACE: build_unrank_in_place,
    }[program]
    return builder(n)


# --------------------------------------------------------------------------
# Interpreter
# --------------------------------------------------------------------------

class IntegrityError(AssertionError):
    """A register left its declared range, or a finalized register is nonzero."""


#: Registers that each program must return to exactly zero.
_FINALIZED: dict[ProgramId, tuple[str, ...]] = {
    ProgramId.RANK_SPLIT: (),  # S ends holding the weight by contract
    ProgramId.UNRANK_SPLIT: ("Y", "S"),
    ProgramId.RANK_IN_PLACE: ("S",),
    ProgramId.UNRANK_IN_PLACE: ("S",),
}


def run_statements(
    stmts: Iterable[Stmt],
    regs: RegisterFile,
    on_step: Optional[Callable[[int, Stmt, RegisterFile], None]] = None,
    check: bool = True,
) -> RegisterFile:
    """Execute a statement list on a copy of ``regs`` and return the result.

    ``on_step(step_index, statement, state_after)`` is called after every
    statement when provided.  With ``check`` on, range invariants are
    enforced after each step: S in [0, n], accumulators within signed
    (n+1)-bit range.
    """
    r = regs.copy()
    lo, hi = -(1 << r.n), 1 << r.n
    for step, stmt in enumerate(stmts):
        stmt.run(r)
        if check:
            if not 0 <= r.S <= r.n:
                raise IntegrityError(f"step {step} ({stmt}): S={r.S} outside [0, {r.n}]")
            if not lo <= r.X < hi:
                raise IntegrityError(f"step {step} ({stmt}): X={r.X} outside signed range")
            if r.Y is not None and not lo <= r.Y < hi:
                raise IntegrityError(f"step {step} ({stmt}): Y={r.Y} outside signed range")
        if on_step is not None:
            on_step(step, stmt, r)
    return r


def run_program(program: ProgramId, regs: RegisterFile, trace: Optional[list[str]] = None) -> RegisterFile:
    """Run one built-in program, enforcing its finalization contract.

    When ``trace`` is given, one line per statement is appended in the form
    "step#, statement-id, X, Y, S" (decimal; '-' for an absent Y).
    """
    stmts = build_program(program, regs.n)
    on_step = None
    if trace is not None:
        def on_step(step: int, stmt: Stmt, r: RegisterFile) -> None:
            y = "-" if r.Y is None else str(r.Y)
            trace.append(f"{step}, {stmt}, {r.X}, {y}, {r.S}")

    result = run_statements(stmts, regs, on_step=on_step)
    for reg in _FINALIZED[program]:
        if _get(result, reg) != 0:
            raise IntegrityError(f"{program.value}: register {reg} finalized nonzero ({_get(result, reg)})")
    return result


def check_split_disjointness(y: int, n: int) -> bool:
    """True iff the split unranker never holds a 1 in the same bit of X and Y.

    This is the property that justifies merging the residue and output
    registers into one: at every step of UNRANK_SPLIT on input y, the
    two's-complement bit patterns of X and Y share no set bit.
    """
    ok = True

    def watch(step: int, stmt: Stmt, r: RegisterFile) -> None:
        nonlocal ok
        assert r.Y is not None
        if r.X & low_bits(r.Y, n + 1):
            ok = False

    run_statements(build_unrank_split(n), RegisterFile(n=n, X=0, Y=y, S=0), on_step=watch)
    return ok
