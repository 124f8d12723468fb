"""3-CNF formulas: DIMACS parsing, brute-force SAT, normalization.

Literals are DIMACS-signed ints: +v / -v for variable v in 1..num_vars.
Clauses hold exactly three literals; repeated literals are allowed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence


class CnfError(ValueError):
    """Raised for malformed formulas or inputs outside an op's domain."""


@dataclass(frozen=True)
class Cnf3:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError(f"literal {lit} out of range in {clause}")


def parse_cnf(text: str) -> Cnf3:
    """Parse DIMACS CNF; every clause must have exactly three literals."""
    num_vars = num_clauses = -1
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if num_vars >= 0:
                raise CnfError(f"line {lineno}: duplicate p line")
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"line {lineno}: expected 'p cnf <vars> <clauses>'")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise CnfError(f"line {lineno}: non-integer header") from None
            if num_vars < 0 or num_clauses < 0:
                raise CnfError(f"line {lineno}: negative header field")
        else:
            if num_vars < 0:
                raise CnfError(f"line {lineno}: clause before p line")
            try:
                tokens.extend(int(x) for x in parts)
            except ValueError:
                raise CnfError(f"line {lineno}: non-integer literal") from None
    if num_vars < 0:
        raise CnfError("missing p line")
    clauses: list[tuple[int, int, int]] = []
    cur: list[int] = []
    for tok in tokens:
        if tok == 0:
            if len(cur) != 3:
                raise CnfError(
                    f"clause {len(clauses) + 1} has {len(cur)} literals, want 3"
                )
            clauses.append((cur[0], cur[1], cur[2]))
            cur = []
        else:
            if abs(tok) > num_vars:
                raise CnfError(f"literal {tok} exceeds declared {num_vars} variables")
            cur.append(tok)
    if cur:
        raise CnfError("trailing literals without closing 0")
    if len(clauses) != num_clauses:
        raise CnfError(f"header claims {num_clauses} clauses, found {len(clauses)}")
    return Cnf3(num_vars, tuple(clauses))


def cnf_to_text(phi: Cnf3) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    for clause in phi.clauses:
        lines.append(" ".join(str(x) for x in clause) + " 0")
    return "\n".join(lines) + "\n"


def evaluate(phi: Cnf3, assignment: Sequence[bool]) -> bool:
    return all(
        any((lit > 0) == assignment[abs(lit) - 1] for lit in clause)
        for clause in phi.clauses
    )


def sat_brute(phi: Cnf3) -> tuple[bool, ...] | None:
    """First satisfying assignment in binary counting order, or None.

    Assignment bit j-1 of the counter is the value of variable j, so the
    all-false assignment is tried first.  Exponential; num_vars <= 24.
    """
    n = phi.num_vars
    if n > 24:
        raise CnfError(f"sat_brute caps at 24 variables, got {n}")
    pos_mask = []
    neg_mask = []
    for clause in phi.clauses:
        p = q = 0
        for lit in clause:
            if lit > 0:
                p |= 1 << (lit - 1)
            else:
                q |= 1 << (-lit - 1)
        pos_mask.append(p)
        neg_mask.append(q)
    full = (1 << n) - 1
    for a in range(1 << n):
        if all(a & p or (~a & full) & q for p, q in zip(pos_mask, neg_mask)):
            return tuple(bool(a >> j & 1) for j in range(n))
    return None


def is_normalized(phi: Cnf3) -> bool:
    """True iff every variable occurs both positively and negatively."""
    pos = set()
    neg = set()
    for clause in phi.clauses:
        for lit in clause:
            (pos if lit > 0 else neg).add(abs(lit))
    return pos == neg == set(range(1, phi.num_vars + 1))


class NormalStatus(enum.Enum):
    NORMAL = "normal"
    TRIVIALLY_SAT = "trivially_sat"
    TRIVIALLY_UNSAT = "trivially_unsat"


@dataclass(frozen=True)
class NormalizeResult:
    cnf: Cnf3
    status: NormalStatus


def normalize_cnf(phi: Cnf3) -> NormalizeResult:
    """Fix pure and unused variables until every survivor occurs in both
    polarities, then renumber compactly.

    Fixing a pure variable satisfies (and deletes) every clause holding it;
    deleting clauses can make further variables pure, so iterate to a
    fixpoint.  The general propagation also drops falsified literals and
    pads a short clause by repeating its first literal; with exact-3-literal
    input and pure fixing only, those branches cannot fire, but they keep
    the procedure total.  Equisatisfiable with the input.
    """
    clauses = [list(c) for c in phi.clauses]
    while True:
        if not clauses:
            return NormalizeResult(Cnf3(0, ()), NormalStatus.TRIVIALLY_SAT)
        pos: set[int] = set()
        neg: set[int] = set()
        for clause in clauses:
            for lit in clause:
                (pos if lit > 0 else neg).add(abs(lit))
        pure = sorted((pos | neg) - (pos & neg))
        if not pure:
            break
        fixed_true = {v for v in pure if v in pos}
        fixed_false = {v for v in pure if v in neg}
        nxt: list[list[int]] = []
        for clause in clauses:
            if any(
                (lit > 0 and abs(lit) in fixed_true)
                or (lit < 0 and abs(lit) in fixed_false)
                for lit in clause
            ):
                continue  # satisfied
            kept = [
                lit
                for lit in clause
                if not (
                    (lit > 0 and abs(lit) in fixed_false)
                    or (lit < 0 and abs(lit) in fixed_true)
                )
            ]
            if not kept:
                return NormalizeResult(Cnf3(0, ()), NormalStatus.TRIVIALLY_UNSAT)
            while len(kept) < 3:
                kept.append(kept[0])
            nxt.append(kept)
        clauses = nxt

    used = sorted({abs(lit) for clause in clauses for lit in clause})
    remap = {v: i + 1 for i, v in enumerate(used)}
    out = tuple(
        tuple(remap[abs(lit)] * (1 if lit > 0 else -1) for lit in clause)
        for clause in clauses
    )
    return NormalizeResult(Cnf3(len(used), out), NormalStatus.NORMAL)  # type: ignore[arg-type]
