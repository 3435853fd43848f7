"""Game states, moves, and the rule checker.

The game starts with one cup on every vertex.  A move takes the entire stack
of r cups from one vertex to a vertex at hop distance exactly r that already
holds at least one cup.  A graph is stacked onto t once all n cups sit on t,
which takes exactly n - 1 moves when it is possible at all.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import errors
from .graphs import DistanceMatrix, Graph


@dataclass(frozen=True)
class Move:
    """Move all cups from src to dst; cups records the stack size moved.

    The stack size is implied by the state, but carrying it makes sequences
    self-describing and lets the verifier cross-check it.
    """

    src: int
    dst: int
    cups: int

    def to_json(self) -> dict:
        return {"from": self.src, "to": self.dst, "cups": self.cups}

    @classmethod
    def from_json(cls, obj: dict) -> "Move":
        try:
            move = cls(int(obj["from"]), int(obj["to"]), int(obj["cups"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise errors.FormatError(f"bad move object: {obj!r}") from exc
        if move.cups < 1 or move.src < 0 or move.dst < 0:
            raise errors.FormatError(f"bad move values: {obj!r}")
        return move


@dataclass(frozen=True)
class GameState:
    """Cup counts per vertex; immutable."""

    cups: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.cups)

    @property
    def occupied(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.cups) if c > 0)

    def __getitem__(self, v: int) -> int:
        return self.cups[v]


@dataclass(frozen=True)
class MoveSequence:
    moves: tuple[Move, ...]

    @property
    def weight(self) -> int:
        """Total cups moved; the quantity the minimum-weight search optimizes."""
        return sum(m.cups for m in self.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def to_json(self) -> list[dict]:
        return [m.to_json() for m in self.moves]

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            json.dump(self.to_json(), fh, indent=1)
            fh.write("\n")

    @classmethod
    def from_json(cls, data) -> "MoveSequence":
        if not isinstance(data, list):
            raise errors.FormatError("a move sequence file must hold a JSON array")
        return cls(tuple(Move.from_json(obj) for obj in data))

    @classmethod
    def load(cls, path) -> "MoveSequence":
        with open(path, "r", encoding="ascii") as fh:
            return cls.from_json(json.load(fh))


@dataclass(frozen=True)
class Verdict:
    """Outcome of replaying a sequence; failures name the first bad move."""

    valid: bool
    reason: str | None = None
    failed_index: int | None = None

    def __bool__(self) -> bool:
        return self.valid


def initial_state(g: Graph) -> GameState:
    """One cup on every vertex."""
    return GameState((1,) * g.n)


def legal_moves(g: Graph, dist: DistanceMatrix, state: GameState) -> list[Move]:
    """All legal moves, ordered by (src, dst)."""
    cups = state.cups
    occupied = [v for v, c in enumerate(cups) if c > 0]
    out = []
    for src in occupied:
        c = cups[src]
        row = dist.rows[src]
        for dst in occupied:
            if dst != src and row[dst] == c:
                out.append(Move(src, dst, c))
    return out


def _check_move(dist: DistanceMatrix, cups: tuple[int, ...], move: Move) -> str | None:
    """Reason the move is illegal in this state, or None if it is fine."""
    n = len(cups)
    if not (0 <= move.src < n and 0 <= move.dst < n):
        return f"vertex out of range: {move.src} -> {move.dst}"
    if move.src == move.dst:
        return f"source and target coincide at {move.src}"
    if cups[move.src] == 0:
        return f"source {move.src} is empty"
    if cups[move.src] != move.cups:
        return (
            f"wrong stack size: source {move.src} holds {cups[move.src]} cups, "
            f"move says {move.cups}"
        )
    if cups[move.dst] == 0:
        return f"empty target {move.dst}"
    if dist.d(move.src, move.dst) != move.cups:
        return (
            f"distance mismatch: d({move.src}, {move.dst}) = "
            f"{dist.d(move.src, move.dst)}, stack size is {move.cups}"
        )
    return None


def apply_move(g: Graph, dist: DistanceMatrix, state: GameState, move: Move) -> GameState:
    """Apply a move after checking every rule clause."""
    reason = _check_move(dist, state.cups, move)
    if reason is not None:
        raise errors.IllegalMoveError(reason)
    return apply_move_unchecked(state, move)


def apply_move_unchecked(state: GameState, move: Move) -> GameState:
    """Apply a move assumed legal; solvers use this on self-produced moves."""
    cups = list(state.cups)
    cups[move.dst] += cups[move.src]
    cups[move.src] = 0
    return GameState(tuple(cups))


def verify_sequence(
    g: Graph, t: int, seq: MoveSequence, dist: DistanceMatrix | None = None
) -> Verdict:
    """Replay seq from the initial state and check it stacks everything on t.

    Checks every move against the full rule, that the final state has all
    n cups on t, and that exactly n - 1 moves were played.
    """
    if not 0 <= t < g.n:
        return Verdict(False, f"target {t} out of range")
    if dist is None:
        dist = g.distances()
    cups = [1] * g.n
    for i, move in enumerate(seq):
        reason = _check_move(dist, tuple(cups), move)
        if reason is not None:
            return Verdict(False, reason, failed_index=i)
        cups[move.dst] += cups[move.src]
        cups[move.src] = 0
    if cups[t] != g.n:
        return Verdict(False, f"final state leaves {g.n - cups[t]} cups off the target")
    if len(seq) != g.n - 1:
        return Verdict(False, f"expected {g.n - 1} moves, got {len(seq)}")
    return Verdict(True)
