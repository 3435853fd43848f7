from __future__ import annotations

import json
import random

import pytest

import oracles
from cupstack import errors, families
from cupstack.engine import (
    GameState,
    Move,
    MoveSequence,
    apply_move,
    apply_move_unchecked,
    initial_state,
    legal_moves,
    verify_sequence,
)
from cupstack.graphs import all_pairs_distances


def test_initial_state():
    state = initial_state(families.path(4))
    assert state.cups == (1, 1, 1, 1)
    assert state.total == 4
    assert state.occupied == (0, 1, 2, 3)


def test_legal_moves_from_start_of_path():
    g = families.path(4)
    dist = all_pairs_distances(g)
    moves = legal_moves(g, dist, initial_state(g))
    # every vertex holds one cup, so only edge hops are available
    assert set(moves) == {
        Move(0, 1, 1), Move(1, 0, 1), Move(1, 2, 1),
        Move(2, 1, 1), Move(2, 3, 1), Move(3, 2, 1),
    }
    # deterministic (src, dst) order
    assert moves == sorted(moves, key=lambda m: (m.src, m.dst))


def test_legal_moves_match_definition_on_random_states():
    rng = random.Random(1234)
    checked = 0
    while checked < 1000:
        n = rng.randint(2, 8)
        g = oracles.random_connected_graph(rng, n, rng.randint(0, n))
        dist = all_pairs_distances(g)
        # random cup profile summing to n
        cups = [0] * n
        for _ in range(n):
            cups[rng.randrange(n)] += 1
        state = GameState(tuple(cups))
        got = {(m.src, m.dst, m.cups) for m in legal_moves(g, dist, state)}
        assert got == oracles.legal_moves_by_definition(g, cups)
        checked += 1


def test_apply_move_moves_the_whole_stack():
    g = families.path(3)
    dist = all_pairs_distances(g)
    state = apply_move(g, dist, initial_state(g), Move(0, 1, 1))
    assert state.cups == (0, 2, 1)
    state = apply_move(g, dist, state, Move(2, 1, 1))
    assert state.cups == (0, 3, 0)


def test_apply_move_rejects_each_illegal_reason():
    g = families.path(3)
    dist = all_pairs_distances(g)
    start = initial_state(g)
    with pytest.raises(errors.IllegalMoveError, match="wrong stack size"):
        apply_move(g, dist, start, Move(0, 1, 2))
    with pytest.raises(errors.IllegalMoveError, match="distance mismatch"):
        apply_move(g, dist, start, Move(0, 2, 1))
    emptied = apply_move(g, dist, start, Move(0, 1, 1))
    with pytest.raises(errors.IllegalMoveError, match="empty target"):
        apply_move(g, dist, emptied, Move(2, 0, 1))
    with pytest.raises(errors.IllegalMoveError):
        apply_move(g, dist, start, Move(0, 0, 1))


def test_apply_move_unchecked_is_pure_arithmetic():
    state = GameState((2, 1, 0))
    after = apply_move_unchecked(state, Move(0, 1, 2))
    assert after.cups == (0, 3, 0)
    assert state.cups == (2, 1, 0)  # input untouched


def test_verify_sequence_accepts_a_full_stacking():
    g = families.path(3)
    seq = MoveSequence((Move(2, 1, 1), Move(0, 1, 1)))
    verdict = verify_sequence(g, 1, seq)
    assert bool(verdict)
    assert verdict.reason is None


def test_verify_sequence_rejects_incomplete_stacking():
    g = families.path(3)
    verdict = verify_sequence(g, 1, MoveSequence((Move(2, 1, 1),)))
    assert not verdict
    assert "off the target" in verdict.reason


def test_verify_sequence_rejects_wrong_target():
    g = families.path(3)
    seq = MoveSequence((Move(2, 1, 1), Move(0, 1, 1)))
    verdict = verify_sequence(g, 0, seq)
    assert not verdict


def test_verify_sequence_pinpoints_first_bad_move():
    g = families.path(4)
    seq = MoveSequence((Move(0, 1, 1), Move(3, 1, 1), Move(1, 3, 3)))
    verdict = verify_sequence(g, 3, seq)
    assert not verdict
    assert verdict.failed_index == 1  # 3 -> 1 is a distance-2 hop with one cup


def test_move_json_uses_from_to_keys():
    move = Move(3, 1, 2)
    assert move.to_json() == {"from": 3, "to": 1, "cups": 2}
    assert Move.from_json({"from": 3, "to": 1, "cups": 2}) == move


def test_sequence_weight_and_roundtrip(tmp_path):
    seq = MoveSequence((Move(2, 1, 1), Move(1, 3, 2), Move(3, 0, 3), Move(0, 4, 4)))
    assert seq.weight == 10
    assert len(seq) == 4
    target = tmp_path / "seq.json"
    seq.save(target)
    assert MoveSequence.load(target) == seq
    # the on-disk form is a plain JSON array of objects
    data = json.loads(target.read_text())
    assert data[0] == {"from": 2, "to": 1, "cups": 1}
