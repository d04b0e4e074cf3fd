import pytest

from curvelab.errors import InvalidSpec, StaleChunk
from curvelab.surface import (
    INFINITE,
    ChunkRegistry,
    SurfaceSpec,
    flute_spec,
    piece_catalogue,
    spec_from_json,
    spec_to_json,
    validate_spec,
)


def test_flute_spec_is_valid():
    v = validate_spec(flute_spec())
    pieces = piece_catalogue(v)
    assert len(pieces) == 1
    t1 = pieces[0]
    assert t1.has_discrete_end and t1.discrete_class == 1 and t1.genus == 0


def test_genus_one_cantor_spec():
    v = validate_spec(SurfaceSpec(0, 1, "finite", 1))
    pieces = piece_catalogue(v)
    assert len(pieces) == 1
    assert not pieces[0].has_discrete_end
    assert pieces[0].genus == 1


def test_bounded_graph_rejected():
    with pytest.raises(InvalidSpec, match="bounded"):
        validate_spec(SurfaceSpec(0, 1, "infinite", accumulated=frozenset({"c1"})))
    with pytest.raises(InvalidSpec, match="bounded"):
        validate_spec(SurfaceSpec(0, 1, "zero"))


def test_catalogue_two_discrete_one_cantor_finite():
    v = validate_spec(SurfaceSpec(2, 1, "finite", 3))
    pieces = piece_catalogue(v)
    assert [p.id for p in pieces] == [1, 2, 3]
    assert pieces[2].genus == 1 and not pieces[2].has_discrete_end
    assert pieces[0].genus == 0 and pieces[1].genus == 0


def test_accumulation_forces_infinite_piece_genus():
    v = validate_spec(
        SurfaceSpec(1, 1, "infinite", accumulated=frozenset({"c1"}))
    )
    pieces = piece_catalogue(v)
    assert len(pieces) == 1  # no finite-genus piece in infinite mode
    assert pieces[0].genus == INFINITE


def test_invariant_violations():
    with pytest.raises(InvalidSpec):
        validate_spec(SurfaceSpec(0, 0, "zero"))
    with pytest.raises(InvalidSpec):
        validate_spec(SurfaceSpec(1, 0, "zero", accumulated=frozenset({"f1"})))
    with pytest.raises(InvalidSpec):
        validate_spec(SurfaceSpec(1, 0, "finite", 0))
    with pytest.raises(InvalidSpec):
        validate_spec(SurfaceSpec(1, 1, "finite", 2, accumulated=frozenset({"c1"})))
    with pytest.raises(InvalidSpec):
        validate_spec(SurfaceSpec(1, 0, "infinite"))
    with pytest.raises(InvalidSpec):
        validate_spec(SurfaceSpec(1, 0, "zero", accumulated=frozenset({"c7"})))


def test_json_round_trip():
    for spec in [
        flute_spec(),
        SurfaceSpec(2, 1, "finite", 3),
        SurfaceSpec(1, 2, "infinite", accumulated=frozenset({"c2"})),
    ]:
        assert spec_from_json(spec_to_json(spec)) == spec
    assert spec_from_json('{"n_discrete":1,"n_cantor":0,"genus":"zero"}') == flute_spec()
    with pytest.raises(InvalidSpec):
        spec_from_json('{"n_discrete":1,"n_cantor":0,"genus":true}')
    with pytest.raises(InvalidSpec):
        spec_from_json("not json")


def test_chunk_registry_split_semantics():
    v = validate_spec(SurfaceSpec(1, 1, "infinite", accumulated=frozenset({"c1"})))
    reg = ChunkRegistry(v)
    root = reg.root(1, 0)
    left, right = reg.split_chunk(root)
    assert {c.path for c in reg.live_leaves(1, 0)} == {"0", "1"}
    reg.split_chunk(left)
    assert {c.path for c in reg.live_leaves(1, 0)} == {"00", "01", "1"}
    with pytest.raises(StaleChunk):
        reg.split_chunk(root)
    with pytest.raises(StaleChunk):
        reg.split_chunk(left)
    # other cells are independent and lazily rooted
    assert [c.path for c in reg.live_leaves(1, 5)] == [""]


def test_live_leaves_partition_invariant():
    v = validate_spec(SurfaceSpec(1, 1, "infinite", accumulated=frozenset({"c1"})))
    reg = ChunkRegistry(v)
    import random

    rng = random.Random(3)
    for _ in range(40):
        leaves = reg.live_leaves(1, 0)
        reg.split_chunk(rng.choice(leaves))
        paths = [c.path for c in reg.live_leaves(1, 0)]
        # antichain covering the root: no path is a prefix of another, and
        # every infinite binary word has exactly one live prefix
        for p in paths:
            for q in paths:
                assert p == q or not q.startswith(p)
        probe = "0110101001"
        assert sum(1 for p in paths if probe.startswith(p)) == 1
