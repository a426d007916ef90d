import json

import pytest
from fastapi.testclient import TestClient

from tileshuffle import HypothesisSpec, Mode, SessionModel, Tile, focus_spec, load_csv
from tileshuffle.service import create_app

from helpers import toy_csv


@pytest.fixture()
def client():
    return TestClient(create_app())


def make_session(client, csv_text=None, seed=11, **form):
    csv_text = toy_csv() if csv_text is None else csv_text
    files = {"file": ("data.csv", csv_text.encode(), "text/csv")}
    data = {"seed": str(seed), **form}
    resp = client.post("/sessions", files=files, data=data)
    assert resp.status_code == 200, resp.text
    return resp.json()


def test_create_session_toy(client):
    doc = make_session(client)
    assert (doc["n"], doc["m"]) == (10, 4)
    assert [c["name"] for c in doc["columns"]] == ["A", "B", "C", "D"]
    assert all(c["domain"] == "quantitative" for c in doc["columns"])


def test_create_session_with_class_column(client):
    doc = make_session(client, csv_text="a,b,label\n1,2,x\n3,4,y\n",
                       class_column="label")
    assert [c["name"] for c in doc["columns"]] == ["a", "b"]
    assert doc["class_labels"] is True
    info = client.get(f"/sessions/{doc['session_id']}").json()
    assert info["has_class_labels"] is True


def test_create_session_empty_body_is_400(client):
    files = {"file": ("data.csv", b"", "text/csv")}
    resp = client.post("/sessions", files=files)
    assert resp.status_code == 400


def test_unknown_session_is_404(client):
    assert client.get("/sessions/nope").status_code == 404


def test_add_tile_and_stats(client):
    sid = make_session(client)["session_id"]
    resp = client.post(f"/sessions/{sid}/tiles",
                       json={"rows": list(range(10)), "cols": ["A", "D"]})
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["tile_index"] == 0
    assert doc["tiling_stats"]["tiles"] == 1
    tiles = client.get(f"/sessions/{sid}/tiles").json()["tiles"]
    assert tiles == [{"rows": list(range(10)), "cols": [0, 3]}]


def test_add_duplicate_tile_keeps_allowed_set(client):
    sid = make_session(client)["session_id"]
    body = {"rows": list(range(10)), "cols": [0, 1]}
    first = client.post(f"/sessions/{sid}/tiles", json=body).json()
    second = client.post(f"/sessions/{sid}/tiles", json=body).json()
    assert second["tile_index"] == 1
    assert second["tiling_stats"]["rects_keep"] == first["tiling_stats"]["rects_keep"]
    assert second["tiling_stats"]["rects_break"] == first["tiling_stats"]["rects_break"]


def test_add_tile_out_of_range_is_400(client):
    sid = make_session(client)["session_id"]
    assert client.post(f"/sessions/{sid}/tiles",
                       json={"rows": [99], "cols": [0]}).status_code == 400
    assert client.post(f"/sessions/{sid}/tiles",
                       json={"rows": [0], "cols": ["Z"]}).status_code == 400


def test_delete_tile_rebuilds_and_logs(client):
    sid = make_session(client)["session_id"]
    client.post(f"/sessions/{sid}/tiles", json={"rows": [0, 1], "cols": [0, 1]})
    resp = client.delete(f"/sessions/{sid}/tiles/0")
    assert resp.status_code == 200
    assert resp.json()["tiles"] == 0
    history = client.get(f"/sessions/{sid}/snapshot").json()["history"]
    assert [h["action"] for h in history] == ["create", "add_tile", "remove_tile"]
    assert client.delete(f"/sessions/{sid}/tiles/5").status_code == 404


def test_hypothesis_explore_forces_special_case(client):
    sid = make_session(client)["session_id"]
    resp = client.put(f"/sessions/{sid}/hypothesis", json={"mode": "explore"})
    assert resp.status_code == 200
    assert client.get(f"/sessions/{sid}").json()["mode"] == "explore"


def test_hypothesis_focus_with_names(client):
    sid = make_session(client)["session_id"]
    resp = client.put(f"/sessions/{sid}/hypothesis",
                      json={"mode": "focus", "rows": [0, 1, 2, 3, 4],
                            "partition": [["C"], ["D"]]})
    assert resp.status_code == 200
    assert "warning" not in resp.json()


def test_hypothesis_single_block_warns(client):
    sid = make_session(client)["session_id"]
    resp = client.put(f"/sessions/{sid}/hypothesis",
                      json={"mode": "compare", "partition": [["C", "D"]]})
    assert resp.status_code == 200
    assert resp.json()["warning"] == "hypotheses identical"


def test_hypothesis_overlapping_blocks_400(client):
    sid = make_session(client)["session_id"]
    resp = client.put(f"/sessions/{sid}/hypothesis",
                      json={"mode": "compare", "partition": [["A", "B"], ["B"]]})
    assert resp.status_code == 400


def test_views_explore_top_score_high(client):
    sid = make_session(client)["session_id"]
    views = client.get(f"/sessions/{sid}/views").json()
    assert len(views) == 6
    assert views[0]["score"] >= 0.5
    assert views == sorted(views, key=lambda v: (-v["score"], v["i"], v["j"]))


def test_views_fully_constrained_all_zero(client):
    sid = make_session(client)["session_id"]
    for i in range(10):
        client.post(f"/sessions/{sid}/tiles",
                    json={"rows": [i], "cols": [0, 1, 2, 3]})
    views = client.get(f"/sessions/{sid}/views").json()
    assert all(v["score"] < 1e-9 for v in views)


def test_views_limit_one(client):
    sid = make_session(client)["session_id"]
    assert len(client.get(f"/sessions/{sid}/views", params={"limit": 1}).json()) == 1


def test_scatter_explore_h1_matches_data_as_multiset(client):
    sid = make_session(client)["session_id"]
    doc = client.get(f"/sessions/{sid}/scatter", params={"x": "A", "y": "D"}).json()
    assert sorted(map(tuple, doc["data"])) == sorted(map(tuple, doc["h1"]))
    assert len(doc["h2"]) == 10


def test_scatter_unknown_column_404(client):
    sid = make_session(client)["session_id"]
    resp = client.get(f"/sessions/{sid}/scatter", params={"x": "A", "y": "nope"})
    assert resp.status_code == 404


def test_scatter_categorical_column_400(client):
    doc = make_session(client, csv_text="a,b,c\n1,2,x\n3,4,y\n5,6,z\n")
    resp = client.get(f"/sessions/{doc['session_id']}/scatter",
                      params={"x": "a", "y": "c"})
    assert resp.status_code == 400


def test_scatter_uses_cached_pair_from_views(client):
    sid = make_session(client)["session_id"]
    client.get(f"/sessions/{sid}/views")
    a = client.get(f"/sessions/{sid}/scatter", params={"x": "A", "y": "B"}).json()
    b = client.get(f"/sessions/{sid}/scatter", params={"x": "A", "y": "B"}).json()
    assert a == b
    counter = client.get(f"/sessions/{sid}").json()["draw_counter"]
    assert counter == 1  # scatter did not advance the counter


def test_snapshot_roundtrip_views_identical(client):
    sid = make_session(client)["session_id"]
    client.post(f"/sessions/{sid}/tiles", json={"rows": list(range(10)), "cols": [0, 3]})
    snap = client.get(f"/sessions/{sid}/snapshot").content
    views_orig = client.get(f"/sessions/{sid}/views").content

    assert client.put("/sessions/copy/snapshot", content=snap).status_code == 200
    views_restored = client.get("/sessions/copy/views").content
    assert views_orig == views_restored


def test_snapshot_fresh_session_canonical(client):
    sid = make_session(client, seed=99)["session_id"]
    doc = client.get(f"/sessions/{sid}/snapshot").json()
    assert doc["version"] == 1
    assert doc["session"] == {"seed": 99, "draw_counter": 0, "mode": "explore",
                              "user_tiles": [], "spec": None}


def test_snapshot_corrupted_json_400(client):
    sid = make_session(client)["session_id"]
    assert client.put(f"/sessions/{sid}/snapshot",
                      content=b"{not json").status_code == 400
    assert client.put(f"/sessions/{sid}/snapshot",
                      content=b'{"version": 1}').status_code == 400


def test_no_endpoint_mutates_data_values(client):
    sid = make_session(client)["session_id"]
    before = client.get(f"/sessions/{sid}/scatter", params={"x": "A", "y": "B"}).json()["data"]
    client.post(f"/sessions/{sid}/tiles", json={"rows": [0, 1, 2], "cols": [0, 1]})
    client.put(f"/sessions/{sid}/hypothesis",
               json={"mode": "focus", "partition": [["A"], ["B"]]})
    client.get(f"/sessions/{sid}/views")
    after = client.get(f"/sessions/{sid}/scatter", params={"x": "A", "y": "B"}).json()["data"]
    assert before == after


def test_history_replay_reproduces_model(client):
    sid = make_session(client, seed=55)["session_id"]
    client.post(f"/sessions/{sid}/tiles", json={"rows": list(range(10)), "cols": [0, 3]})
    client.get(f"/sessions/{sid}/views")
    client.put(f"/sessions/{sid}/hypothesis",
               json={"mode": "focus", "partition": [["C"], ["D"]]})
    client.post(f"/sessions/{sid}/tiles", json={"rows": [0, 1, 2], "cols": [1, 2]})
    client.delete(f"/sessions/{sid}/tiles/1")
    client.get(f"/sessions/{sid}/views")

    snap = client.get(f"/sessions/{sid}/snapshot").json()

    # replay the action log against a fresh model
    data = load_csv(toy_csv())
    replayed = None
    for event in snap["history"]:
        action = event["action"]
        if action == "create":
            replayed = SessionModel(data, seed=event["seed"])
        elif action == "add_tile":
            replayed.add_tile(Tile.of(event["rows"], event["cols"]))
        elif action == "remove_tile":
            replayed.remove_tile(event["index"])
        elif action == "set_hypothesis":
            spec = (HypothesisSpec.from_dict(event["spec"])
                    if event.get("spec") else None)
            replayed.set_hypothesis(Mode(event["mode"]), spec)
        elif action == "views":
            replayed.draw_counter += 1
    assert replayed.to_dict() == snap["session"]
