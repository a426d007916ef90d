"""
Driving the HTTP session service
================================

The same loop, spoken over the wire: upload a CSV, add tiles, edit the
hypothesis, pull ranked views and scatter data, and round-trip the whole
session through a snapshot. Runs the app in-process; `tileshuffle serve`
exposes the identical API over a real socket.
"""

import json

import numpy as np
from fastapi.testclient import TestClient

from tileshuffle import from_numeric, to_csv
from tileshuffle.service import create_app

rng = np.random.default_rng(21)
base = np.linspace(0.0, 1.0, 10)
csv_text = to_csv(from_numeric(
    np.column_stack([base + rng.normal(0, 0.05, 10) for _ in range(4)]),
    names=("A", "B", "C", "D")))

client = TestClient(create_app())

doc = client.post("/sessions", files={"file": ("toy.csv", csv_text.encode())},
                  data={"seed": "7"}).json()
sid = doc["session_id"]
print("created session", sid, "with columns",
      [c["name"] for c in doc["columns"]])

views = client.get(f"/sessions/{sid}/views", params={"limit": 3}).json()
print("top views:", views)

top = views[0]
scatter = client.get(f"/sessions/{sid}/scatter",
                     params={"x": top["i"], "y": top["j"]}).json()
print(f"scatter {scatter['x']}-{scatter['y']}: {len(scatter['data'])} data points, "
      f"{len(scatter['h1'])} keep-sample points, {len(scatter['h2'])} break-sample points")

added = client.post(f"/sessions/{sid}/tiles",
                    json={"rows": list(range(10)),
                          "cols": [top["i"], top["j"]]}).json()
print("absorbed the view as a tile:", added)

# ask about the two columns we have NOT just absorbed
other = [c["name"] for k, c in enumerate(doc["columns"])
         if k not in (top["i"], top["j"])]
client.put(f"/sessions/{sid}/hypothesis",
           json={"mode": "focus", "partition": [[other[0]], [other[1]]]})
print(f"focused on {other[0]},{other[1]};", "views:",
      client.get(f"/sessions/{sid}/views", params={"widen": "true"}).json()[:2])

# snapshot now; the original and a restored copy must answer identically
snapshot = client.get(f"/sessions/{sid}/snapshot").json()
print("snapshot keys:", sorted(snapshot))
client.put("/sessions/rehydrated/snapshot", content=json.dumps(snapshot).encode())
original_next = client.get(f"/sessions/{sid}/views").json()
restored_next = client.get("/sessions/rehydrated/views").json()
print("restored session reproduces the next ranking:",
      restored_next == original_next)
