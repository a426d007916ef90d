"""
The exploration loop
====================

Explore mode compares the intact data (rows travel whole) against the
current background model (everything the analyst has absorbed so far,
initially nothing). The top-ranked view is where they disagree the most;
absorbing it as a tile updates the background, and the loop repeats until
the background explains the data and every score collapses.
"""

import numpy as np

from tileshuffle import SessionModel, Tile, from_numeric, ranked_views

rng = np.random.default_rng(3)
base = np.linspace(0.0, 1.0, 10)
X = from_numeric(np.column_stack([base + rng.normal(0, 0.05, 10) for _ in range(4)]),
                 names=("A", "B", "C", "D"))

model = SessionModel(X, seed=42)

for step in range(1, 5):
    model.draw_counter += 1
    ranking, _ = ranked_views(model)
    names = lambda i, j: f"{X.names[i]}{X.names[j]}"
    shown = ", ".join(f"{names(i, j)}={s:.2f}" for i, j, s in ranking[:3])
    top_i, top_j, top_score = ranking[0]
    print(f"step {step}: top views {shown}")
    if top_score < 0.1:
        print("        background explains the data; loop converged")
        break
    print(f"        absorbing view {names(top_i, top_j)} as a full-column tile")
    model.add_tile(Tile.of(range(X.n), [top_i, top_j]))
