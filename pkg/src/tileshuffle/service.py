"""HTTP facade for the exploration loop: session lifecycle, tile CRUD,
hypothesis editing, view ranking, scatter data, and JSON persistence.

Sessions live in memory, one lock per session (single writer); snapshots
are self-contained JSON documents that restore a session exactly, including
its seed and draw counter, so replays produce identical responses.

All indices on the wire are 0-based; column names are accepted as aliases
wherever a column index is expected.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Form, HTTPException, Request, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .data import ColumnDomain, DataMatrix, load_csv
from .hypothesis import HypothesisSpec, Mode, SessionModel, ranked_views
from .tiling import Tile, tile_rects

SNAPSHOT_VERSION = 1


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class SessionRecord:
    """One analyst session: model, action log, and the cached sample pair."""

    id: str
    model: SessionModel
    created: str = field(default_factory=_now)
    updated: str = field(default_factory=_now)
    history: list[dict] = field(default_factory=list)
    cached_pair: tuple[DataMatrix, DataMatrix] | None = None
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def log(self, action: str, **details):
        self.history.append({"action": action, **details})
        self.updated = _now()

    def invalidate_pair(self):
        self.cached_pair = None


class SessionStore:
    def __init__(self):
        self._sessions: dict[str, SessionRecord] = {}
        self._lock = threading.Lock()

    def put(self, record: SessionRecord):
        with self._lock:
            self._sessions[record.id] = record

    def get(self, sid: str) -> SessionRecord:
        with self._lock:
            record = self._sessions.get(sid)
        if record is None:
            raise HTTPException(404, f"unknown session {sid!r}")
        return record

    def new_id(self) -> str:
        return secrets.token_hex(8)


def _columns_payload(data: DataMatrix) -> list[dict]:
    return [{"name": name, "domain": dom.value}
            for name, dom in zip(data.names, data.domains)]


def _column_ref(data: DataMatrix, ref):
    # names win over indices; bare digit strings (query params) are indices
    if isinstance(ref, str) and ref not in data.names and ref.lstrip("-").isdigit():
        ref = int(ref)
    return data.column_index(ref)


def _resolve_cols(data: DataMatrix, refs) -> list[int]:
    try:
        return [_column_ref(data, r) for r in refs]
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise HTTPException(400, str(exc))


def _resolve_rows(data: DataMatrix, refs) -> list[int]:
    rows = []
    for r in refs:
        if not isinstance(r, int) or isinstance(r, bool) or not 0 <= r < data.n:
            raise HTTPException(400, f"row index {r!r} out of range for n={data.n}")
        rows.append(r)
    return rows


def _tiling_stats(record: SessionRecord) -> dict:
    keep_map, split_map = record.model.tilings()
    return {
        "tiles": len(record.model.user_tiles),
        "rects_keep": len(tile_rects(keep_map)),
        "rects_break": len(tile_rects(split_map)),
    }


def _session_payload(record: SessionRecord) -> dict:
    data = record.model.data
    return {
        "session_id": record.id,
        "n": data.n,
        "m": data.m,
        "columns": _columns_payload(data),
        "mode": record.model.mode.value,
        "tiles": len(record.model.user_tiles),
        "draw_counter": record.model.draw_counter,
        "has_class_labels": data.class_labels is not None,
    }


def _snapshot(record: SessionRecord) -> dict:
    return {
        "version": SNAPSHOT_VERSION,
        "session": record.model.to_dict(),
        "data": record.model.data.to_dict(),
        "history": record.history,
        "created": record.created,
        "updated": record.updated,
    }


def _restore(sid: str, doc: dict) -> SessionRecord:
    try:
        if doc.get("version") != SNAPSHOT_VERSION:
            raise ValueError(f"unsupported snapshot version {doc.get('version')!r}")
        data = DataMatrix.from_dict(doc["data"])
        model = SessionModel.from_dict(data, doc["session"])
        record = SessionRecord(id=sid, model=model)
        record.history = list(doc.get("history", []))
        record.created = doc.get("created", record.created)
        return record
    except HTTPException:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise HTTPException(400, f"corrupted snapshot: {exc}")


def create_app(store: SessionStore | None = None, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="tileshuffle", version="0.1.0")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    sessions = store if store is not None else SessionStore()
    app.state.sessions = sessions

    @app.post("/sessions")
    def create_session(file: UploadFile, header: bool = Form(True),
                       class_column: str | None = Form(None),
                       seed: int | None = Form(None)):
        try:
            data = load_csv(file.file.read(), header=header, class_column=class_column)
        except (ValueError, KeyError) as exc:
            raise HTTPException(400, f"CSV parse failed: {exc}")
        record = SessionRecord(id=sessions.new_id(),
                               model=SessionModel(data, seed=seed if seed is not None
                                                  else secrets.randbits(32)))
        record.log("create", filename=file.filename, seed=record.model.seed)
        sessions.put(record)
        return {"session_id": record.id, "n": data.n, "m": data.m,
                "columns": _columns_payload(data),
                "class_labels": data.class_labels is not None}

    @app.get("/sessions/{sid}")
    def session_info(sid: str):
        record = sessions.get(sid)
        with record.lock:
            return _session_payload(record)

    @app.get("/sessions/{sid}/tiles")
    def list_tiles(sid: str):
        record = sessions.get(sid)
        with record.lock:
            return {"tiles": [t.to_dict() for t in record.model.user_tiles]}

    @app.post("/sessions/{sid}/tiles")
    def add_tile(sid: str, body: dict):
        record = sessions.get(sid)
        with record.lock:
            data = record.model.data
            rows = _resolve_rows(data, body.get("rows", []))
            cols = _resolve_cols(data, body.get("cols", []))
            try:
                tile = Tile.of(rows, cols)
                index = record.model.add_tile(tile)
            except ValueError as exc:
                raise HTTPException(400, str(exc))
            record.invalidate_pair()
            record.log("add_tile", rows=list(tile.rows), cols=list(tile.cols))
            return {"tile_index": index, "tiling_stats": _tiling_stats(record)}

    @app.delete("/sessions/{sid}/tiles/{index}")
    def remove_tile(sid: str, index: int):
        record = sessions.get(sid)
        with record.lock:
            if not 0 <= index < len(record.model.user_tiles):
                raise HTTPException(404, f"no tile at index {index}")
            record.model.remove_tile(index)
            record.invalidate_pair()
            record.log("remove_tile", index=index)
            return {"tiles": len(record.model.user_tiles),
                    "tiling_stats": _tiling_stats(record)}

    @app.put("/sessions/{sid}/hypothesis")
    def set_hypothesis(sid: str, body: dict):
        record = sessions.get(sid)
        with record.lock:
            data = record.model.data
            mode_name = body.get("mode", "compare")
            try:
                mode = Mode(mode_name)
            except ValueError:
                raise HTTPException(400, f"unknown mode {mode_name!r}")
            spec = None
            if mode is not Mode.EXPLORE:
                rows = _resolve_rows(data, body["rows"]) if body.get("rows") else range(data.n)
                partition = [_resolve_cols(data, block) for block in body.get("partition") or []]
                if not partition:
                    raise HTTPException(400, f"{mode.value} mode needs a column partition")
                try:
                    spec = HypothesisSpec.of(rows, partition)
                except ValueError as exc:
                    raise HTTPException(400, str(exc))
            try:
                record.model.set_hypothesis(mode, spec)
            except ValueError as exc:
                raise HTTPException(400, str(exc))
            record.invalidate_pair()
            record.log("set_hypothesis", mode=mode.value,
                       spec=spec.to_dict() if spec else None)
            payload = {"ok": True, "mode": mode.value}
            if spec is not None and spec.k == 1:
                payload["warning"] = "hypotheses identical"
            return payload

    @app.get("/sessions/{sid}/views")
    def views(sid: str, limit: int = 10, widen: bool = False, samples: int = 1,
              restrict_rows: bool = False):
        record = sessions.get(sid)
        with record.lock:
            record.model.draw_counter += 1
            try:
                ranking, pair = ranked_views(record.model, widen=widen,
                                             samples=samples, restrict_rows=restrict_rows)
            except ValueError as exc:
                record.model.draw_counter -= 1
                raise HTTPException(400, str(exc))
            record.cached_pair = pair
            record.log("views", limit=limit,
                       top=list(ranking[0][:2]) if ranking else None)
            return [{"i": i, "j": j, "score": score} for i, j, score in ranking[:limit]]

    @app.get("/sessions/{sid}/scatter")
    def scatter(sid: str, x: str, y: str):
        record = sessions.get(sid)
        with record.lock:
            data = record.model.data
            try:
                xi = _column_ref(data, x)
                yi = _column_ref(data, y)
            except (KeyError, IndexError, ValueError) as exc:
                raise HTTPException(404, str(exc))
            for j in (xi, yi):
                if data.domains[j] is not ColumnDomain.QUANTITATIVE:
                    raise HTTPException(400, f"column {data.names[j]!r} is categorical")
            if record.cached_pair is None:
                record.cached_pair = record.model.sample_pair()
            x1, x2 = record.cached_pair

            def points(mat: DataMatrix) -> list[list[float]]:
                return [[float(a), float(b)]
                        for a, b in zip(mat.numeric[:, xi], mat.numeric[:, yi])]

            return {"x": data.names[xi], "y": data.names[yi],
                    "data": points(data), "h1": points(x1), "h2": points(x2),
                    "labels": list(data.class_labels) if data.class_labels else None}

    @app.get("/sessions/{sid}/snapshot")
    def get_snapshot(sid: str):
        record = sessions.get(sid)
        with record.lock:
            return JSONResponse(_snapshot(record))

    @app.put("/sessions/{sid}/snapshot")
    async def put_snapshot(sid: str, request: Request):
        try:
            doc = json.loads(await request.body())
        except json.JSONDecodeError as exc:
            raise HTTPException(400, f"corrupted snapshot: {exc}")
        if not isinstance(doc, dict):
            raise HTTPException(400, "corrupted snapshot: expected an object")
        record = _restore(sid, doc)
        sessions.put(record)
        return {"session_id": sid, "restored": True,
                "draw_counter": record.model.draw_counter}

    if ui_dir is not None and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
