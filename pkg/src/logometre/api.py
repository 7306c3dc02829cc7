"""Read-only HTTP explorer over a built comparison report.

Rank tables, factor coordinates and the comparison come straight from the
report JSON; pivot profiles are computed on demand against the loaded
corpora (their hashes must match the ones recorded at build time) and kept
in a small thread-safe cache. All state is immutable after startup, so
repeated identical requests return byte-identical bodies.
"""

from __future__ import annotations

import json
import mimetypes
import threading
from collections import OrderedDict
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .ca import CaSolution, project
from .cooccurrence import ContextSpec, pivot_profile
from .corpus import load_corpus, serialize_corpus
from .errors import AxisOutOfRange, CorpusHashMismatch, LogometreError, PivotAbsent
from .serialize import canonical_json, sha256_text

PIVOT_CACHE_CAPACITY = 256


class ExplorerState:
    """Everything a request needs; built once, then only read."""

    def __init__(self, report: dict, corpora: dict, ui_dir=None):
        self.report = report
        self.corpora = corpora              # side -> AnnotatedCorpus (may be empty)
        self.subs = {side: corpus.whole() for side, corpus in corpora.items()}
        self.ui_dir = Path(ui_dir).resolve() if ui_dir else None
        self.solutions = {}
        for side, payload in report.get("sides", {}).items():
            if payload.get("ca"):
                self.solutions[side] = CaSolution.from_dict(payload["ca"])
        params = report.get("parameters", {})
        self.context = ContextSpec.from_dict(params.get("context", {"unit": "sentence"}))
        self.pos_filter = tuple(params.get("pos_filter", ()))
        self.default_min_joint = int(params.get("min_joint", 2))
        self.default_k = int(params.get("k", 20))
        self._pivot_cache = OrderedDict()
        self._cache_lock = threading.Lock()

    # pivot responses are cached as rendered bytes, keyed by query identity
    def pivot_bytes(self, side, word, min_joint):
        key = (side, word, min_joint)
        with self._cache_lock:
            if key in self._pivot_cache:
                self._pivot_cache.move_to_end(key)
                return self._pivot_cache[key]
        profile = pivot_profile(self.subs[side], word, self.context,
                                min_joint=min_joint, pos_filter=self.pos_filter)
        body = canonical_json(profile.to_dict()).encode("utf-8")
        with self._cache_lock:
            self._pivot_cache[key] = body
            while len(self._pivot_cache) > PIVOT_CACHE_CAPACITY:
                self._pivot_cache.popitem(last=False)
        return body


def _json_bytes(obj) -> bytes:
    return canonical_json(obj).encode("utf-8")


class _Handler(BaseHTTPRequestHandler):
    state: ExplorerState = None  # set by make_server

    def log_message(self, *args):
        pass

    def _send(self, status, body, content_type="application/json; charset=utf-8"):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _error(self, status, name, detail=None):
        payload = {"error": name}
        if detail:
            payload["detail"] = detail
        self._send(status, _json_bytes(payload))

    def do_GET(self):
        try:
            self._route()
        except BrokenPipeError:
            pass
        except LogometreError as exc:
            self._error(500, type(exc).__name__, str(exc))

    def _route(self):
        url = urlparse(self.path)
        query = parse_qs(url.query)
        parts = [p for p in url.path.split("/") if p]

        if parts[:1] == ["api"]:
            return self._route_api(parts[1:], query)
        return self._static(url.path)

    def _route_api(self, parts, query):
        state = self.state
        if parts == ["meta"]:
            report = state.report
            return self._send(200, _json_bytes({
                "schema": report.get("schema"),
                "languages": {s: report["corpora"][s]["language"] for s in ("a", "b")},
                "parameters": report.get("parameters"),
                "corpora": report.get("corpora"),
                "lexicon": report.get("lexicon"),
                "sides": sorted(report.get("sides", {}).keys()),
            }))
        if parts == ["compare"]:
            return self._send(200, _json_bytes(state.report["rank_comparison"]))
        if len(parts) == 2 and parts[0] == "dict":
            side = parts[1]
            payload = state.report.get("sides", {}).get(side)
            if payload is None:
                return self._error(404, "UnknownSide")
            try:
                top = int(query.get("top", [state.default_k])[0])
                if top < 1:
                    raise ValueError
            except ValueError:
                return self._error(400, "MalformedQuery", "top must be a positive integer")
            dictionary = payload["dictionary"]
            return self._send(200, _json_bytes({
                "side": side,
                "language": payload["language"],
                "total_filtered_tokens": dictionary["total_filtered_tokens"],
                "entries": dictionary["entries"][:top],
            }))
        if len(parts) == 2 and parts[0] == "ca":
            return self._ca(parts[1], query)
        if len(parts) == 2 and parts[0] == "pivot":
            return self._pivot(parts[1], query)
        return self._error(404, "UnknownEndpoint")

    def _ca(self, side, query):
        state = self.state
        if side not in state.report.get("sides", {}):
            return self._error(404, "UnknownSide")
        solution = state.solutions.get(side)
        if solution is None:
            return self._error(404, "NoSolution", "this side has no factor solution")
        try:
            raw = query.get("axes", ["1,2"])[0]
            ax = tuple(int(v) for v in raw.split(","))
            if len(ax) != 2:
                raise ValueError
        except ValueError:
            return self._error(400, "MalformedQuery", "axes must be two integers, e.g. 1,2")
        try:
            points = project(solution, ax)
        except AxisOutOfRange as exc:
            return self._error(400, "AxisOutOfRange", str(exc))
        clusters = (state.report["sides"][side].get("clusters") or {}).get("assignment", {})
        body = {
            "side": side,
            "axes": list(ax),
            "k_max": solution.k_max,
            "axis_inertia_pct": [float(solution.inertia_pct[ax[0] - 1]),
                                 float(solution.inertia_pct[ax[1] - 1])],
            "inertia_pct": [float(p) for p in solution.inertia_pct],
            "points": [
                {
                    "lemma": p.lemma,
                    "x": p.x,
                    "y": p.y,
                    "ctr_x": p.ctr_x,
                    "ctr_y": p.ctr_y,
                    "cos2_sum": p.cos2_sum,
                    "mass": float(solution.row_masses[i]),
                    "cluster": clusters.get(p.lemma),
                }
                for i, p in enumerate(points)
            ],
        }
        return self._send(200, _json_bytes(body))

    def _pivot(self, side, query):
        state = self.state
        if side not in state.subs:
            return self._error(404, "UnknownSide")
        word = query.get("word", [None])[0]
        if not word:
            return self._error(400, "MalformedQuery", "word parameter is required")
        try:
            min_joint = int(query.get("min", [state.default_min_joint])[0])
            if min_joint < 1:
                raise ValueError
        except ValueError:
            return self._error(400, "MalformedQuery", "min must be a positive integer")
        try:
            body = state.pivot_bytes(side, word, min_joint)
        except PivotAbsent:
            return self._error(404, "PivotAbsent")
        return self._send(200, body)

    def _static(self, path):
        state = self.state
        if state.ui_dir is None:
            return self._error(404, "NoUI", "no static UI directory configured")
        rel = path.lstrip("/") or "index.html"
        target = (state.ui_dir / rel).resolve()
        if state.ui_dir not in target.parents and target != state.ui_dir:
            return self._error(404, "NotFound")
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            return self._error(404, "NotFound")
        ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self._send(200, target.read_bytes(), content_type=ctype)


class ExplorerService:
    def __init__(self, state: ExplorerState, host="127.0.0.1", port=0):
        handler = type("BoundHandler", (_Handler,), {"state": state})
        self._server = ThreadingHTTPServer((host, port), handler)
        self._thread = threading.Thread(target=self._server.serve_forever, daemon=True)
        self.host = host

    @property
    def port(self) -> int:
        return self._server.server_address[1]

    def start(self) -> "ExplorerService":
        self._thread.start()
        return self

    def wait(self):
        self._thread.join()

    def stop(self):
        self._server.shutdown()
        self._server.server_close()


def load_session(report_path, corpus_a=None, corpus_b=None):
    """Load a report and the corpora it was built from, verifying hashes."""
    report_path = Path(report_path)
    with open(report_path, encoding="utf-8") as f:
        report = json.load(f)
    corpora = {}
    overrides = {"a": corpus_a, "b": corpus_b}
    for side in ("a", "b"):
        meta = report.get("corpora", {}).get(side, {})
        path = overrides[side] or meta.get("path")
        if path is None:
            continue
        path = Path(path)
        if not path.is_absolute():
            path = report_path.parent / path
        corpus = load_corpus(path)
        if meta.get("sha256") and sha256_text(serialize_corpus(corpus)) != meta["sha256"]:
            raise CorpusHashMismatch(str(path))
        corpora[side] = corpus
    return report, corpora


def serve(report: dict, corpora: dict, port: int = 0, host: str = "127.0.0.1",
          ui_dir=None) -> ExplorerService:
    """Start the explorer over an in-memory report; returns the running service."""
    state = ExplorerState(report, corpora, ui_dir=ui_dir)
    return ExplorerService(state, host=host, port=port).start()


def serve_from_files(report_path, port=0, host="127.0.0.1", corpus_a=None,
                     corpus_b=None, ui_dir=None) -> ExplorerService:
    report, corpora = load_session(report_path, corpus_a=corpus_a, corpus_b=corpus_b)
    return serve(report, corpora, port=port, host=host, ui_dir=ui_dir)
