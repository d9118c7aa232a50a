import os
import logging

import orjson

from errors import GraphFormatError, ModprodError
from graph_core import Graph


def parse_edge_list(text: str) -> Graph:
    """
    Parses the edge-list format: a header line "n m" followed by m lines "u v"
    with 0 <= u < v < n. Blank lines and '#' comments are skipped.
    """
    header = None
    edges = []
    seen = set()
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last_line = line_no
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(line_no, f"expected two integers, got {line!r}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(line_no, f"expected two integers, got {line!r}") from None

        if header is None:
            if a <= 0:
                raise GraphFormatError(line_no, "graph must have at least one vertex")
            if b < 0:
                raise GraphFormatError(line_no, "edge count cannot be negative")
            header = (a, b)
            continue

        n, m = header
        if len(edges) == m:
            raise GraphFormatError(line_no, f"more than the declared {m} edges")
        if not 0 <= a < b < n:
            raise GraphFormatError(line_no, f"edge {a} {b} violates 0 <= u < v < {n}")
        if (a, b) in seen:
            raise GraphFormatError(line_no, f"duplicate edge {a} {b}")
        seen.add((a, b))
        edges.append((a, b))

    if header is None:
        raise GraphFormatError(max(last_line, 1), "missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(last_line, f"declared {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def decode_edge_list(raw: bytes) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw[: e.start].count(b"\n") + 1
        raise GraphFormatError(line, f"not valid UTF-8 (byte {raw[e.start]:#04x})") from None


def format_edge_list(graph: Graph) -> str:
    edges = graph.edges()
    lines = [f"{graph.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


class GraphLoader:
    """
    Reads and writes graphs and JSON reports on disk.
    """

    def load_edge_list(self, path):
        """
        Loads a graph from an edge-list file.
        """
        if not os.path.exists(path):
            logging.error(f"File not found: {path}")
            raise FileNotFoundError(f"File not found: {path}")

        with open(path, "rb") as handle:
            raw = handle.read()
        try:
            graph = parse_edge_list(decode_edge_list(raw))
        except GraphFormatError as e:
            logging.error(f"Malformed edge list {path}: {e}")
            raise
        logging.info(f"Loaded {path}: n={graph.n}, m={graph.edge_count}")
        return graph

    def save_edge_list(self, graph: Graph, path):
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(format_edge_list(graph))
        logging.info(f"Wrote {path}: n={graph.n}, m={graph.edge_count}")

    def dump_json(self, payload) -> bytes:
        try:
            return orjson.dumps(payload, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS)
        except TypeError as e:
            raise ModprodError(f"Report is not JSON serializable: {e}") from e

    def save_json(self, payload, path):
        with open(path, "wb") as handle:
            handle.write(self.dump_json(payload))
        logging.info(f"Wrote report {path}")
