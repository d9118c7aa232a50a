import orjson
import pytest

from data_loader import GraphLoader, format_edge_list, parse_edge_list
from errors import GraphFormatError, ModprodError
from graph_core import Graph


def test_parse_skips_comments_and_blank_lines():
    graph = parse_edge_list("# a path\n3 2\n\n0 1\n1 2  \n")
    assert graph == Graph.from_edges(3, [(0, 1), (1, 2)])


def test_parse_isolated_vertices():
    graph = parse_edge_list("4 0\n")
    assert graph.n == 4 and graph.edge_count == 0


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("0 0\n", 1),
        ("3 -1\n", 1),
        ("3 1\n1 0\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 1\n0 1\n1 2\n", 3),
        ("3 2\n0 1\n", 2),
        ("3 1\nzero one\n", 2),
        ("3 1\n0 1 2\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_format_edge_list_is_sorted(c5):
    assert format_edge_list(c5) == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n"
    assert parse_edge_list(format_edge_list(c5)) == c5


def test_loader_reads_and_writes(tmp_path, p4):
    loader = GraphLoader()
    target = tmp_path / "p4.txt"
    loader.save_edge_list(p4, target)
    assert loader.load_edge_list(target) == p4


def test_loader_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        GraphLoader().load_edge_list(tmp_path / "absent.txt")


def test_loader_reports_malformed_file(tmp_path):
    target = tmp_path / "bad.txt"
    target.write_text("2 1\n1 0\n", encoding="utf-8")
    with pytest.raises(GraphFormatError):
        GraphLoader().load_edge_list(target)


def test_loader_rejects_non_utf8_bytes(tmp_path):
    target = tmp_path / "latin1.txt"
    target.write_bytes(b"2 1\n0 1\n# caf\xe9")
    with pytest.raises(GraphFormatError) as info:
        GraphLoader().load_edge_list(target)
    assert info.value.line == 3
    assert "UTF-8" in str(info.value)


def test_loader_accepts_crlf_line_endings(tmp_path, p4):
    target = tmp_path / "crlf.txt"
    target.write_bytes(format_edge_list(p4).replace("\n", "\r\n").encode())
    assert GraphLoader().load_edge_list(target) == p4


def test_json_output_is_sorted_and_indented(tmp_path):
    loader = GraphLoader()
    text = loader.dump_json({"b": 1, "a": [1, 2]}).decode()
    assert text.index('"a"') < text.index('"b"')
    assert "\n  " in text

    target = tmp_path / "report.json"
    loader.save_json({"x": "inf"}, target)
    assert orjson.loads(target.read_bytes()) == {"x": "inf"}


def test_json_rejects_unserializable_payload():
    with pytest.raises(ModprodError):
        GraphLoader().dump_json({"graph": object()})
