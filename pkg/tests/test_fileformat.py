import pytest
from hypothesis import given, settings

from hyperquiver.fileformat import HyperquiverFile, ParseError, load, parse, render
from hyperquiver.model import HyperquiverError, singleton_partition

from conftest import DATA, hyperquivers


def test_parse_shared_tensor():
    f = load(DATA / "shared_tensor.hq")
    assert tuple(f.dims) == (3, 3)
    assert [(e.sources, e.target) for e in f.hyperquiver.edges] == [((1, 2), 1), ((1, 2), 1)]
    assert f.partition.class_of == (1, 1)
    assert f.partition.perm_of == ((1, 2, 3), (2, 1, 3))


def test_defaults_fresh_classes_identity_perm():
    f = parse("vertices: 2 2\nedge: target=2 sources=1\nedge: target=2 sources=1\n")
    assert f.partition.class_of == (1, 2)
    assert f.partition.perm_of == ((1, 2), (1, 2))


def test_labels_renumbered():
    text = (
        "vertices: 2 2\n"
        "edge: target=2 sources=1 class=7\n"
        "edge: target=1 sources=2 class=3\n"
        "edge: target=2 sources=1\n"
    )
    assert parse(text).partition.class_of == (1, 2, 3)


def test_comments_and_blank_lines():
    text = "# header\n\nvertices: 3   # dims\n  edge: target=1 sources=1  # loop\n"
    f = parse(text)
    assert tuple(f.dims) == (3,) and len(f.hyperquiver.edges) == 1


def test_no_edges():
    f = parse("vertices: 2 5\n")
    assert f.hyperquiver.n == 2 and f.hyperquiver.edges == ()


def test_round_trip_examples():
    for path in sorted(DATA.glob("*.hq")):
        f = load(path)
        g = parse(render(f))
        assert g == f
        assert render(g) == render(f)


@settings(max_examples=100)
@given(hyperquivers(max_n=4, max_edges=4))
def test_round_trip_random(hd):
    H, d = hd
    f = parse(render(HyperquiverFile(H, d, singleton_partition(H))))
    assert f.hyperquiver == H
    assert tuple(f.dims) == tuple(d)
    assert f.partition == singleton_partition(H)


@pytest.mark.parametrize(
    "text,line",
    [
        ("edge: target=1 sources=1\n", 1),
        ("vertices: 2\nvertices: 2\n", 2),
        ("# c\nvertices: 2 x\n", 2),
        ("vertices: 2\nedge target=1 sources=1\n", 2),
        ("vertices: 2\nedge: target=1\n", 2),
        ("vertices: 2\nedge: sources=1\n", 2),
        ("vertices: 2\nedge: target=1 sources=1 colour=2\n", 2),
        ("vertices: 2\nedge: target=1 sources=1 sources=1\n", 2),
        ("vertices: 2\nedge: target=1,2 sources=1\n", 2),
        ("vertices: 2\nedge: target=1 sources=1,,2\n", 2),
        ("vertices: 2\nedge: target=1 sources=1 perm=1,2,3\n", 2),
        ("vertices: 2\nedge: target=1 sources=1 class=a\n", 2),
        ("vertices: 2\n\n\nnodes: 3\n", 4),
        ("vertices:\n", 1),
    ],
)
def test_syntax_errors_report_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.lineno == line
    assert str(exc.value).startswith(f"line {line}:")


def test_missing_vertices():
    with pytest.raises(ParseError):
        parse("# nothing\n")


def test_semantic_errors():
    with pytest.raises(HyperquiverError):
        parse("vertices: 2\nedge: target=2 sources=1\n")
    with pytest.raises(HyperquiverError):
        parse("vertices: 0\n")
    # one tensor on two edges whose targets read the same mode
    with pytest.raises(HyperquiverError):
        parse(
            "vertices: 2 2\n"
            "edge: target=1 sources=2 class=1 perm=1,2\n"
            "edge: target=2 sources=1 class=1 perm=1,2\n"
        )


def test_validate_off():
    f = parse("vertices: 2\nedge: target=2 sources=1\n", validate=False)
    assert f.hyperquiver.edges[0].target == 2
