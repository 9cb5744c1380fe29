import pytest

from fusionkit.services.functor_files import format_functor, parse_functor_text
from fusionkit.services.group_files import parse_group_text
from fusionkit.services.ring_files import ParseError, format_ring, load_ring_file, parse_ring_text

Z2_TEXT = """\
# comment line
ring Z2
rank 2
labels 1 g   # trailing comment
dual 0 1
nz 0 0 0 1
nz 0 1 1 1
nz 1 0 1 1
nz 1 1 0 1
end
"""


def _z2_with(line: str) -> str:
    return Z2_TEXT.replace("end\n", line + "\nend\n")


def test_parse_ring_text():
    ring = parse_ring_text(Z2_TEXT)
    assert ring.name == "Z2"
    assert ring.labels == ("1", "g")
    assert ring.dual == (0, 1)
    assert ring.coefficient(1, 1, 0) == 1
    assert ring.grades is None


def test_format_ring_reparses_to_the_same_ring():
    ring = parse_ring_text(Z2_TEXT)
    assert parse_ring_text(format_ring(ring)) == ring


@pytest.mark.parametrize(
    "text,message",
    [
        (Z2_TEXT.replace("end\n", ""), "missing end"),
        (Z2_TEXT + "nz 0 0 0 1\n", "content after end"),
        (Z2_TEXT.replace("rank 2", "rank 0"), "rank must be positive"),
        (Z2_TEXT.replace("labels 1 g", "labels 1 1"), "labels must be distinct"),
        (Z2_TEXT.replace("labels 1 g", "labels 1"), "expected 2 labels"),
        (Z2_TEXT.replace("dual 0 1", "dual 0 0"), "dual must be a permutation"),
        (Z2_TEXT.replace("dual 0 1\n", ""), "dual line required"),
        (_z2_with("nz 0 0 2 1"), "out of range"),
        (_z2_with("nz 0 0 0 1"), "duplicate nz"),
        (_z2_with("nz 1 1 1 0"), "multiplicity must be positive"),
        (_z2_with("nz 1 x 1 1"), "expected integers"),
        (_z2_with("unit 1"), "unit must be basis index 0"),
        (_z2_with("grade 0 even"), "grade lines must cover"),
        (_z2_with("colour 1"), "unknown keyword"),
        ("rank 2\nend\n", "file must start with ring"),
    ],
)
def test_parse_ring_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_ring_text(text, source="z2.ring")


def test_parse_error_carries_the_location():
    with pytest.raises(ParseError) as excinfo:
        parse_ring_text(Z2_TEXT.replace("dual 0 1", "dual 0 0"), source="z2.ring")
    assert excinfo.value.line_no == 5
    assert str(excinfo.value).startswith("z2.ring:5:")


def test_grade_lines():
    ring = parse_ring_text(_z2_with("grade 0 even\ngrade 1 odd"))
    assert ring.grades == ("even", "odd")


def test_parse_functor_text():
    ring = parse_ring_text(Z2_TEXT)
    text = "functor id\nsource Z2\ntarget Z2\nm 0 0 1\nm 1 1 1\nend\n"
    functor = parse_functor_text(text, {"Z2": ring})
    assert functor.matrix == ((1, 0), (0, 1))
    assert functor.subgroup is None
    assert parse_functor_text(format_functor(functor), {"Z2": ring}) == functor


@pytest.mark.parametrize(
    "text,message",
    [
        ("functor f\nsource Z3\ntarget Z2\nend\n", "unknown ring 'Z3'"),
        ("functor f\nsource Z2\nm 0 0 1\nend\n", "must precede m lines"),
        ("functor f\nsource Z2\ntarget Z2\nm 0 2 1\nend\n", "out of range"),
        ("functor f\nsource Z2\ntarget Z2\nm 0 0 1\nm 0 0 1\nend\n", "duplicate m"),
        ("functor f\nsource Z2\nend\n", "are required"),
    ],
)
def test_parse_functor_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_functor_text(text, {"Z2": parse_ring_text(Z2_TEXT)})


def test_parse_group_text():
    g = parse_group_text("group Z2\norder 2\nmul 0 1\nmul 1 0\nend\n")
    assert g.table == ((0, 1), (1, 0))
    assert g.element_labels() == ("e", "g1")


@pytest.mark.parametrize(
    "text,message",
    [
        ("group Z2\norder 2\nmul 0 1\nend\n", "mul needs 4 entries"),
        ("group Z2\norder 2\nmul 0 2\nmul 1 0\nend\n", "out of range"),
        ("group Z2\nmul 0 1\nend\n", "order must precede mul"),
        ("group Z2\norder 2\nlabels e e\nmul 0 1 1 0\nend\n", "distinct labels"),
    ],
)
def test_parse_group_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_group_text(text)


def test_load_ring_file_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "bad.ring"
    path.write_bytes(b"ring X\nlabels \xff\xfe\n")
    with pytest.raises(ParseError, match="not valid utf-8") as excinfo:
        load_ring_file(path)
    assert excinfo.value.line_no == 0
