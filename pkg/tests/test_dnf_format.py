import io

import pytest

from src.errors import DnfSyntaxError, IndexOutOfRangeError, NotAntichainError
from src.logic.dnf import MonotoneDNF, generate_majority_phi
from src.logic.dnf_format import load_dnf, parse_dnf, serialize_dnf, write_dnf


def test_parse_skips_comments_and_blank_lines():
    text = "# majority\n\nvars: 3\n1 2\n  1 3  \n# trailing\n2 3\n"
    f = parse_dnf(text)
    assert f == generate_majority_phi(3)


def test_parse_accepts_file_objects():
    f = parse_dnf(io.StringIO("vars: 2\n1 2\n"))
    assert f == MonotoneDNF(2, ((1, 2),))


def test_empty_family_is_constant_zero():
    f = parse_dnf("vars: 4\n")
    assert f.num_vars == 4
    assert f.is_constant


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only a comment\n",
        "1 2\nvars: 2\n",
        "vars: x\n",
        "vars: 0\n",
        "vars: 3\n1 a\n",
        "vars: 3\n2 1\n",
        "vars: 3\n1 1\n",
        "vars:3\n1 2\n",
        "vars:   3\n1 2\n",
    ],
)
def test_malformed_text_rejected(text):
    with pytest.raises(DnfSyntaxError):
        parse_dnf(text)


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRangeError):
        parse_dnf("vars: 3\n1 4\n")
    with pytest.raises(IndexOutOfRangeError):
        parse_dnf("vars: 3\n0 1\n")


def test_containment_rejected_unless_minimized():
    text = "vars: 3\n1\n1 2\n2 3\n"
    with pytest.raises(NotAntichainError):
        parse_dnf(text)
    f = parse_dnf(text, minimize=True)
    assert f.implicants == ((1,), (2, 3))


def test_serialize_then_parse_is_identity(phi5):
    text = serialize_dnf(phi5)
    assert text.startswith("vars: 5\n")
    assert len(text.strip().splitlines()) == 11
    assert parse_dnf(text) == phi5


def test_load_and_write(tmp_path, dnf_file, phi3):
    path = dnf_file("phi3.dnf", "vars: 3\n1 2\n1 3\n2 3\n")
    assert load_dnf(path) == phi3

    out = tmp_path / "copy.dnf"
    write_dnf(phi3, out)
    assert out.read_text() == "vars: 3\n1 2\n1 3\n2 3\n"


def test_load_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "latin.dnf"
    path.write_bytes(b"vars: 2\n1 \xff\n")
    with pytest.raises(DnfSyntaxError, match="not valid UTF-8"):
        load_dnf(path)
