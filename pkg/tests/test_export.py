from pathlib import Path

import pytest

from fockbound.cli import main
from fockbound.config import load_config
from fockbound.fock import FockSpace
from fockbound.matrix_io import HEADER, read_text
from fockbound.scalar import Surd

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "sym_l_0-1_N3.mtx": ["--label", "0/1", "--variant", "sym", "--truncation", "3"],
    "anti_r_0-a_N3.mtx": ["--label", "0/a", "--variant", "anti", "--truncation", "3", "--side", "right"],
    "full_l_0-1_0-a_adj_N3.mtx": ["--label", "0/1,0/a", "--variant", "full", "--truncation", "3", "--adjoint"],
    "flipz_sym_l_0-1x2_N4.mtx": ["--label", "0/1:2", "--variant", "sym", "--truncation", "4", "--config", "flip_z"],
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_export_matches_golden(name, tmp_path):
    out = tmp_path / name
    assert main(["export-operator", *CASES[name], "--output", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / name).read_bytes()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_round_trip(name):
    text = (GOLDEN / name).read_text()
    assert text.splitlines()[0] == HEADER
    basis, entries = read_text(text)
    assert all(1 <= i <= len(basis) and 1 <= j <= len(basis) for i, j in entries)
    assert all(v for v in entries.values())


def test_sym_golden_coefficients_are_square_roots_of_multiplicities():
    parsed = load_config("z_on_z")
    fock = FockSpace(parsed.action, "sym", 3)
    basis, entries = read_text((GOLDEN / "sym_l_0-1_N3.mtx").read_text())
    x = parsed.action.parse_point("0/1")
    for (i, j), v in entries.items():
        target = fock.sg.parse_word(basis[i - 1])
        assert v == Surd.sqrt(target.count(x))


def test_basis_is_graded(capsys):
    main(["export-operator", "--label", "0/1", "--variant", "full", "--truncation", "2"])
    out = capsys.readouterr().out
    labels = [line.split(" ", 3)[3] for line in out.splitlines() if line.startswith("% basis")]
    degrees = [0 if lab == "*" else lab.count(",") + 1 for lab in labels]
    assert degrees == sorted(degrees)


def test_read_text_rejects_garbage():
    with pytest.raises(ValueError):
        read_text("hello")
    with pytest.raises(ValueError):
        read_text(HEADER + "\n% basis 1 *\n1 1 2\n1 1 1\n")
