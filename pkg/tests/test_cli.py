import json
from pathlib import Path

import pytest

from jonesrep.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim(capsys):
    assert run(capsys, "dim", "5", "1") == (0, "5\n", "")
    assert run(capsys, "dim", "0", "0") == (0, "1\n", "")
    assert run(capsys, "dim", "4", "0", "3")[1] == "1\n"


def test_charpoly_commutator(capsys):
    code, out, _ = run(capsys, "charpoly", "4", "2", "[2,2 3 3 3 2 -1]")
    assert code == 0
    assert out.startswith("(x - 1)*(x^2 + ")


def test_basis_json(capsys):
    code, out, _ = run(capsys, "basis", "4", "0", "--json")
    assert code == 0 and len(json.loads(out)) == 2


def test_matrix_printed(capsys):
    code, out, _ = run(capsys, "matrix", "3", "1", "1", "--printed")
    assert code == 0 and out.count("[") == 2


def test_deterministic(capsys):
    outs = {run(capsys, "fingerprint", "4", "2", "--json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_exit_codes(capsys):
    assert run(capsys, "dim", "x", "0")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "matrix", "3", "1", "1 q")[0] == 2
    assert run(capsys, "dim", "4", "2", "--t-rational", "2", "--theta", "1/5")[0] == 2
    assert run(capsys, "dim", "4", "4", "5")[0] == 1
    assert run(capsys, "potts", str(DATA / "k33.json"))[0] == 1
    assert run(capsys, "discrete", "--theta", "2/3")[0] == 1


def test_discrete(capsys):
    code, out, _ = run(capsys, "discrete", "--t-rational", "-2")
    assert code == 0 and out.startswith("discrete")
    code, out, _ = run(capsys, "discrete", "--theta", "1/7", "--json")
    assert json.loads(out)["verdict"] == "indiscrete"


def test_potts_file(capsys):
    code, out, _ = run(capsys, "potts", str(DATA / "triangle.json"), "--t-rational", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["agree"] is True


def test_bracket_pd_and_braid(capsys):
    _, pd, _ = run(capsys, "bracket", str(DATA / "trefoil.pd"))
    _, br, _ = run(capsys, "bracket", "--braid", "1 1 1")
    _, mirror, _ = run(capsys, "bracket", "--braid", "-1 -1 -1")
    assert pd in (br, mirror)


def test_image_order(capsys):
    code, out, _ = run(capsys, "image-order", "3", "1", "--root-of-unity", "10", "--simple")
    assert code == 0 and out == "60\nsimple: True\n"


def test_cob(capsys):
    code, out, _ = run(capsys, "cob", "1")
    assert code == 0 and out.endswith("identity holds: True\n")


def test_connectivity_and_irreducible(capsys):
    assert run(capsys, "connectivity", "4", "0", "--space", "plain")[1].endswith("strongly connected: True\n")
    assert run(capsys, "irreducible", "3", "1")[0] == 0


def test_elliptic(capsys):
    code, out, _ = run(capsys, "elliptic", "4", "2", "[2, 2 3 3 3 2 -1]", "--theta", "1/5")
    assert code == 0 and out.startswith("InfiniteOrder")
