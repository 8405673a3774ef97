"""Tests for the command-line console."""
import json

import pytest

from app.cli import main, read_shapes
from app.shared.errors import InconsistentInputError, MissingDataError
from tests.conftest import FIGURE_EIGHT_VOL, FIVE_TWO_CS, FIVE_TWO_REAL_CS, FIVE_TWO_VOL


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_validate(capsys):
    """Validate prints the edge valences and the cusp summary."""
    status, out, _ = run(capsys, "validate", "5_2")
    assert status == 0
    summary = json.loads(out)
    assert summary["edge_classes"] == [6, 5, 7]
    assert summary["cusps"] == [{"index": 0, "triangles": 12, "euler_characteristic": 0}]


def test_solve_from_field_with_real_root(capsys):
    status, out, _ = run(capsys, "solve", "5_2", "--field", "--root=-0.7548776662466927,0")
    assert status == 0
    payload = json.loads(out)
    assert payload["source"] == "field"
    assert all(im == 0 for _, im in payload["shapes"])


def test_solve_seeded_from_the_file_shapes(capsys, tmp_path, figure_eight_document):
    """A triangulation file doubles as a seed file through its shapes list."""
    path = tmp_path / "figure_eight.json"
    path.write_text(json.dumps(figure_eight_document))
    status, out, _ = run(capsys, "solve", str(path), "--seed-file", str(path))
    assert status == 0
    payload = json.loads(out)
    assert payload["iterations"] <= 2
    for pair, expected in zip(payload["shapes"], figure_eight_document["shapes"]):
        assert pair == pytest.approx(expected, abs=1e-12)


def test_cvol_json(capsys):
    status, out, _ = run(capsys, "cvol", "5_2", "--field", "--json")
    assert status == 0
    payload = json.loads(out)
    assert payload["vol"] == pytest.approx(FIVE_TWO_VOL, abs=1e-10)
    assert payload["cs_mod_pi2"] == pytest.approx(FIVE_TWO_CS, abs=1e-9)
    assert [(f["p"], f["q"]) for f in payload["flattenings"]] == [(0, -1), (-1, 0), (-1, 0)]


def test_cvol_text_output(capsys):
    status, out, _ = run(capsys, "cvol", "figure_eight")
    assert status == 0
    lines = out.splitlines()
    assert lines[0].startswith("vol")
    assert float(lines[0].split()[1]) == pytest.approx(FIGURE_EIGHT_VOL, abs=1e-12)
    assert lines[3].startswith("flattenings    -[")
    assert " + [" in lines[3]


def test_cvol_real_root_and_conjugation(capsys):
    status, out, _ = run(capsys, "cvol", "5_2", "--field", "--root=-0.7548776662466927,0", "--json")
    assert status == 0
    assert json.loads(out)["cs_mod_pi2"] == pytest.approx(FIVE_TWO_REAL_CS, abs=1e-9)

    status, out, _ = run(capsys, "cvol", "5_2", "--field", "--conjugate", "--json")
    assert status == 0
    assert json.loads(out)["vol"] == pytest.approx(-FIVE_TWO_VOL, abs=1e-10)


def test_cvol_from_shapes_file(capsys, tmp_path):
    path = tmp_path / "shapes.json"
    path.write_text(json.dumps({"shapes": [[0.5, -0.8660254037844386], [0.5, 0.8660254037844386]]}))
    status, out, _ = run(capsys, "cvol", "figure_eight", "--shapes-file", str(path), "--json")
    assert status == 0
    assert json.loads(out)["vol"] == pytest.approx(FIGURE_EIGHT_VOL, abs=1e-10)


def test_develop_dumps_triangles(capsys, tmp_path):
    out_file = tmp_path / "cusp.json"
    status, out, _ = run(capsys, "develop", "5_2", "--base", "1,2,0", "--dump-cusp", str(out_file))
    assert status == 0
    assert json.loads(out) == {"bases": {"0": [1, 2, 0]}, "triangles": 12}
    dumped = json.loads(out_file.read_text())
    assert len(dumped) == 12
    assert (dumped[0]["tet"], dumped[0]["vertex"]) == (1, 2)
    assert dumped[0]["corners"]["1"] == [0.0, 0.0]


def test_check_passes(capsys):
    status, out, _ = run(capsys, "check", "5_2", "--field", "--samples", "3", "--json")
    assert status == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert len(report["checks"]) == 13


def test_fiveterm(capsys):
    status, out, _ = run(capsys, "fiveterm", "--samples", "5", "--rng-seed", "2")
    assert status == 0
    assert json.loads(out)["failures"] == 0


def test_missing_file_reports_the_error_code(capsys):
    status, out, err = run(capsys, "cvol", "no_such_manifold")
    assert status == 1
    assert out == ""
    assert "error MISSING_DATA" in err


def test_perturbed_shapes_are_rejected(capsys, tmp_path):
    path = tmp_path / "shapes.json"
    path.write_text(json.dumps([[0.5, -0.87], [0.5, 0.8660254037844386]]))
    status, _, err = run(capsys, "cvol", "figure_eight", "--shapes-file", str(path))
    assert status == 1
    assert "error GLUING_RESIDUAL" in err


def test_bad_root_argument(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(["solve", "5_2", "--field", "--root", "0.8774"])
    assert exc_info.value.code == 2


def test_read_shapes(tmp_path):
    path = tmp_path / "shapes.json"
    path.write_text("[[1, 2], [3, 4]]")
    assert read_shapes(str(path)) == [complex(1, 2), complex(3, 4)]

    path.write_text('{"shapes": [[1]]}')
    with pytest.raises(InconsistentInputError):
        read_shapes(str(path))

    with pytest.raises(MissingDataError):
        read_shapes(str(tmp_path / "absent.json"))
