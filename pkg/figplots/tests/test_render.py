import shutil
import subprocess
import sys

import numpy as np
import pytest

from figplots import ENTROPY_HEADER, POTENTIAL_HEADER, FigureSpec, load_series, render
from figplots.cli import main


def _write_csv(path, header, rows):
    lines = [",".join(header)] + [",".join(f"{v:.8e}" for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")


@pytest.fixture
def potential_csv(tmp_path):
    # synthetic but contract-exact: Newtonian 1/r against a flattening curve
    radii = np.logspace(-6, -3, 40)
    rows = [(r, -6.674e-25 / r, -6.674e-25 / max(r, 2.5e-5)) for r in radii]
    path = tmp_path / "potential.csv"
    _write_csv(path, POTENTIAL_HEADER, rows)
    return path


@pytest.fixture
def entropy_csv(tmp_path):
    seps = np.linspace(1.5e-4, 1e-3, 30)
    rows = [(s, 0.1 * (1.5e-4 / s) ** 2, 0.098 * (1.5e-4 / s) ** 2) for s in seps]
    path = tmp_path / "entropy.csv"
    _write_csv(path, ENTROPY_HEADER, rows)
    return path


class TestLoadSeries:
    def test_roundtrip(self, potential_csv):
        data = load_series(str(potential_csv), POTENTIAL_HEADER)
        assert data.shape == (40, 3)

    def test_identical_bytes_identical_series(self, potential_csv, tmp_path):
        copy = tmp_path / "copy.csv"
        shutil.copyfile(potential_csv, copy)
        a = load_series(str(potential_csv), POTENTIAL_HEADER)
        b = load_series(str(copy), POTENTIAL_HEADER)
        assert np.array_equal(a, b)

    def test_wrong_header_rejected(self, entropy_csv):
        with pytest.raises(ValueError):
            load_series(str(entropy_csv), POTENTIAL_HEADER)

    def test_empty_file_rejected(self, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text("")
        with pytest.raises(ValueError):
            load_series(str(empty), POTENTIAL_HEADER)

    def test_header_only_rejected(self, tmp_path):
        path = tmp_path / "bare.csv"
        path.write_text(",".join(POTENTIAL_HEADER) + "\n")
        with pytest.raises(ValueError):
            load_series(str(path), POTENTIAL_HEADER)

    def test_missing_file_rejected(self):
        with pytest.raises(ValueError):
            load_series("/nonexistent.csv", POTENTIAL_HEADER)


class TestRender:
    def test_potential_svg(self, potential_csv, tmp_path):
        out = tmp_path / "potential.svg"
        render(FigureSpec("potential", str(potential_csv), str(out)))
        assert out.is_file() and out.stat().st_size > 0

    def test_entropy_png(self, entropy_csv, tmp_path):
        out = tmp_path / "entropy.png"
        render(FigureSpec("entropy", str(entropy_csv), str(out)))
        assert out.is_file() and out.stat().st_size > 0

    def test_bad_kind_and_extension(self, potential_csv, tmp_path):
        with pytest.raises(ValueError):
            FigureSpec("histogram", str(potential_csv), str(tmp_path / "x.svg"))
        with pytest.raises(ValueError):
            FigureSpec("potential", str(potential_csv), str(tmp_path / "x.pdf"))


class TestCli:
    def test_success(self, potential_csv, tmp_path):
        out = tmp_path / "fig.png"
        assert main(["potential", "--in", str(potential_csv), "--out", str(out)]) == 0
        assert out.is_file()

    def test_empty_csv_exits_1_without_output(self, tmp_path, capsys):
        empty = tmp_path / "empty.csv"
        empty.write_text("")
        out = tmp_path / "fig.svg"
        assert main(["potential", "--in", str(empty), "--out", str(out)]) == 1
        assert not out.exists()
        assert "error" in capsys.readouterr().err

    def test_wrong_contract_exits_1(self, entropy_csv, tmp_path):
        out = tmp_path / "fig.svg"
        assert main(["potential", "--in", str(entropy_csv), "--out", str(out)]) == 1
        assert not out.exists()


@pytest.mark.skipif(shutil.which("gravent") is None, reason="gravent CLI not installed")
class TestEndToEnd:
    """Acceptance: default CSVs from the simulator render into both figures."""

    def test_default_csvs_render_and_behave(self, tmp_path):
        pot_csv = tmp_path / "potential.csv"
        ent_csv = tmp_path / "entropy.csv"
        subprocess.run(["gravent", "potential", "--out", str(pot_csv)], check=True, timeout=300)
        subprocess.run(["gravent", "entropy-sweep", "--out", str(ent_csv)], check=True, timeout=300)

        pot_fig = tmp_path / "potential.svg"
        ent_fig = tmp_path / "entropy.png"
        assert main(["potential", "--in", str(pot_csv), "--out", str(pot_fig)]) == 0
        assert main(["entropy", "--in", str(ent_csv), "--out", str(ent_fig)]) == 0
        assert pot_fig.stat().st_size > 0
        assert ent_fig.stat().st_size > 0

        # the plotted IDG potential series flattens below the 5e-5 m range
        pot = load_series(str(pot_csv), POTENTIAL_HEADER)
        flat = pot[pot[:, 0] < 1e-5]
        assert len(flat) > 3
        assert np.ptp(flat[:, 2]) < 0.01 * np.max(np.abs(flat[:, 2]))
        # while the Newtonian column is anything but flat there
        assert np.ptp(flat[:, 1]) > np.max(np.abs(flat[:, 2]))

        # the entropy IDG series sits at or below the Newtonian one pointwise
        ent = load_series(str(ent_csv), ENTROPY_HEADER)
        assert np.all(ent[:, 2] <= ent[:, 1] + 1e-15)


def test_module_entry_smoke(tmp_path, potential_csv):
    out = tmp_path / "fig.svg"
    result = subprocess.run(
        [sys.executable, "-m", "figplots.cli", "potential", "--in", str(potential_csv), "--out", str(out)],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert result.returncode == 0
    assert out.is_file()
