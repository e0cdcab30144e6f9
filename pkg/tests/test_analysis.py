"""Test the analysis scripts"""
import matplotlib

matplotlib.use("Agg")

from analysis import catalog_report, plot_profile  # noqa: E402


def test_build_report():
    """Test every context up to rank 3 agrees"""
    df = catalog_report.build_report(3)
    assert list(df.columns) == ["group", "family", "rank", "order", "catalog", "search", "agree", "elapsed_ms"]
    assert bool(df["agree"].all())
    assert "B3/z1" in set(df["group"])
    assert df.loc[df["group"] == "B3/z1", "catalog"].item() == "a3"


def test_catalog_report_main(tmp_path, capsys):
    """Test the report CLI writes a CSV"""
    output = tmp_path / "report.csv"
    assert catalog_report.main(["--max-rank", "2", "-o", str(output)]) == 0
    assert output.exists()
    assert "Catalog Check" in capsys.readouterr().out


def test_plot_profile_main(tmp_path):
    """Test the profile plot is written for a tripod"""
    output = tmp_path / "profile.png"
    assert plot_profile.main(["D4", '["1","2","1","1"]', "-o", str(output)]) == 0
    assert output.exists()


def test_plot_profile_bad_point(tmp_path):
    """Test a malformed point returns 1"""
    assert plot_profile.main(["A2", '["1"]', "-o", str(tmp_path / "x.png")]) == 1
