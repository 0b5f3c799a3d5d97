from weightgraph.criteria import bound_table
from weightgraph.enumeration import candidate_report
from weightgraph.plotting import plot_bounds, plot_enumeration

PNG = b"\x89PNG\r\n\x1a\n"


def test_plot_bounds(tmp_path):
    path = tmp_path / "bounds.png"
    plot_bounds(bound_table(20), path)
    assert path.read_bytes()[:8] == PNG


def test_plot_enumeration(tmp_path):
    path = tmp_path / "enum.svg"
    plot_enumeration(candidate_report(5), path)
    assert b"<svg" in path.read_bytes()[:500]
