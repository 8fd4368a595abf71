"""Secondary acceptance: the figure pipeline on real primary output."""

import contextlib

from quadplots.render import read_sweep_csv, render_fig1


@contextlib.contextmanager
def criterion(num, label):
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {num}: FAIL ({label})")
        raise
    print(f"[acceptance] criterion {num}: PASS ({label})")


def test_criterion_10_figure_pipeline(fig1_dir, tmp_path):
    with criterion(10, "three-panel render, trapezoid beats GH, stable bytes"):
        first = render_fig1(fig1_dir, tmp_path / "fig1_a.svg")
        second = render_fig1(fig1_dir, tmp_path / "fig1_b.svg")
        assert first.stat().st_size > 10_000
        assert first.read_bytes() == second.read_bytes()
        for p in (1, 3, 5):
            series = read_sweep_csv(fig1_dir / f"fig1_p{p}.csv")
            gh = {n: e for n, e in series["gh"] if e > 0}
            trap = {n: e for n, e in series["trap"] if e > 0}
            assert trap[max(trap)] < gh[max(gh)], p
