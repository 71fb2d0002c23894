"""Static figure rendering for survey reports. File output only, no GUI."""

from __future__ import annotations

from .survey import SurveyRecord


def render_survey_figure(records: list[SurveyRecord], summary: dict[str, int], path: str) -> None:
    """Two-panel summary figure written next to the delimited report.

    Left: family counts by classification. Right: distribution of the
    smallest star-coefficient numerator across empty-minimal families,
    which shows how close each family sits to losing minimality.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    n = summary["n"]
    fig, (ax_counts, ax_hist) = plt.subplots(1, 2, figsize=(9, 3.6))

    labels = ["total", "empty-minimal", "central"]
    values = [summary["total"], summary["empty_minimal"], summary["central"]]
    bars = ax_counts.bar(labels, values, color=["#4878d0", "#6acc64", "#ee854a"])
    ax_counts.bar_label(bars)
    ax_counts.set_ylabel("families")
    ax_counts.set_title(f"maximal intersecting families on [{n}]")

    mins = [min(r.c_num) for r in records if r.c_num is not None]
    if mins:
        lo, hi = min(mins), max(mins)
        bins = range(lo, hi + 2)
        ax_hist.hist(mins, bins=bins, align="left", rwidth=0.85, color="#4878d0")
        ax_hist.set_xlabel("smallest star-coefficient numerator")
        ax_hist.set_ylabel("families")
        ax_hist.set_title(f"axis minima at the empty set (over {n}!)")
    else:
        ax_hist.text(0.5, 0.5, "no empty-minimal families", ha="center", va="center")
        ax_hist.set_axis_off()

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
