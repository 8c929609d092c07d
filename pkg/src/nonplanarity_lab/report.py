"""Report rendering: CSV tables and matplotlib figures next to the JSON."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def write_json(report: dict, path: Path) -> None:
    path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")


def write_baker_report(report: dict, outdir: str | Path) -> list[Path]:
    """Write report.json, trials.csv, and a histogram figure."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    json_path = outdir / "report.json"
    write_json(report, json_path)
    written.append(json_path)

    body = report["result"]
    csv_path = outdir / "trials.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["trial", "value", "is_infinite", "best_q", "best_p"])
        for row in body["per_trial"]:
            writer.writerow(
                [
                    row["trial"],
                    "" if row["value"] is None else row["value"],
                    row["is_infinite"],
                    " ".join(map(str, row["best_q"])),
                    " ".join(map(str, row["best_p"])),
                ]
            )
    written.append(csv_path)

    finite = [r["value"] for r in body["per_trial"] if r["value"] is not None]
    fig, ax = plt.subplots(figsize=(6, 4))
    if finite:
        ax.hist(finite, bins=min(15, max(3, len(finite) // 2)), color="#4878a8")
        if body["median_finite"] is not None:
            ax.axvline(
                body["median_finite"],
                color="#c44e52",
                linestyle="--",
                label=f"median = {body['median_finite']:.3f}",
            )
            ax.legend()
    ax.set_xlabel("multiplicative exponent estimate")
    ax.set_ylabel("trials")
    ax.set_title(
        f"m={body['m']}, n={body['n']}, Q={body['Q']}, "
        f"{body['num_infinite']} exact-zero trials excluded"
    )
    fig.tight_layout()
    fig_path = outdir / "baker_experiment.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    written.append(fig_path)
    return written


def write_exponent_report(report: dict, outdir: str | Path) -> list[Path]:
    """Write report.json, convergence.csv, and the convergence figure."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    json_path = outdir / "report.json"
    write_json(report, json_path)
    written.append(json_path)

    curve = report["result"].get("convergence", [])
    csv_path = outdir / "convergence.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["Q", "estimate", "is_infinite"])
        for row in curve:
            writer.writerow(
                [row["Q"], "" if row["value"] is None else row["value"], row["is_infinite"]]
            )
    written.append(csv_path)

    fig, ax = plt.subplots(figsize=(6, 4))
    pts = [(r["Q"], r["value"]) for r in curve if r["value"] is not None]
    if pts:
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", color="#4878a8")
        ax.set_xscale("log")
    ax.set_xlabel("search bound Q")
    ax.set_ylabel("exponent estimate")
    ax.set_title("estimate vs. search bound")
    fig.tight_layout()
    fig_path = outdir / "exponent_convergence.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    written.append(fig_path)
    return written
