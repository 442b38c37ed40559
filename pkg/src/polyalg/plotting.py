"""Figure rendering for the CLI report paths (file output only)."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def render_block_spectrum(block_labels, eigenvalues, path: str, title: str = "") -> str:
    """Eigenvalues per conserved block as stacked level markers."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for x, (label, eigs) in enumerate(zip(block_labels, eigenvalues)):
        ax.hlines(eigs, x - 0.3, x + 0.3, lw=1.6)
    ax.set_xticks(range(len(block_labels)))
    ax.set_xticklabels([str(b) for b in block_labels], rotation=0)
    ax.set_xlabel("conserved block")
    ax.set_ylabel("energy")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_degeneracy(ns: Sequence[int], ordered, unordered, path: str) -> str:
    """Ordered/unordered level-degeneracy counts against N."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, ordered, "o-", ms=3, label="ordered compositions")
    ax.plot(ns, unordered, "s--", ms=3, label="unordered")
    ax.set_xlabel("level N")
    ax.set_ylabel("degeneracy")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
