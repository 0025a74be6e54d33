"""Chart rendering for mined phrase tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analytics import top_k


def save_top_phrases_chart(principals, path, k: int = 20,
                           title: str = "Most frequent principal phrases") -> None:
    """Render a horizontal bar chart of the top k phrases to an image file."""
    pairs = top_k(principals, k)
    labels = [text for text, _ in pairs]
    values = [freq for _, freq in pairs]
    height = max(2.0, 0.4 * len(pairs) + 1.2)
    fig, ax = plt.subplots(figsize=(8, height))
    positions = range(len(pairs))
    ax.barh(positions, values, color="#4878a8")
    ax.set_yticks(list(positions))
    ax.set_yticklabels(labels)
    ax.invert_yaxis()
    ax.set_xlabel("rectified frequency")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
