"""
Juggling diagrams: beats as dots on a baseline, one arc per throw from
beat i to beat i + t_i. Arcs running past the last beat are clipped.
A height-0 throw draws nothing.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .core import ParameterError, as_word


@dataclass(frozen=True)
class Arc:
    start: int
    end: int
    clipped: bool


def diagram_arcs(t: Sequence[int], periods: int = 3) -> list[Arc]:
    t = as_word(t)
    if periods < 1:
        raise ParameterError("periods must be at least 1")
    last = periods * len(t) - 1
    arcs = []
    for i in range(last + 1):
        h = t[i % len(t)]
        if h:
            arcs.append(Arc(i, i + h, i + h > last))
    return arcs


def collisions(t: Sequence[int]) -> list[tuple[int, tuple[int, ...]]]:
    """Landing slots (mod n) hit by more than one throw, with the throwing beats."""
    n = len(t)
    lands = defaultdict(list)
    for i, h in enumerate(t):
        lands[(i + h) % n].append(i)
    return sorted((slot, tuple(beats)) for slot, beats in lands.items() if len(beats) > 1)


def _collision_notes(t) -> list[str]:
    n = len(t)
    return [
        f"collision: throws from beats {', '.join(map(str, beats))} all land at beat {slot} (mod {n})"
        for slot, beats in collisions(t)
    ]


def render_ascii(t: Sequence[int], periods: int = 3) -> str:
    t = as_word(t)
    arcs = diagram_arcs(t, periods)
    beats = periods * len(t)
    step = max(4, len(str(max(t))) + 2)
    width = (beats - 1) * step + 1

    rows = []
    for arc in sorted(arcs, key=lambda a: (-(a.end - a.start), a.start)):
        line = [" "] * width
        a = arc.start * step
        b = width - 1 if arc.clipped else arc.end * step
        for c in range(a, b + 1):
            line[c] = "-"
        line[a] = "+"
        line[b] = ">" if arc.clipped else "+"
        tag = f"{arc.start}->{arc.end}" + (" (clipped)" if arc.clipped else "")
        rows.append("".join(line) + "   " + tag)

    dots = [" "] * width
    labels = [" "] * width
    for i in range(beats):
        dots[i * step] = "o"
        text = str(t[i % len(t)])
        labels[i * step:i * step + len(text)] = text
    out = rows + ["".join(dots).rstrip(), "".join(labels).rstrip()]
    out.extend(_collision_notes(t))
    return "\n".join(out) + "\n"


def render_svg(t: Sequence[int], periods: int = 3) -> str:
    """Plain SVG built by string formatting, byte-identical for equal inputs."""
    t = as_word(t)
    arcs = diagram_arcs(t, periods)
    notes = _collision_notes(t)
    beats = periods * len(t)
    gap, margin, rise = 40, 20, 14
    tallest = max((a.end - a.start for a in arcs), default=0)
    top = margin + 16 * len(notes)
    base = top + rise * tallest + 10
    width = 2 * margin + gap * (beats - 1)
    height = base + 30

    def x(i: int) -> int:
        return margin + gap * i

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<defs><clipPath id="window">'
        f'<rect x="0" y="0" width="{x(beats - 1) + 6}" height="{height}"/></clipPath></defs>',
        '<g fill="none" stroke="black" stroke-width="1.5" clip-path="url(#window)">',
    ]
    for arc in arcs:
        span = arc.end - arc.start
        mid = (x(arc.start) + x(arc.end)) / 2
        lines.append(
            f'<path d="M {x(arc.start)} {base - 5} Q {mid:g} {base - 5 - 2 * rise * span} '
            f'{x(arc.end)} {base - 5}"/>'
        )
    lines.append("</g>")
    lines.append('<g fill="white" stroke="black">')
    for i in range(beats):
        lines.append(f'<circle cx="{x(i)}" cy="{base}" r="4"/>')
    lines.append("</g>")
    lines.append('<g font-family="monospace" font-size="12" text-anchor="middle">')
    for i in range(beats):
        lines.append(f'<text x="{x(i)}" y="{base + 20}">{t[i % len(t)]}</text>')
    lines.append("</g>")
    for j, note in enumerate(notes):
        lines.append(f'<text x="{margin}" y="{margin + 16 * j}" font-family="monospace" '
                     f'font-size="11" fill="firebrick">{note}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
