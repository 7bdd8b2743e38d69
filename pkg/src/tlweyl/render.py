"""Text, SVG and TikZ drawings of Temperley-Lieb diagrams."""
from __future__ import annotations

from .tl import TLDiagram

SPACING = 40
"""Distance between neighbouring points in SVG user units (TikZ: 1 cm)."""

TEXT_STEP = 4


def _levels(arcs: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """Nesting height of each arc: 1 for innermost, 1 + max of nested arcs otherwise."""
    level: dict[tuple[int, int], int] = {}
    for a, b in sorted(arcs, key=lambda t: t[1] - t[0]):
        inner = [level[t] for t in level if a < t[0] and t[1] < b]
        level[(a, b)] = 1 + max(inner, default=0)
    return level


def _parts(d: TLDiagram):
    top = sorted(d.top_arcs())
    bottom = sorted(d.bottom_arcs())
    return top, bottom, d.through_strands()


def render_text(d: TLDiagram) -> str:
    m = d.m
    top, bottom, strands = _parts(d)
    top_lv, bot_lv = _levels(top), _levels(bottom)
    width = TEXT_STEP * (m - 1) + 1
    col = lambda k: TEXT_STEP * (k - 1)

    def blank():
        return [" "] * width

    def label_row():
        row = blank()
        for k in range(1, m + 1):
            for off, ch in enumerate(str(k)):
                if col(k) + off < width:
                    row[col(k) + off] = ch
        return row

    rows: list[list[str]] = [label_row()]
    top_h = max(top_lv.values(), default=0)
    for r in range(1, top_h + 1):
        row = blank()
        for (a, b), lv in top_lv.items():
            if r < lv:
                row[col(a)] = row[col(b)] = "│"
            elif r == lv:
                row[col(a)], row[col(b)] = "╰", "╯"
                for x in range(col(a) + 1, col(b)):
                    row[x] = "─"
        for t, _ in strands:
            row[col(t)] = "│"
        rows.append(row)

    # through-strands: one jog per slanted strand, ordered so jogs never cross
    position = {t: t for t, _ in strands}
    right = sorted([s for s in strands if s[1] > s[0]], reverse=True)
    left = sorted([s for s in strands if s[1] < s[0]])
    middle = [blank()]
    for t, _ in strands:
        middle[0][col(t)] = "│"
    for t, b in right + left:
        row = blank()
        for t2, _ in strands:
            if t2 != t:
                row[col(position[t2])] = "│"
        lo, hi = sorted((col(t), col(b)))
        for x in range(lo + 1, hi):
            row[x] = "─"
        row[col(t)], row[col(b)] = ("╰", "╮") if b > t else ("╯", "╭")
        middle.append(row)
        position[t] = b
        tail = blank()
        for t2, _ in strands:
            tail[col(position[t2])] = "│"
        middle.append(tail)
    rows.extend(middle)

    bot_h = max(bot_lv.values(), default=0)
    for r in range(bot_h, 0, -1):
        row = blank()
        for (a, b), lv in bot_lv.items():
            if r < lv:
                row[col(a)] = row[col(b)] = "│"
            elif r == lv:
                row[col(a)], row[col(b)] = "╭", "╮"
                for x in range(col(a) + 1, col(b)):
                    row[x] = "─"
        for _, b in strands:
            row[col(b)] = "│"
        rows.append(row)
    rows.append(label_row())
    prefixes = ["T "] + ["  "] * (len(rows) - 2) + ["B "]
    return "\n".join((p + "".join(r)).rstrip() for p, r in zip(prefixes, rows)) + "\n"


def _geometry(d: TLDiagram):
    top, bottom, strands = _parts(d)
    r_top = max((SPACING * (b - a) / 2 for a, b in top), default=0)
    r_bot = max((SPACING * (b - a) / 2 for a, b in bottom), default=0)
    band = SPACING
    height = r_top + band + r_bot
    return top, bottom, strands, r_top, r_bot, band, height


def _num(x: float) -> str:
    return f"{x:g}"


def render_svg(d: TLDiagram) -> str:
    top, bottom, strands, r_top, r_bot, band, height = _geometry(d)
    margin = SPACING
    x = lambda k: margin + SPACING * (k - 1)
    y_top = margin
    y_bot = margin + height
    w = 2 * margin + SPACING * (d.m - 1)
    h = y_bot + margin
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(w)}" height="{_num(h)}" '
        f'viewBox="0 0 {_num(w)} {_num(h)}">',
        '<g fill="none" stroke="black" stroke-width="2">',
    ]
    for a, b in top:
        r = SPACING * (b - a) / 2
        out.append(f'<path d="M {_num(x(a))} {_num(y_top)} A {_num(r)} {_num(r)} 0 0 0 {_num(x(b))} {_num(y_top)}"/>')
    for a, b in bottom:
        r = SPACING * (b - a) / 2
        out.append(f'<path d="M {_num(x(a))} {_num(y_bot)} A {_num(r)} {_num(r)} 0 0 1 {_num(x(b))} {_num(y_bot)}"/>')
    y1, y2 = y_top + r_top, y_top + r_top + band
    ym = (y1 + y2) / 2
    for t, b in strands:
        if t == b:
            out.append(f'<path d="M {_num(x(t))} {_num(y_top)} L {_num(x(b))} {_num(y_bot)}"/>')
        else:
            out.append(
                f'<path d="M {_num(x(t))} {_num(y_top)} L {_num(x(t))} {_num(y1)} '
                f'C {_num(x(t))} {_num(ym)} {_num(x(b))} {_num(ym)} {_num(x(b))} {_num(y2)} '
                f'L {_num(x(b))} {_num(y_bot)}"/>'
            )
    out.append("</g>")
    out.append('<g fill="black" font-family="sans-serif" font-size="12" text-anchor="middle">')
    for k in range(1, d.m + 1):
        out.append(f'<circle cx="{_num(x(k))}" cy="{_num(y_top)}" r="3"/>')
        out.append(f'<circle cx="{_num(x(k))}" cy="{_num(y_bot)}" r="3"/>')
        out.append(f'<text x="{_num(x(k))}" y="{_num(y_top - 10)}">{k}</text>')
        out.append(f'<text x="{_num(x(k))}" y="{_num(y_bot + 20)}">{k}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_tikz(d: TLDiagram) -> str:
    top, bottom, strands, r_top, r_bot, band, height = _geometry(d)
    s = 1 / SPACING
    x = lambda k: k - 1
    y_bot = -height * s
    y1, y2 = -r_top * s, -(r_top + band) * s
    ym = (y1 + y2) / 2
    out = ["\\begin{tikzpicture}"]
    for a, b in top:
        out.append(f"  \\draw ({_num(x(a))},0) arc[start angle=180, end angle=360, radius={_num((b - a) / 2)}];")
    for a, b in bottom:
        out.append(f"  \\draw ({_num(x(a))},{_num(y_bot)}) arc[start angle=180, end angle=0, radius={_num((b - a) / 2)}];")
    for t, b in strands:
        if t == b:
            out.append(f"  \\draw ({_num(x(t))},0) -- ({_num(x(b))},{_num(y_bot)});")
        else:
            out.append(
                f"  \\draw ({_num(x(t))},0) -- ({_num(x(t))},{_num(y1)}) .. controls ({_num(x(t))},{_num(ym)}) "
                f"and ({_num(x(b))},{_num(ym)}) .. ({_num(x(b))},{_num(y2)}) -- ({_num(x(b))},{_num(y_bot)});"
            )
    for k in range(1, d.m + 1):
        out.append(f"  \\fill ({_num(x(k))},0) circle (2pt) node[above] {{{k}}};")
        out.append(f"  \\fill ({_num(x(k))},{_num(y_bot)}) circle (2pt) node[below] {{{k}}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


RENDERERS = {"text": render_text, "svg": render_svg, "tikz": render_tikz}
