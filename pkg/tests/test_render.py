import re
import xml.etree.ElementTree as ET

import pytest

from tlweyl.render import SPACING, render_svg, render_text, render_tikz
from tlweyl.tl import enumerate_diagrams, word_diagram


def diagram(word, n):
    return word_diagram(word, n)[1]


def test_text_generator():
    assert render_text(diagram((1,), 2)) == (
        "T 1   2   3\n"
        "  ╰───╯   │\n"
        "          │\n"
        "  ╭───╮   │\n"
        "B 1   2   3\n"
    )


def test_text_identity_has_three_verticals():
    lines = render_text(diagram((), 2)).splitlines()
    assert lines[1].split() == ["│", "│", "│"]


def test_text_nested_arcs():
    text = render_text(diagram((2, 1, 3), 3))
    assert text.splitlines() == [
        "T 1   2   3   4",
        "  │   ╰───╯   │",
        "  ╰───────────╯",
        "",
        "  ╭───╮   ╭───╮",
        "B 1   2   3   4",
    ]


def test_text_shifted_strand():
    text = render_text(diagram((1, 2), 2))
    assert "╭───────╯" in text


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_text_is_drawable_for_every_diagram(n):
    for d in enumerate_diagrams(n):
        text = render_text(d)
        assert text.startswith("T 1") and "\nB 1" in text
        # no crossing glyphs ever appear
        assert "┼" not in text


def _svg(d):
    root = ET.fromstring(render_svg(d))
    ns = {"s": "http://www.w3.org/2000/svg"}
    return root, root.findall(".//s:path", ns), root.findall(".//s:text", ns)


def test_svg_generator():
    root, paths, labels = _svg(diagram((1,), 2))
    ds = [p.get("d") for p in paths]
    assert f"M 40 40 A 20 20 0 0 0 80 40" in ds
    assert any(d.startswith("M 120 40 L 120") for d in ds)
    assert [t.text for t in labels] == ["1", "1", "2", "2", "3", "3"]
    assert root.get("width") == str(2 * SPACING + 2 * SPACING)


def test_svg_identity_has_straight_strands():
    _, paths, _ = _svg(diagram((), 2))
    assert len(paths) == 3
    for p in paths:
        xs = re.findall(r"M (\d+) \d+ L (\d+)", p.get("d"))
        assert xs and xs[0][0] == xs[0][1]


def test_svg_arcs_for_nested_example():
    _, paths, _ = _svg(diagram((2, 1, 3), 3))
    arcs = [p.get("d") for p in paths if " A " in p.get("d")]
    assert len(arcs) == 4
    assert "M 40 40 A 60 60 0 0 0 160 40" in arcs


def test_svg_is_deterministic():
    d = diagram((3, 4, 2, 3, 1, 2), 4)
    assert render_svg(d) == render_svg(d)


def test_tikz():
    text = render_tikz(diagram((1,), 2))
    assert text.startswith("\\begin{tikzpicture}") and text.rstrip().endswith("\\end{tikzpicture}")
    assert "\\draw (0,0) arc[start angle=180, end angle=360, radius=0.5];" in text
    assert text.count("node[above]") == 3 and text.count("node[below]") == 3
