import hashlib
import re
from pathlib import Path
from xml.etree import ElementTree

import pytest

from phinary.errors import DomainError
from phinary.geometry import row
from phinary.svg import render_svg

GOLDEN = Path(__file__).parent / "golden"
CASES = {
    "gd6": ("gd", 6, False),
    "gt6": ("gt", 6, False),
    "nd5_perspective": ("nd", 5, True),
    "projection4": ("projection", 4, False),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_checksums(name):
    text = render_svg(*CASES[name])
    want = (GOLDEN / f"{name}.svg.sha256").read_text().strip()
    assert hashlib.sha256(text.encode()).hexdigest() == want


@pytest.mark.parametrize("name", sorted(CASES))
def test_well_formed_and_complete(name):
    scene, depth, persp = CASES[name]
    text = render_svg(scene, depth, persp)
    root = ElementTree.fromstring(text)
    ns = "{http://www.w3.org/2000/svg}"
    kind = "gd" if scene == "projection" else scene
    facets = root.findall(f"{ns}polygon[@data-row]")
    assert len(facets) == sum(len(row(kind, n)) for n in range(1, depth + 1))
    assert bool(root.findall(f"{ns}line")) == (persp or scene == "projection")
    coords = " ".join(p.get("points") for p in facets).replace(",", " ").split()
    assert all(re.fullmatch(r"-?\d+\.\d{12}", c) for c in coords)


def test_deterministic_and_errors():
    assert render_svg("gd", 5) == render_svg("gd", 5)
    with pytest.raises(DomainError):
        render_svg("gd", 0)
    with pytest.raises(DomainError):
        render_svg("hexagon", 2)
