from fivevertex import lattice, render
from fivevertex.lattice import ModelSpec


def test_palette_fixed_then_distinct():
    assert render.color_hex(1) == "#cc2222"
    assert render.color_hex(2) == "#2244cc"
    assert render.color_hex(3) == "#22aa33"
    assert render.color_hex(4) == "#ee8800"
    swatch = [render.color_hex(m) for m in range(1, 10)]
    assert len(set(swatch)) == len(swatch)
    assert all(len(c) == 7 and c.startswith("#") for c in swatch)


def test_svg_structure_and_determinism():
    (state,) = lattice.enumerate_states(ModelSpec((1, 0), (1, 2), "closed"))
    svg = render.render_svg(state)
    assert svg == render.render_svg(state)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    # one polyline per color, a circle per edge, '+' on uncolored boundary
    assert svg.count("<polyline") == 2
    spec = state.spec
    edges = spec.r * (spec.n + 1) + (spec.r + 1) * spec.n
    dots = spec.r * spec.n
    plus_marks = 2 * spec.n  # uncolored boundary edges render as text
    assert svg.count("<circle") == edges - plus_marks + dots
    assert svg.count(">+</text>") == plus_marks


def test_boundary_plus_count():
    # uncolored boundary edges: all of bottom (n) and left (r), plus the
    # top ones away from the entry columns (n - r)
    for lam, w in (((1, 0), (2, 1)), ((2, 1, 0), (1, 3, 2))):
        spec = ModelSpec(lam, w, "closed")
        for state in lattice.enumerate_states(spec):
            svg = render.render_svg(state)
            expected = spec.n + spec.r + (spec.n - spec.r)
            assert svg.count(">+</text>") == expected
