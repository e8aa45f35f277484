"""Text rendering smoke tests (shape checks, not pixel art)."""

from wenzl.render import ascii_matching, ascii_morphism, tikz_matching
from wenzl.rings import QQ
from wenzl.tl import TLMorphism, cup_matching, e_matching, identity_matching


def test_identity_is_vertical_bars():
    art = ascii_matching(identity_matching(3))
    assert art.splitlines() == ["| | |"]


def test_e1_is_cup_over_cap():
    art = ascii_matching(e_matching(1, 2))
    assert art.splitlines() == ["+-+", "+-+"]


def test_cup_render():
    art = ascii_matching(cup_matching())
    assert "+" in art and "-" in art


def test_nested_arcs_have_depth():
    from wenzl.tl import nested_caps_matching

    art = ascii_matching(nested_caps_matching(2))
    lines = art.splitlines()
    assert len(lines) == 2
    assert lines[0].count("+") == 2  # inner arc
    assert lines[1].count("+") == 2  # outer arc below it


def test_through_with_jog_renders():
    from wenzl.tl import matching

    m = matching(3, 1, [(0, 1), (2, 3)])
    art = ascii_matching(m)
    assert "+" in art  # the jog corners


def test_morphism_render_includes_coefficients(jw_cache):
    from wenzl.jw import jones_wenzl

    art = ascii_morphism(jones_wenzl(2, QQ, jw_cache))
    assert "1/2" in art
    assert "2 term(s)" in art


def test_zero_render():
    assert ascii_morphism(TLMorphism.zero(2, 2)).startswith("0")


def test_tikz_contains_draws():
    t = tikz_matching(e_matching(1, 2))
    assert t.startswith("\\begin{tikzpicture}")
    assert t.count("\\draw") == 2
