"""Frontiers, SL2-tilings and the constructions built on them."""
from .bands import Band, BandTiling, continuant_tiling, extend_from_band, extend_partial
from .frontier import (
    Frontier,
    Point,
    Region,
    Tiling,
    evaluate,
    evaluate_general,
    general_word_value,
    linearization_by_determinant,
    linearization_coefficient,
    make_frontier,
    ray,
    semi_adjacent_minor,
    word_of_point,
)
from .paths import count_fringe_paths, fringe_of_word
from .quadratic import (
    QuadReport,
    bilinear,
    is_cor_pyth_form,
    pythagorean_triple,
    qform_to_word,
    quad_corner_report,
)

__all__ = [
    "Band", "BandTiling", "continuant_tiling", "extend_from_band", "extend_partial",
    "Frontier", "Point", "Region", "Tiling", "evaluate", "evaluate_general",
    "general_word_value", "linearization_by_determinant", "linearization_coefficient",
    "make_frontier", "ray", "semi_adjacent_minor", "word_of_point",
    "count_fringe_paths", "fringe_of_word",
    "QuadReport", "bilinear", "is_cor_pyth_form", "pythagorean_triple",
    "qform_to_word", "quad_corner_report",
]
