"""Figure rendering for the gravitational-entanglement simulator's CSV output."""

from .render import ENTROPY_HEADER, KINDS, POTENTIAL_HEADER, FigureSpec, load_series, render

__version__ = "0.1.0"
