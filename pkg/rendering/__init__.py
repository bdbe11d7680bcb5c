# init for rendering folder containing svg_renderer.py
from .svg_renderer import SvgRenderer
