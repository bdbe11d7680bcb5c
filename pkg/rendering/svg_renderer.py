import math
import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from shapely import LineString, Point, Polygon
from shapely.affinity import affine_transform

from counting import TripleClass, classify_triple, enumerate_triangles, intersection_table
from geometry import Arrangement, ConcurrencyPoint, concurrency_points
from utils import (
    logger,
    OutputError,
    PreconditionError,
    SVG_CEVIAN_WIDTH,
    SVG_DECIMALS,
    SVG_GRID_COLUMNS,
    SVG_HIGHLIGHT_COLOR,
    SVG_HIGHLIGHT_OPACITY,
    SVG_MARGIN,
    SVG_POINT_COLOR,
    SVG_POINT_RADIUS,
    SVG_SIDE_WIDTH,
    SVG_STROKE_COLOR,
    SVG_VIEWPORT,
)

SVG_NAMESPACE = "http://www.w3.org/2000/svg"
Triple = Tuple[int, int, int]


class SvgRenderer:
    """
    Deterministic SVG figures of a cevian arrangement.

    Exact rational coordinates are converted to floats here and only here;
    nothing rendered feeds back into counting.
    """

    def __init__(
        self,
        arrangement: Arrangement,
        viewport: int = SVG_VIEWPORT,
        margin: int = SVG_MARGIN,
        decimals: int = SVG_DECIMALS,
    ):
        self.arrangement = arrangement
        self.viewport = viewport
        self.margin = margin
        self.decimals = decimals
        self.matrix = self._viewport_matrix()
        self.table = None

        logger.debug(
            f"SvgRenderer created for {arrangement.segment_count} segments, viewport {viewport}")

    def _viewport_matrix(self) -> List[float]:
        """Affine map of the triangle's bounding box onto the viewport, y pointing up."""
        xs = [float(vertex.x) for vertex in self.arrangement.vertices]
        ys = [float(vertex.y) for vertex in self.arrangement.vertices]
        span = max(max(xs) - min(xs), max(ys) - min(ys))
        scale = (self.viewport - 2 * self.margin) / span
        x_offset = self.margin - min(xs) * scale
        y_offset = self.viewport - self.margin + min(ys) * scale
        # shapely order: [a, b, d, e, xoff, yoff]
        return [scale, 0.0, 0.0, -scale, x_offset, y_offset]

    def _project(self, geometry):
        return affine_transform(geometry, self.matrix)

    def _fmt(self, value: float) -> str:
        text = f"{value:.{self.decimals}f}"
        return "0." + "0" * self.decimals if text.startswith("-") and float(text) == 0 else text

    def _coords_text(self, coords: Iterable[Sequence[float]]) -> str:
        return " ".join(f"{self._fmt(x)},{self._fmt(y)}" for x, y in coords)

    # Elements

    def _draw_segments(self, parent: ET.Element) -> None:
        group = ET.SubElement(parent, "g", {"class": "segments", "stroke": SVG_STROKE_COLOR,
                                            "stroke-linecap": "round", "fill": "none"})
        for segment_id, segment in enumerate(self.arrangement.segments):
            line = self._project(LineString([(float(segment.p.x), float(segment.p.y)),
                                             (float(segment.q.x), float(segment.q.y))]))
            (x1, y1), (x2, y2) = line.coords
            ET.SubElement(group, "line", {
                "id": f"s{segment_id}",
                "data-label": str(segment.label),
                "x1": self._fmt(x1), "y1": self._fmt(y1),
                "x2": self._fmt(x2), "y2": self._fmt(y2),
                "stroke-width": str(SVG_SIDE_WIDTH if segment.label.is_side else SVG_CEVIAN_WIDTH),
            })

    def _draw_concurrency_points(self, parent: ET.Element, points: List[ConcurrencyPoint]) -> None:
        group = ET.SubElement(parent, "g", {"class": "concurrency-points", "fill": SVG_POINT_COLOR})
        for point in points:
            marker = self._project(Point(float(point.location.x), float(point.location.y)))
            ET.SubElement(group, "circle", {
                "data-cevians": ",".join(self.arrangement.label(index) for index in point.cevian_ids),
                "cx": self._fmt(marker.x), "cy": self._fmt(marker.y), "r": str(SVG_POINT_RADIUS),
            })

    def _triangle_polygon(self, triple: Triple) -> Polygon:
        if self.table is None:
            self.table = intersection_table(self.arrangement)
        first, second, third = triple
        corners = [self.table[first][second], self.table[first][third], self.table[second][third]]
        return self._project(Polygon([(float(p.x), float(p.y)) for p in corners]))

    def _draw_highlight(self, parent: ET.Element, triple: Triple) -> None:
        polygon = self._triangle_polygon(triple)
        ET.SubElement(parent, "polygon", {
            "class": "highlight",
            "data-segments": ",".join(str(index) for index in triple),
            "points": self._coords_text(list(polygon.exterior.coords)[:-1]),
            "fill": SVG_HIGHLIGHT_COLOR,
            "fill-opacity": str(SVG_HIGHLIGHT_OPACITY),
            "stroke": "none",
        })

    def _draw_figure(self, parent: ET.Element, highlight: Optional[Triple] = None) -> None:
        if highlight is not None:
            self._draw_highlight(parent, highlight)
        self._draw_segments(parent)
        self._draw_concurrency_points(parent, concurrency_points(self.arrangement))

    def _root(self, width: int, height: int) -> ET.Element:
        return ET.Element("svg", {
            "xmlns": SVG_NAMESPACE,
            "version": "1.1",
            "width": str(width),
            "height": str(height),
            "viewBox": f"0 0 {width} {height}",
        })

    # Public figures

    def render(self, highlight: Optional[Sequence[int]] = None) -> ET.Element:
        """Single figure, optionally shading the triangle bounded by three segment ids."""
        root = self._root(self.viewport, self.viewport)
        triple = None
        if highlight is not None:
            triple = tuple(sorted(highlight))
            if classify_triple(self.arrangement, triple) is not TripleClass.TRIANGLE:
                raise PreconditionError(
                    f"Segments {[self.arrangement.label(i) for i in triple]} do not bound a triangle",
                    parameter="highlight")
        self._draw_figure(root, triple)
        return root

    def render_all_triangles(self, columns: int = SVG_GRID_COLUMNS, force: bool = False) -> ET.Element:
        """Grid of sub-figures, one per counted triangle, in oracle order."""
        triples = enumerate_triangles(self.arrangement, collect=True, force=force).triples
        columns = max(1, min(columns, len(triples)))
        rows = max(1, math.ceil(len(triples) / columns))
        root = self._root(columns * self.viewport, rows * self.viewport)

        for position, triple in enumerate(triples):
            row, column = divmod(position, columns)
            cell = ET.SubElement(root, "g", {
                "class": "triangle",
                "transform": f"translate({column * self.viewport},{row * self.viewport})",
            })
            self._draw_figure(cell, triple)

        logger.info(f"Rendered {len(triples)} triangle sub-figures in a {rows}x{columns} grid")
        return root

    @staticmethod
    def to_string(root: ET.Element) -> str:
        ET.indent(root)
        return ET.tostring(root, encoding="unicode") + "\n"

    @classmethod
    def write(cls, root: ET.Element, path: Union[str, Path]) -> Path:
        path = Path(path)
        try:
            path.write_text(cls.to_string(root), encoding="utf-8")
        except OSError as e:
            raise OutputError(f"Could not write SVG to {path}: {e}", path=str(path), cause=e)
        logger.info(f"SVG written to {path}")
        return path
