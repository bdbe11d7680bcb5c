from .base_request import BaseRequest
from geometry import build_arrangement
from rendering import SvgRenderer
from utils import *


class RenderRequest(BaseRequest):

    def __init__(self, args, command: str = "render"):
        logger.info("Initializing RenderRequest")
        super().__init__(args, command=command)
        self.out = getattr(args, "out", None)
        # --highlight MODE [i,j,k]
        highlight = getattr(args, "highlight", None) or [HIGHLIGHT_NONE]
        if isinstance(highlight, str):
            highlight = [highlight]
        self.highlight = highlight[0]
        self.triple = ",".join(highlight[1:]) if len(highlight) > 1 else None
        self.force = bool(getattr(args, "force", False))
        self.run()

    def _parse_triple(self):
        if not self.triple:
            raise PreconditionError(
                "--highlight triple needs segment ids, e.g. --highlight triple 0,3,5", parameter="highlight")
        try:
            ids = [int(item) for item in self.triple.split(",")]
        except ValueError:
            raise PreconditionError(f"Segment ids must be integers, got {self.triple!r}", parameter="highlight")
        if len(ids) != 3:
            raise PreconditionError(f"Expected three segment ids, got {ids}", parameter="highlight")
        return ids

    def execute(self):
        config = self.config_from_args()
        renderer = SvgRenderer(build_arrangement(config))

        if self.highlight == HIGHLIGHT_ALL:
            root = renderer.render_all_triangles(force=self.force)
        elif self.highlight == HIGHLIGHT_TRIPLE:
            root = renderer.render(highlight=self._parse_triple())
        elif self.highlight == HIGHLIGHT_NONE:
            root = renderer.render()
        else:
            raise PreconditionError(f"Unknown highlight mode {self.highlight!r}", parameter="highlight")

        if self.out is None:
            return self.return_success(SvgRenderer.to_string(root))

        path = SvgRenderer.write(root, self.out)
        return self.return_success(f"wrote {path}")
