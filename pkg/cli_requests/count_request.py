from .base_request import BaseRequest
from counting import DProvenance, theorem1_count, verify_affine_invariance, verify_config
from number_theory import count_concurrencies
from geometry import build_arrangement, concurrency_points
from utils import *


class CountRequest(BaseRequest):

    def __init__(self, args, command: str = "count"):
        logger.info("Initializing CountRequest")
        super().__init__(args, command=command)
        self.oracle = bool(getattr(args, "oracle", False))
        self.use_json = bool(getattr(args, "json", False))
        self.force = bool(getattr(args, "force", False))
        self.affine_check = bool(getattr(args, "affine_check", False))
        self.run()

    def execute(self):
        config = self.config_from_args()
        oracle_workers = resolve_workers(self.workers)

        if getattr(self.args, "equal", None) is not None:
            # equal division: d from the Ceva equation, no geometry needed
            n = self.args.equal
            report = theorem1_count(n - 1, n - 1, n - 1, count_concurrencies(n),
                                    provenance=DProvenance.CEVA_EQUATION)
            if self.oracle:
                report = verify_config(config, force=self.force, workers=oracle_workers, report=report)
        elif self.oracle:
            report = verify_config(config, force=self.force, workers=oracle_workers)
        else:
            d = len(concurrency_points(build_arrangement(config), cross_check=True))
            report = theorem1_count(config.a, config.b, config.c, d, provenance=DProvenance.GEOMETRIC)

        affine = None
        if self.affine_check:
            affine = verify_affine_invariance(config, force=self.force, workers=oracle_workers)

        logger.info(f"Count for {config.counts}: {report.triangle_count}")

        if self.use_json:
            body = report.to_dict()
            if affine is not None:
                body["affine_invariant"] = affine.agrees
            return self.return_success(json_out=body)

        lines = [
            f"a={report.a} b={report.b} c={report.c}",
            f"d={report.d} ({report.d_provenance.value})",
            f"triangles={report.triangle_count}",
        ]
        if report.oracle_count is not None:
            status = "agrees" if report.oracle_agrees else "DISAGREES"
            lines.append(f"oracle={report.oracle_count} ({status})")
        if affine is not None:
            lines.append(f"affine check: d={affine.alternate_d} oracle={affine.alternate_count} (agrees)")
        return self.return_success("\n".join(lines))
