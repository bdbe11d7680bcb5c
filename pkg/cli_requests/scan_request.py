from .base_request import BaseRequest
from number_theory import scan_family
from utils import *


class ScanRequest(BaseRequest):

    def __init__(self, args, command: str = "scan"):
        logger.info("Initializing ScanRequest")
        super().__init__(args, command=command)
        self.family = str(args.family)
        self.p_max = args.p_max
        self.count_all = bool(getattr(args, "count_all", False))
        self.use_json = bool(getattr(args, "json", False))
        self.run()

    def execute(self):
        if self.p_max < 2:
            raise PreconditionError(f"--p-max must be >= 2, got {self.p_max}", parameter="p_max")

        records = scan_family(self.family, self.p_max, count_all=self.count_all, workers=self.workers)
        if self.use_json:
            return self.return_success(json_out={
                "family": FAMILY_LABELS[self.family],
                "records": [record.to_dict() for record in records],
            })

        lines = [f"family {self.family}: {FAMILY_LABELS[self.family]}"]
        for record in records:
            line = (f"p={record.p} n={record.n} companion={record.companion_prime} "
                    f"has_solution={str(record.has_solution).lower()}")
            if record.witness is not None:
                line += f" witness={record.witness.indices}"
            if record.solution_count is not None:
                line += f" solutions={record.solution_count}"
            lines.append(line)
        return self.return_success("\n".join(lines))
