from .base_request import BaseRequest
from counting import fan_parallel_breakdown
from utils import *


class FanRequest(BaseRequest):

    def __init__(self, args, command: str = "fan"):
        logger.info("Initializing FanRequest")
        super().__init__(args, command=command)
        self.apex = args.apex
        self.parallel = args.parallel
        self.use_json = bool(getattr(args, "json", False))
        self.run()

    def execute(self):
        breakdown = fan_parallel_breakdown(self.apex, self.parallel)

        if self.use_json:
            return self.return_success(json_out={
                "apex": str(self.apex),
                "parallel": str(self.parallel),
                "total": str(breakdown.total),
                "apex_concurrent": str(breakdown.apex_concurrent),
                "all_parallel": str(breakdown.all_parallel),
                "two_parallel_one_apex": str(breakdown.two_parallel_one_apex),
                "triangles": str(breakdown.triangles),
            })
        return self.return_success(f"{breakdown.triangles}\n{breakdown.terms()}")
