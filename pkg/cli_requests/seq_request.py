from .base_request import BaseRequest
from number_theory import count_concurrencies, odd_positive_list
from utils import *


class SeqRequest(BaseRequest):
    """d(n) for n = 2..limit, or the odd n up to limit with an interior concurrency."""

    def __init__(self, args, command: str = "seq"):
        logger.info("Initializing SeqRequest")
        super().__init__(args, command=command)
        self.name = args.name
        self.limit = args.limit
        self.output_format = getattr(args, "format", "lines")
        self.run()

    def execute(self):
        if self.limit < 2:
            raise PreconditionError(f"--limit must be >= 2, got {self.limit}", parameter="limit")

        if self.name == "d-of-n":
            values = ordered_map(count_concurrencies, range(2, self.limit + 1), workers=self.workers)
        elif self.name == "odd-positive":
            values = odd_positive_list(self.limit, workers=self.workers)
        else:
            raise PreconditionError(
                f"Unknown sequence {self.name!r}; expected one of {SEQUENCE_NAMES}", parameter="name")

        logger.info(f"Sequence {self.name} up to {self.limit}: {len(values)} terms")
        if self.output_format == "json":
            return self.return_success(json_out={
                "name": self.name,
                "limit": str(self.limit),
                "values": [str(value) for value in values],
            })
        return self.return_success("\n".join(str(value) for value in values))
