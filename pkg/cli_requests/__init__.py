# init for cli_requests folder containing base_request.py, count_request.py, table_request.py, scan_request.py, render_request.py, seq_request.py, and fan_request.py
from .base_request import BaseRequest, CommandResponse
from .count_request import CountRequest
from .table_request import TableRequest, TableRow, table_row
from .scan_request import ScanRequest
from .render_request import RenderRequest
from .seq_request import SeqRequest
from .fan_request import FanRequest
