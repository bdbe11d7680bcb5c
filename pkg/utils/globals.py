from fractions import Fraction

# Application Constants

# Reference triangle A, B, C; rational feet give rational intersections
REFERENCE_TRIANGLE = (
    (Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(1)),
)
# Alternate triangle for the affine invariance debug check
ALTERNATE_TRIANGLE = (
    (Fraction(0), Fraction(0)),
    (Fraction(3), Fraction(1)),
    (Fraction(1), Fraction(4)),
)
VERTEX_NAMES = ("A", "B", "C")
SIDE_NAMES = ("AB", "BC", "CA")

# Oracle
DEFAULT_MAX_SEGMENTS = 60
DEFAULT_WORKERS = 1

# Random configurations for property suites
RANDOM_MAX_TOTAL_CEVIANS = 9
RANDOM_MAX_DENOMINATOR = 12

# Config files
CONFIG_KEYS = {
    "feet_a": "A",
    "feet_b": "B",
    "feet_c": "C",
}
CONFIG_KEY_ALIASES = {
    "feet_A": "feet_a",
    "feet_B": "feet_b",
    "feet_C": "feet_c",
}

# Sequences and scans
FAMILY_P_2P_MINUS_1 = "1"
FAMILY_P2_2P_PLUS_1 = "2"
VALID_FAMILIES = [FAMILY_P_2P_MINUS_1, FAMILY_P2_2P_PLUS_1]
FAMILY_LABELS = {
    FAMILY_P_2P_MINUS_1: "p(2p-1)",
    FAMILY_P2_2P_PLUS_1: "p^2(2p+1)",
}
SEQUENCE_NAMES = ["d-of-n", "odd-positive"]
TABLE_FORMATS = ["table", "csv", "json"]
SEQUENCE_FORMATS = ["lines", "json"]

# SVG rendering
SVG_VIEWPORT = 1000
SVG_MARGIN = 50
SVG_DECIMALS = 6
SVG_GRID_COLUMNS = 4
SVG_STROKE_COLOR = "#000000"
SVG_SIDE_WIDTH = 3
SVG_CEVIAN_WIDTH = 1.5
SVG_POINT_RADIUS = 8
SVG_POINT_COLOR = "#d62728"
SVG_HIGHLIGHT_COLOR = "#1f77b4"
SVG_HIGHLIGHT_OPACITY = 0.45
HIGHLIGHT_NONE = "none"
HIGHLIGHT_ALL = "all-triangles"
HIGHLIGHT_TRIPLE = "triple"

# Exit codes
EXIT_SUCCESS = 0
EXIT_VALIDATION_ERROR = 1
EXIT_CONSISTENCY_ERROR = 2
EXIT_IO_ERROR = 3
